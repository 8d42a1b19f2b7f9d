#pragma once

// Exact coefficient rings: arbitrary-precision integers and rationals,
// prime fields, and dense univariate polynomials over a field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sts {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <unsigned P>
struct Fp {
    static_assert(P >= 2);
    uint32_t v = 0;

    Fp() = default;
    Fp(long long x) {
        long long r = x % (long long)P;
        if (r < 0) r += P;
        v = (uint32_t)r;
    }
    explicit Fp(const Int& x) {
        Int r = x % P;
        if (r < 0) r += P;
        v = r.convert_to<uint32_t>();
    }

    friend Fp operator+(Fp a, Fp b) { return Fp((long long)a.v + b.v); }
    friend Fp operator-(Fp a, Fp b) { return Fp((long long)a.v - b.v); }
    friend Fp operator*(Fp a, Fp b) { return Fp((long long)a.v * b.v); }
    Fp operator-() const { return Fp(-(long long)v); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp inv() const {
        // extended Euclid; P prime and v != 0
        int64_t a = v, m = P, x0 = 0, x1 = 1;
        while (a > 1) {
            int64_t q = a / m;
            a -= q * m;
            std::swap(a, m);
            x1 -= q * x0;
            std::swap(x0, x1);
        }
        return Fp((long long)x1);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
};

using F2 = Fp<2>;
using F3 = Fp<3>;

// ---------------------------------------------------------------------------
// Ring operations used by the generic linear algebra. Specialized per scalar.
// ---------------------------------------------------------------------------

template <class R>
struct ring_ops;

template <>
struct ring_ops<Int> {
    static constexpr bool is_field = false;
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static bool is_zero(const Int& a) { return a == 0; }
    static bool is_unit(const Int& a) { return a == 1 || a == -1; }
    // euclidean size for pivot selection
    static double size(const Int& a) { return (double)boost::multiprecision::abs(a).convert_to<double>(); }
    static bool divides(const Int& a, const Int& b) { return a != 0 && b % a == 0; }
    static Int quot(const Int& a, const Int& b) { return a / b; }
    // division with remainder of smaller absolute value
    static Int round_quot(const Int& a, const Int& b) {
        Int q = a / b, r = a % b;
        if (r != 0 && 2 * boost::multiprecision::abs(r) > boost::multiprecision::abs(b))
            q += (a < 0) == (b < 0) ? 1 : -1;
        return q;
    }
    static Int normalize_unit(const Int& a) { return a < 0 ? Int(-1) : Int(1); }  // a = u * canonical
    static std::string str(const Int& a) { return a.str(); }
};

template <class F>
struct field_ops_base {
    static constexpr bool is_field = true;
    static F zero() { return F(0); }
    static F one() { return F(1); }
    static bool is_zero(const F& a) { return a == F(0); }
    static bool is_unit(const F& a) { return a != F(0); }
    static double size(const F&) { return 1.0; }
    static bool divides(const F& a, const F& b) { (void)b; return a != F(0); }
    static F quot(const F& a, const F& b) { return a / b; }
    static F round_quot(const F& a, const F& b) { return a / b; }
    static F normalize_unit(const F& a) { return a; }
};

template <>
struct ring_ops<Rat> : field_ops_base<Rat> {
    static std::string str(const Rat& a) {
        return boost::multiprecision::numerator(a).str() +
               (boost::multiprecision::denominator(a) == 1
                    ? ""
                    : "/" + boost::multiprecision::denominator(a).str());
    }
};

template <unsigned P>
struct ring_ops<Fp<P>> : field_ops_base<Fp<P>> {
    static std::string str(const Fp<P>& a) { return std::to_string(a.v); }
};

// ---------------------------------------------------------------------------
// Dense polynomial in one variable over a field. Used for SNF over Q[H]
// and F_p[H]; coefficient index = power of H.
// ---------------------------------------------------------------------------

template <class F>
struct Poly {
    std::vector<F> c;  // c[k] * H^k, no trailing zeros

    Poly() = default;
    Poly(F a) {
        if (a != F(0)) c = {a};
    }
    static Poly monomial(F a, int k) {
        Poly p;
        if (a != F(0)) {
            p.c.assign(k + 1, F(0));
            p.c[k] = a;
        }
        return p;
    }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    bool zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == F(0)) c.pop_back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0));
        for (size_t i = 0; i < a.c.size(); i++) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); i++) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F(0));
        for (size_t i = 0; i < a.c.size(); i++)
            for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // division with remainder
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        q = {};
        r = a;
        if (b.zero()) return;
        F lead_inv = F(1) / b.c.back();
        while (!r.zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F f = r.c.back() * lead_inv;
            Poly m = monomial(f, k);
            q = q + m;
            r = r - m * b;
        }
    }
};

template <class F>
struct ring_ops<Poly<F>> {
    using P = Poly<F>;
    static constexpr bool is_field = false;
    static P zero() { return {}; }
    static P one() { return P(F(1)); }
    static bool is_zero(const P& a) { return a.zero(); }
    static bool is_unit(const P& a) { return a.degree() == 0; }
    static double size(const P& a) { return (double)a.degree() + 1.0; }
    static bool divides(const P& a, const P& b) {
        if (a.zero()) return false;
        P q, r;
        P::divmod(b, a, q, r);
        return r.zero();
    }
    static P quot(const P& a, const P& b) {
        P q, r;
        P::divmod(a, b, q, r);
        return q;
    }
    static P round_quot(const P& a, const P& b) { return quot(a, b); }
    static P normalize_unit(const P& a) { return P(a.c.back()); }
    static std::string str(const P& a) {
        if (a.zero()) return "0";
        std::string s;
        for (int k = a.degree(); k >= 0; k--) {
            if (a.c[k] == F(0)) continue;
            if (!s.empty()) s += "+";
            s += ring_ops<F>::str(a.c[k]);
            if (k == 1) s += "*H";
            if (k > 1) s += "*H^" + std::to_string(k);
        }
        return s;
    }
};

}  // namespace sts
