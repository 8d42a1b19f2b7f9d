#include "sts/jones.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sts {

namespace {

constexpr int kBracketCrossingLimit = 16;

void laurent_add(Laurent& a, int exp, const Int& c) {
    if (c == 0) return;
    auto [it, ins] = a.try_emplace(exp, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) laurent_add(r, ea + eb, ca * cb);
    return r;
}

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d) {
    int n = d.crossing_count();
    if (n > kBracketCrossingLimit)
        throw DiagramError("state sum limited to " + std::to_string(kBracketCrossingLimit) +
                           " crossings");
    // circle counts per state via a tiny indexed union-find over edges
    std::vector<int> edge_ids = d.edges();
    std::map<int, int> idx;
    for (int i = 0; i < (int)edge_ids.size(); i++) idx[edge_ids[i]] = i;
    int ne = (int)edge_ids.size();

    Laurent total;
    std::vector<int> uf(ne);
    for (uint32_t state = 0; state < (1u << n); state++) {
        for (int i = 0; i < ne; i++) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
        int a_minus_b = 0;
        for (int c = 0; c < n; c++) {
            const auto& q = d.crossings()[c].e;
            if ((state >> c) & 1) {  // B-smoothing
                unite(idx[q[1]], idx[q[2]]);
                unite(idx[q[3]], idx[q[0]]);
                a_minus_b -= 1;
            } else {  // A-smoothing
                unite(idx[q[0]], idx[q[1]]);
                unite(idx[q[2]], idx[q[3]]);
                a_minus_b += 1;
            }
        }
        int circles = d.free_loop_count();
        for (int i = 0; i < ne; i++)
            if (find(i) == i) circles++;
        if (ne == 0 && circles == 0) circles = 0;  // empty diagram
        // contribute A^{a-b} * delta^{circles-1}, delta = -A^2 - A^{-2}
        Laurent term{{a_minus_b, 1}};
        Laurent delta{{2, -1}, {-2, -1}};
        for (int k = 1; k < circles; k++) term = laurent_mul(term, delta);
        if (circles == 0) {
            // empty link: <> = delta^{-1} never needed for valid diagrams
            throw DiagramError("bracket of the empty diagram is not defined");
        }
        for (auto& [e, c] : term) laurent_add(total, e, c);
    }
    return total;
}

Laurent jones_in_x(const PlanarDiagram& d) {
    Laurent br = kauffman_bracket(d);
    int w = d.writhe();
    // multiply by (-A^3)^{-w}
    Laurent res;
    for (auto& [e, c] : br) {
        int exp = e - 3 * w;
        Int coeff = (w % 2 == 0) ? c : -c;
        laurent_add(res, exp, coeff);
    }
    // collect in x = A^{-2}
    Laurent in_x;
    for (auto& [e, c] : res) {
        if (e % 2 != 0) throw DiagramError("bracket parity violation");
        laurent_add(in_x, -e / 2, c);
    }
    return in_x;
}

GaussRat jones_at(const PlanarDiagram& d, const Rat& t) {
    Laurent v = jones_in_x(d);
    // x = sqrt(t): rational if t = r^2, imaginary rational if t = -r^2
    auto rational_sqrt = [](const Rat& s) -> std::optional<Rat> {
        if (s < 0) return std::nullopt;
        Int num = boost::multiprecision::numerator(s), den = boost::multiprecision::denominator(s);
        Int rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
        if (rn * rn == num && rd * rd == den) return Rat(rn, rd);
        return std::nullopt;
    };
    Rat re = 0, im = 0;
    bool imaginary = false;
    Rat r;
    if (auto s = rational_sqrt(t)) {
        r = *s;
    } else if (auto s2 = rational_sqrt(-t)) {
        r = *s2;
        imaginary = true;
    } else {
        throw DiagramError("unsupported exact evaluation point");
    }
    if (r == 0) throw DiagramError("evaluation at t = 0 is not defined");
    for (auto& [e, c] : v) {
        // x^e with x = r or x = i*r
        Rat mag = 1;
        int ae = e < 0 ? -e : e;
        for (int k = 0; k < ae; k++) mag *= r;
        if (e < 0) mag = 1 / mag;
        if (!imaginary) {
            re += Rat(c) * mag;
        } else {
            int phase = ((e % 4) + 4) % 4;  // i^e
            switch (phase) {
                case 0: re += Rat(c) * mag; break;
                case 1: im += Rat(c) * mag; break;
                case 2: re -= Rat(c) * mag; break;
                case 3: im -= Rat(c) * mag; break;
            }
        }
    }
    return {re, im};
}

Int jones_determinant(const PlanarDiagram& d) {
    if (d.crossing_count() == 0 && d.free_loop_count() == 0) return 0;
    GaussRat v = jones_at(d, Rat(-1));
    Rat mod2 = v.re * v.re + v.im * v.im;
    Int num = boost::multiprecision::numerator(mod2);
    Int den = boost::multiprecision::denominator(mod2);
    if (den != 1) throw DiagramError("determinant oracle: non-integral value");
    Int r = boost::multiprecision::sqrt(num);
    if (r * r != num) throw DiagramError("determinant oracle: non-square modulus");
    return r;
}

}  // namespace sts
