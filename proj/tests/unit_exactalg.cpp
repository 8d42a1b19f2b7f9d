#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sts/snf.hpp"

#include <random>

using namespace sts;

namespace {

SparseMat<Int> from_rows(const std::vector<std::vector<int>>& rows) {
    int n = (int)rows.size(), m = n ? (int)rows[0].size() : 0;
    SparseMat<Int> a(n, m);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < m; j++) a.set(i, j, rows[i][j]);
    return a;
}

template <class R>
void check_snf_consistency(const SparseMat<R>& a) {
    auto s = smith_normal_form(a, true);
    // L * A * R == D
    auto d = (*s.left) * a * (*s.right);
    for (int i = 0; i < a.rows(); i++)
        for (auto& [j, v] : d.row(i)) {
            if (i == j && i < (int)s.diag.size())
                CHECK(v == s.diag[i]);
            else
                CHECK(ring_ops<R>::is_zero(v));
        }
    // transforms really are mutually inverse
    auto li = (*s.left) * (*s.left_inv);
    auto ri = (*s.right) * (*s.right_inv);
    CHECK(li == SparseMat<R>::identity(a.rows()));
    CHECK(ri == SparseMat<R>::identity(a.cols()));
    // divisibility chain
    for (int i = 0; i + 1 < s.rank; i++) CHECK(ring_ops<R>::divides(s.diag[i], s.diag[i + 1]));
}

}  // namespace

TEST_CASE("snf of diag(2,3) over Z is (1,6)") {
    auto a = from_rows({{2, 0}, {0, 3}});
    auto s = smith_normal_form(a);
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);
    check_snf_consistency(a);
}

TEST_CASE("snf of zero matrix") {
    SparseMat<Int> a(3, 4);
    auto s = smith_normal_form(a);
    CHECK(s.rank == 0);
    for (auto& d : s.diag) CHECK(d == 0);
}

TEST_CASE("rank and kernel of identity") {
    auto a = SparseMat<Int>::identity(5);
    CHECK(rank(a) == 5);
    CHECK(kernel_basis(a).cols() == 0);
}

TEST_CASE("kernel basis spans the kernel") {
    auto a = from_rows({{2, 4, 6}, {1, 2, 3}});
    CHECK(rank(a) == 1);
    auto k = kernel_basis(a);
    REQUIRE(k.cols() == 2);
    for (int j = 0; j < k.cols(); j++) {
        std::vector<Int> v(3, 0);
        for (int i = 0; i < 3; i++) v[i] = k.get(i, j);
        auto av = a.apply(v);
        for (auto& x : av) CHECK(x == 0);
    }
}

TEST_CASE("single row (H, 2) over Q[H]: rank 1, kernel rank 1") {
    using P = Poly<Rat>;
    SparseMat<P> a(1, 2);
    a.set(0, 0, P::monomial(Rat(1), 1));
    a.set(0, 1, P(Rat(2)));
    CHECK(rank(a) == 1);
    CHECK(kernel_basis(a).cols() == 1);
    check_snf_consistency(a);
}

TEST_CASE("snf over Q[H] with divisibility") {
    using P = Poly<Rat>;
    SparseMat<P> a(2, 2);
    a.set(0, 0, P::monomial(Rat(1), 2));  // H^2
    a.set(1, 1, P::monomial(Rat(1), 1));  // H
    auto s = smith_normal_form(a, true);
    REQUIRE(s.rank == 2);
    CHECK(s.diag[0].degree() == 1);
    CHECK(s.diag[1].degree() == 2);
    check_snf_consistency(a);
}

TEST_CASE("random integer matrices: snf props and bareiss determinant") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 60; trial++) {
        int n = 1 + (int)(rng() % 5);
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        std::vector<std::vector<Int>> dense(n, std::vector<Int>(n));
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                rows[i][j] = val(rng);
                dense[i][j] = rows[i][j];
            }
        auto a = from_rows(rows);
        auto s = smith_normal_form(a, true);
        check_snf_consistency(a);
        Int det = det_bareiss(dense);
        Int prod = 1;
        for (int i = 0; i < s.rank; i++) prod *= s.diag[i];
        if (s.rank < n)
            CHECK(det == 0);
        else
            CHECK((det == prod || det == -prod));
    }
}

TEST_CASE("symmetric signature basics") {
    CHECK(symmetric_signature({}) == 0);
    CHECK(symmetric_signature({{Rat(3)}}) == 1);
    CHECK(symmetric_signature({{Rat(-2), Rat(0)}, {Rat(0), Rat(5)}}) == 0);
    // hyperbolic plane
    CHECK(symmetric_signature({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 0);
    CHECK(symmetric_signature({{Rat(-2), Rat(1)}, {Rat(1), Rat(-2)}}) == -2);
}

TEST_CASE("symmetric signature against eigen-counting on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 40; trial++) {
        int n = 1 + (int)(rng() % 5);
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, 0));
        for (int i = 0; i < n; i++)
            for (int j = i; j < n; j++) {
                int v = val(rng);
                m[i][j] = v;
                m[j][i] = v;
            }
        // oracle: signature = sign changes via characteristic polynomial is
        // overkill; instead verify congruence invariance under random
        // unimodular transforms
        int sig = symmetric_signature(m);
        for (int rep = 0; rep < 3; rep++) {
            int a = (int)(rng() % n), b = (int)(rng() % n);
            if (a == b) continue;
            int f = val(rng);
            // m <- E^T m E with E: col_a += f * col_b
            for (int i = 0; i < n; i++) m[i][a] += Rat(f) * m[i][b];
            for (int j = 0; j < n; j++) m[a][j] += Rat(f) * m[b][j];
            CHECK(symmetric_signature(m) == sig);
        }
    }
}
