#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sts/construct.hpp"
#include "sts/diagram.hpp"
#include "sts/invariants.hpp"
#include "sts/jones.hpp"
#include "sts/snf.hpp"

using namespace sts;

TEST_CASE("crossing-free unknot") {
    auto u = PlanarDiagram::unknot();
    CHECK(u.crossing_count() == 0);
    CHECK(u.component_count() == 1);
    CHECK(u.connected());
    CHECK(u.faces().count() == 2);
    CHECK(u.alternating());
    CHECK(u.unlink(1));
}

TEST_CASE("pd parsing and validation") {
    auto d = PlanarDiagram::parse("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]");
    CHECK(d.crossing_count() == 3);
    CHECK(d.component_count() == 1);
    CHECK_THROWS_AS(PlanarDiagram::parse("PD[X(1,2,3,4)]"), DiagramError);
    CHECK_THROWS_AS(PlanarDiagram::parse("PD[X(1,1,1,1), X(2"), DiagramError);
}

TEST_CASE("torus braid closures") {
    auto t23 = torus_pd(2, 3);
    CHECK(t23.crossing_count() == 3);
    CHECK(t23.component_count() == 1);
    CHECK(t23.writhe() == 3);  // positive torus knot
    CHECK(t23.positive_crossings() == 3);
    CHECK(t23.alternating());
    CHECK(t23.faces().count() == 5);

    auto t24 = torus_pd(2, 4);
    CHECK(t24.component_count() == 2);
    CHECK(t24.crossing_count() == 4);

    auto t33 = torus_pd(3, 3);
    CHECK(t33.component_count() == 3);
}

TEST_CASE("one-crossing kink resolutions") {
    auto kink = braid_closure(2, {1});  // unknot with one positive kink
    REQUIRE(kink.crossing_count() == 1);
    auto r0 = kink.resolved({0, 0});
    auto r1 = kink.resolved({0, 1});
    int comps0 = r0.component_count(), comps1 = r1.component_count();
    CHECK(((comps0 == 1 && comps1 == 2) || (comps0 == 2 && comps1 == 1)));
    CHECK(r0.crossing_count() == 0);
    CHECK(r1.crossing_count() == 0);
}

TEST_CASE("greedy simplification") {
    auto kink = braid_closure(2, {1});
    CHECK(kink.simplified().crossing_count() == 0);
    CHECK(kink.unlink(1));

    auto r2 = braid_closure(2, {1, -1});  // R2-stabilized unknot
    REQUIRE(r2.crossing_count() == 2);
    CHECK(r2.simplified().crossing_count() == 0);
    CHECK(r2.unlink(1));

    auto t23 = torus_pd(2, 3);  // reduced alternating: untouched
    CHECK(t23.simplified().crossing_count() == 3);
}

TEST_CASE("mirror is an involution and negates writhe") {
    auto t23 = torus_pd(2, 3);
    auto m = t23.mirrored();
    CHECK(m.writhe() == -3);
    CHECK(m.mirrored().writhe() == 3);
    CHECK(m.mirrored() == t23);
    CHECK(PlanarDiagram::unknot().mirrored().unlink(1));
}

TEST_CASE("checkerboard colouring exists and splits faces") {
    auto u = PlanarDiagram::unknot();
    auto cbu = u.checkerboard();
    CHECK(cbu.white_faces.size() == 1);

    auto t23 = torus_pd(2, 3);
    auto cb = t23.checkerboard();
    int w = (int)cb.white_faces.size();
    CHECK((w == 2 || w == 3));
    auto cb2 = t23.checkerboard(true);
    CHECK((int)cb2.white_faces.size() == 5 - w);
}

TEST_CASE("goeritz determinant and signature of torus knots") {
    auto t23 = torus_pd(2, 3);
    CHECK(determinant(t23) == 3);
    CHECK(signature_gl(t23) == -2);  // paper's convention anchor
    CHECK(signature_gl(t23.mirrored()) == 2);
    CHECK(determinant(t23.mirrored()) == 3);

    auto t25 = torus_pd(2, 5);
    CHECK(determinant(t25) == 5);
    CHECK(signature_gl(t25) == -4);

    auto t34 = torus_pd(3, 4);
    CHECK(determinant(t34) == 3);
    CHECK(signature_gl(t34) == -6);

    CHECK(determinant(PlanarDiagram::unknot()) == 1);
}

TEST_CASE("signature is colouring independent") {
    for (auto d : {torus_pd(2, 3), torus_pd(2, 5), torus_pd(3, 4), rational_pd(5, 2)}) {
        auto g0 = goeritz(d, false);
        auto g1 = goeritz(d, true);
        std::vector<std::vector<Rat>> q0(g0.matrix.size(), std::vector<Rat>(g0.matrix.size()));
        for (size_t i = 0; i < g0.matrix.size(); i++)
            for (size_t j = 0; j < g0.matrix.size(); j++) q0[i][j] = Rat(g0.matrix[i][j]);
        std::vector<std::vector<Rat>> q1(g1.matrix.size(), std::vector<Rat>(g1.matrix.size()));
        for (size_t i = 0; i < g1.matrix.size(); i++)
            for (size_t j = 0; j < g1.matrix.size(); j++) q1[i][j] = Rat(g1.matrix[i][j]);
        CHECK(symmetric_signature(q0) - g0.correction == symmetric_signature(q1) - g1.correction);
    }
}

TEST_CASE("jones oracle matches goeritz determinant") {
    CHECK(jones_determinant(PlanarDiagram::unknot()) == 1);
    CHECK(jones_at(PlanarDiagram::unknot(), Rat(-1)).re == 1);
    for (auto d : {torus_pd(2, 3), torus_pd(2, 5), torus_pd(3, 4), rational_pd(5, 2),
                   rational_pd(7, 2)}) {
        CHECK(jones_determinant(d) == determinant(d));
    }
    // two-component unlink evaluates to 0 at -1
    PlanarDiagram u2 = PlanarDiagram::assemble({}, 2, {}, {}, std::nullopt, "U2");
    CHECK(jones_determinant(u2) == 0);
}

TEST_CASE("rational knots from fractions") {
    auto tre = rational_pd(3, 1);
    CHECK(tre.crossing_count() == 3);
    CHECK(tre.component_count() == 1);
    CHECK(determinant(tre) == 3);
    CHECK(tre.alternating());

    auto fig8 = rational_pd(5, 2);
    CHECK(fig8.component_count() == 1);
    CHECK(determinant(fig8) == 5);
    CHECK(signature_gl(fig8) == 0);
    CHECK(fig8.crossing_count() == 4);

    auto k52 = rational_pd(7, 2);
    CHECK(determinant(k52) == 7);
    CHECK(k52.crossing_count() == 5);

    auto k62 = rational_pd(11, 3);
    CHECK(determinant(k62) == 11);
    CHECK(k62.crossing_count() == 6);
}

TEST_CASE("pretzel and montesinos determinants") {
    CHECK(determinant(pretzel_pd({3, 3, 2})) == 21);
    CHECK(determinant(pretzel_pd({3, 3, -2})) == 3);
    CHECK(determinant(pretzel_pd({3, 3, -3})) == 9);
    // the Montesinos presentation of 9_42
    auto m = montesinos_pd(0, {{2, 5}, {1, 3}, {-1, 2}});
    CHECK(m.component_count() == 1);
    CHECK(determinant(m) == 7);
}

TEST_CASE("connected sums") {
    auto t = torus_pd(2, 3);
    auto s = PlanarDiagram::connected_sum(t, t);
    CHECK(s.component_count() == 1);
    CHECK(s.crossing_count() == 6);
    CHECK(determinant(s) == 9);
    CHECK(signature_gl(s) == -4);
    CHECK(determinant(PlanarDiagram::connected_sum(t, PlanarDiagram::unknot())) == 3);
}

TEST_CASE("torus closed forms") {
    CHECK(torus_slice_torus_value({2, 3}) == 1);
    CHECK(torus_slice_torus_value({3, 4}) == 3);
    CHECK(torus_slice_torus_value({3, 11}) == 10);
    CHECK(torus_signature({2, 3}) == -2);
    CHECK(torus_signature({2, 5}) == -4);
    CHECK(torus_signature({2, 7}) == -6);
    CHECK(torus_signature({3, 4}) == -6);
    CHECK(torus_signature({3, 5}) == -8);
    CHECK(torus_signature({3, 11}) == -16);  // matches the published value
    // closed form agrees with the diagram computation where feasible
    CHECK(torus_signature({3, 7}) == signature_gl(torus_pd(3, 7)));
    CHECK(torus_signature({4, 5}) == signature_gl(torus_pd(4, 5)));
    CHECK(torus_signature({2, 9}) == signature_gl(torus_pd(2, 9)));
}

TEST_CASE("dt realization of small alternating codes") {
    // trefoil: 4 6 2
    auto t = dt_realize_alternating({4, 6, 2});
    REQUIRE(t.has_value());
    CHECK(t->crossing_count() == 3);
    CHECK(t->alternating());
    CHECK(determinant(*t) == 3);
    // figure eight: 4 6 8 2
    auto f = dt_realize_alternating({4, 6, 8, 2});
    REQUIRE(f.has_value());
    CHECK(determinant(*f) == 5);
    CHECK(signature_gl(*f) == 0);
    // non-realizable pairing
    auto bad = dt_realize_alternating({6, 2, 4});
    if (bad) CHECK(bad->alternating());
}

TEST_CASE("canonical codes identify relabeled diagrams") {
    auto a = torus_pd(2, 3);
    auto b = PlanarDiagram::parse("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]");
    // same knot, generally different labelling: codes must at least be stable
    CHECK(a.canonical_code() == torus_pd(2, 3).canonical_code());
    CHECK(b.canonical_code() == b.mirrored().mirrored().canonical_code());
    CHECK(a.canonical_code() != a.mirrored().canonical_code());
}
