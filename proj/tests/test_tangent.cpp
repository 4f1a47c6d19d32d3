#include "doctest.h"
#include "mvdual/tangent.hpp"

using namespace mvd;

namespace {
Point pt(std::initializer_list<Rat> xs) { return Point(xs); }
Vec dir(std::initializer_list<Rat> xs) { return Vec(xs); }
}  // namespace

TEST_CASE("tail polynomial signs") {
    CHECK(eventual_sign({Rat(0), Rat(1, 3)}) == 1);
    CHECK(eventual_sign({Rat(0), Rat(-1), Rat(100)}) == -1);
    CHECK(eventual_sign({Rat(0), Rat(0)}) == 0);
    // p(t) = -1 + 3t: positive for t > 1/3, negative for large i.
    TailPoly p{Rat(-1), Rat(3)};
    CHECK(eventual_sign(p) == -1);
    long thr = eventual_sign_threshold(p);
    for (long i = thr; i < thr + 50; ++i) CHECK(eval_tail(p, i).sign() == -1);
    CHECK_FALSE(nonneg_for_all(p, 1));
    CHECK(nonneg_for_all({Rat(1), Rat(-3)}, 4));       // 1 - 3t >= 0 for i >= 3
    CHECK_FALSE(nonneg_for_all({Rat(1), Rat(-3)}, 2)); // fails at i = 2
    CHECK(nonneg_for_all({Rat(0)}, 1));
}

TEST_CASE("germs stay in the cube exactly") {
    // x_i = (1/i, 1/i^2) from the corner.
    CurveGerm g(pt({0, 0}), {dir({1, 0}), dir({0, 1})}, 1);
    CHECK(g.at(2) == pt({Rat(1, 2), Rat(1, 4)}));
    CHECK(g.at(10) == pt({Rat(1, 10), Rat(1, 100)}));

    // A germ leaving the cube is rejected.
    CHECK_THROWS_AS(CurveGerm(pt({0}), {dir({-1})}, 1), domain_error);
    CHECK_THROWS_AS(CurveGerm(pt({1}), {dir({1})}, 5), domain_error);

    // Auto threshold: 1/2 + 2/i needs i >= 5 to stay below 1.
    CurveGerm a = CurveGerm::with_auto_i0(pt({Rat(1, 2)}), {dir({Rat(2)})});
    CHECK(a.i0() >= 5);
    CHECK(in_unit_cube(a.at(a.i0())));
}

TEST_CASE("tangent extraction by rational gram-schmidt") {
    CurveGerm g(pt({0, 0}), {dir({1, 0}), dir({0, 1})}, 2);
    TangentTuple u = extract_tangent(g, 2);
    CHECK(u.directions == std::vector<Vec>{dir({1, 0}), dir({0, 1})});

    CurveGerm h(pt({0, 0}), {dir({Rat(1, 4), Rat(1, 4)}), dir({Rat(1, 4), 0})}, 2);
    TangentTuple v = extract_tangent(h, 2);
    CHECK(v.directions[0] == dir({Rat(1, 4), Rat(1, 4)}));
    // Orthogonal residual of (1/4, 0) against span((1,1)).
    CHECK(v.directions[1] == dir({Rat(1, 8), Rat(-1, 8)}));
    CHECK(dot(v.directions[0], v.directions[1]).sign() == 0);

    TangentTuple w = extract_tangent(h, 1);
    CHECK(w.directions.size() == 1);

    // Parallel stages collapse; k = 2 is unreachable.
    CurveGerm par(pt({0, 0}), {dir({Rat(1, 2), 0}), dir({Rat(1, 4), 0})}, 2);
    CHECK_THROWS_AS(extract_tangent(par, 2), domain_error);
    CurveGerm flat(pt({Rat(1, 2)}), {dir({0})}, 1);
    CHECK_THROWS_AS(extract_tangent(flat, 1), domain_error);
}

TEST_CASE("scale invariance of extraction") {
    CurveGerm g(pt({0, 0}), {dir({Rat(1, 4), Rat(1, 4)}), dir({Rat(1, 4), 0})}, 2);
    CurveGerm s(pt({0, 0}), {dir({Rat(1, 2), Rat(1, 2)}), dir({Rat(1, 8), 0})}, 2);
    TangentTuple ug = extract_tangent(g, 2), us = extract_tangent(s, 2);
    for (int i = 0; i < 2; ++i) {
        // Directions agree up to a positive scalar.
        const Vec& a = ug.directions[static_cast<std::size_t>(i)];
        const Vec& b = us.directions[static_cast<std::size_t>(i)];
        std::size_t nz = 0;
        while (a[nz].sign() == 0) ++nz;
        Rat factor = b[nz] / a[nz];
        CHECK(factor.sign() > 0);
        CHECK(b == vscale(factor, a));
    }
}

TEST_CASE("eventual membership of germs in polyhedra") {
    Polyhedron square = full_cube(2);
    CurveGerm g(pt({0, 0}), {dir({1, 0})}, 1);
    CHECK(germ_in_polyhedron(square, g));

    // Germ drifting off the bottom edge.
    Polyhedron edge(2, {Simplex({pt({0, 0}), pt({1, 0})})});
    CurveGerm h(pt({0, 0}), {dir({0, 0}), dir({0, 1})}, 1);
    CHECK_FALSE(germ_in_polyhedron(edge, h));
    CHECK(germ_in_polyhedron(edge, CurveGerm(pt({0, 0}), {dir({1, 0})}, 1)));

    // x_i = (1/i, 1/i^2) eventually enters the lower triangle x1 <= x0.
    Polyhedron tri(2, {Simplex({pt({0, 0}), pt({1, 0}), pt({1, 1})})});
    CurveGerm k(pt({0, 0}), {dir({1, 0}), dir({0, 1})}, 1);
    CHECK(germ_in_polyhedron(tri, k));
    // ... and the mirrored germ does not.
    CurveGerm m(pt({0, 0}), {dir({0, 1}), dir({1, 0})}, 1);
    CHECK_FALSE(germ_in_polyhedron(tri, m));

    CHECK_FALSE(germ_in_polyhedron(Polyhedron(2), k));
    CHECK_THROWS_AS(germ_in_polyhedron(full_cube(3), k), domain_error);
}

TEST_CASE("condition (2): escaping the tangent span") {
    CurveGerm g(pt({0, 0}), {dir({1, 0}), dir({0, 1})}, 1);
    CHECK(tangent_condition_2(g, TangentTuple(pt({0, 0}), {dir({1, 0})})));
    CHECK_FALSE(tangent_condition_2(CurveGerm(pt({0, 0}), {dir({1, 0})}, 1),
                                    TangentTuple(pt({0, 0}), {dir({1, 0})})));
    CHECK_FALSE(tangent_condition_2(g, TangentTuple(pt({0, 0}), {dir({1, 0}), dir({0, 1})})));
    CHECK_THROWS_AS(tangent_condition_2(g, TangentTuple(pt({Rat(1, 2), 0}), {dir({1, 0})})),
                    domain_error);
}

TEST_CASE("witness conditions in isolation") {
    // X is the bottom edge of the square; u points straight up from (0,0).
    Polyhedron x(2, {Simplex({pt({0, 0}), pt({1, 0})})});
    TangentTuple u(pt({0, 0}), {dir({0, 1})});
    Simplex s({pt({0, 0}), pt({0, Rat(1, 2)})});

    // All three conditions hold.
    OutgoingWitness good(s, {0}, {Rat(1, 2)});
    CHECK(verify_outgoing(x, u, good));

    // (2) fails when F = S.
    OutgoingWitness whole(s, {0, 1}, {Rat(1, 2)});
    CHECK_FALSE(verify_outgoing(x, u, whole));

    // (1) fails when the chain exits S.
    OutgoingWitness toolong(s, {0}, {Rat(2)});
    CHECK_FALSE(verify_outgoing(x, u, toolong));

    // (3) fails when S n X strictly exceeds F n X.
    Polyhedron xv(2, {Simplex({pt({0, 0}), pt({0, 1})})});  // X along the chain
    CHECK_FALSE(verify_outgoing(xv, u, good));

    CHECK_THROWS_AS(OutgoingWitness(s, {0}, {Rat(0)}), domain_error);
    CHECK_THROWS_AS(OutgoingWitness(s, {5}, {Rat(1)}), domain_error);
    CHECK_THROWS_AS(OutgoingWitness(s, {}, {Rat(1)}), domain_error);
}

TEST_CASE("full witness check composes the three gates") {
    Polyhedron x(2, {Simplex({pt({0, 0}), pt({1, 0})})});
    Simplex s({pt({0, 0}), pt({0, Rat(1, 2)})});
    OutgoingWitness w(s, {0}, {Rat(1, 2)});

    // Germ running along X; its 1-tangent is horizontal, so the witness
    // chain (vertical) fails containment in S... but first: germ in X, and
    // condition 2 already fails (no residual outside span).
    CurveGerm along(pt({0, 0}), {dir({1, 0})}, 1);
    CHECK_FALSE(check_outgoing_tangent(x, along, 1, w));

    // Germ not in X at all.
    CurveGerm away(pt({0, 0}), {dir({0, 1})}, 1);
    CHECK_FALSE(check_outgoing_tangent(x, away, 1, w));

    // Germ in X with an escaping second stage: condition 2 holds, but the
    // extracted tangent is horizontal and leaves S immediately.
    CurveGerm curved(pt({0, 0}), {dir({1, 0}), dir({0, 1})}, 1);
    Polyhedron square = full_cube(2);
    CHECK_FALSE(check_outgoing_tangent(square, curved, 1, w));

    CHECK_THROWS_AS(check_outgoing_tangent(x, along, 2, w), domain_error);  // k > n-1
}

TEST_CASE("a known outgoing tangent of a non-polyhedral flavour") {
    // The witness machinery can certify an outgoing tangent when X is just
    // the base point: every chain condition is satisfiable with F n X = S n X.
    Polyhedron x(2, {Simplex({pt({0, 0})})});
    TangentTuple u(pt({0, 0}), {dir({0, 1})});
    Simplex s({pt({0, 0}), pt({0, Rat(1, 2)})});
    OutgoingWitness w(s, {0}, {Rat(1, 2)});
    CHECK(verify_outgoing(x, u, w));
    // But no germ inside X = {point} can have a tangent: x_i = x for all i
    // forces a constant germ, which extract_tangent rejects.
    CurveGerm constant(pt({0, 0}), {dir({0, 0})}, 1);
    CHECK(germ_in_polyhedron(x, constant));
    CHECK_THROWS_AS(extract_tangent(constant, 1), domain_error);
}
