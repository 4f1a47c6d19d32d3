#include "doctest.h"
#include "mvdual/json_io.hpp"
#include "mvdual/sampling.hpp"

using namespace mvd;

namespace {
Point pt(std::initializer_list<Rat> xs) { return Point(xs); }
}  // namespace

TEST_CASE("rational and vector round trips are bit-exact") {
    for (const char* s : {"0", "1", "-3/7", "22/7", "1000000000000000000000/7"}) {
        Rat r = Rat::from_string(s);
        CHECK(rat_from_json(rat_to_json(r)) == r);
        CHECK(rat_to_json(r).get<std::string>() == r.str());
    }
    Vec v = pt({Rat(1, 3), Rat(0), Rat(7, 9)});
    CHECK(vec_from_json(vec_to_json(v)) == v);
    CHECK_THROWS_AS(rat_from_json(Json(0.5)), parse_error);
}

TEST_CASE("polyhedron json") {
    Polyhedron p(2, {Simplex({pt({0, 0}), pt({1, 0}), pt({0, 1})}),
                     Simplex({pt({Rat(1, 2), Rat(1, 2)})})});
    Json j = poly_to_json(p);
    CHECK(j["dim"] == 2);
    Polyhedron q = poly_from_json(j);
    CHECK(q == p);
    CHECK(poly_to_json(q).dump() == j.dump());

    // Empty polyhedron round trip.
    Polyhedron e(3);
    CHECK(poly_from_json(poly_to_json(e)) == e);

    CHECK_THROWS_AS(poly_from_json(parse_json("{\"dim\": 1}")), parse_error);
    CHECK_THROWS_AS(poly_from_json(parse_json("{\"dim\":1,\"simplices\":[[[\"3/2\"]]]}")),
                    parse_error);
}

TEST_CASE("presentation json") {
    Presentation p(2, {{parse_term("x0 (+) x1"), parse_term("1")}});
    Presentation q = presentation_from_json(presentation_to_json(p));
    CHECK(q.arity == 2);
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relations[0].first == p.relations[0].first);
    CHECK(q.relations[0].second == p.relations[0].second);
}

TEST_CASE("plfunction json") {
    PLFunction f = compile(parse_term("(x0 (+) x0) /\\ ~x0"), 1);
    PLFunction g = plfunction_from_json(plfunction_to_json(f));
    CHECK(pl_equal(f, g));
    CHECK(plfunction_to_json(f).dump() == plfunction_to_json(g).dump());
}

TEST_CASE("algebra and spectrum json") {
    FiniteMVAlgebra a = algebra_product(chain(2), chain(1));
    FiniteMVAlgebra b = algebra_from_json(algebra_to_json(a));
    CHECK(a == b);

    Spectrum s = spectrum(a);
    Spectrum t = spectrum_from_json(spectrum_to_json(s));
    CHECK(t.labels == s.labels);
    CHECK(t.points == s.points);
}

TEST_CASE("germ, tangent, witness, zmap, homspec json") {
    CurveGerm g(pt({0, 0}), {pt({1, 0}), pt({0, 1})}, 2);
    CurveGerm g2 = germ_from_json(germ_to_json(g));
    CHECK(g2.base() == g.base());
    CHECK(g2.coeffs() == g.coeffs());
    CHECK(g2.i0() == g.i0());

    TangentTuple u(pt({0, 0}), {pt({Rat(1, 2), 0})});
    TangentTuple u2 = tangent_from_json(tangent_to_json(u));
    CHECK(u2.base == u.base);
    CHECK(u2.directions == u.directions);

    OutgoingWitness w(Simplex({pt({0, 0}), pt({0, Rat(1, 2)})}), {0}, {Rat(1, 2)});
    OutgoingWitness w2 = witness_from_json(witness_to_json(w));
    CHECK(w2.simplex == w.simplex);
    CHECK(w2.face == w.face);
    CHECK(w2.lambdas == w.lambdas);

    ZMap z(1, full_cube(1), {compile(parse_term("~x0"), 1)});
    ZMap z2 = zmap_from_json(zmap_to_json(z));
    CHECK(z2.source_dim == 1);
    REQUIRE(z2.domain.has_value());
    CHECK(poly_equal(*z2.domain, *z.domain));
    CHECK(pl_equal(z2.components[0], z.components[0]));

    HomSpec h(Presentation(1, {}), Presentation(1, {}), {parse_term("~x0")});
    HomSpec h2 = homspec_from_json(homspec_to_json(h));
    CHECK(h2.images[0] == h.images[0]);
}

TEST_CASE("emitted json reparses identically (determinism)") {
    Sampler s(42);
    for (int i = 0; i < 10; ++i) {
        Polyhedron p = s.polyhedron(2, 3, 4);
        std::string one = poly_to_json(p).dump();
        std::string two = poly_to_json(poly_from_json(parse_json(one))).dump();
        CHECK(one == two);
    }
}
