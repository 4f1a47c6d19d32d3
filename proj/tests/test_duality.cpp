#include "doctest.h"
#include "mvdual/duality.hpp"

using namespace mvd;

namespace {
Point pt(std::initializer_list<Rat> xs) { return Point(xs); }

Presentation pres(int arity, std::initializer_list<std::pair<const char*, const char*>> rels) {
    std::vector<std::pair<Term, Term>> out;
    for (const auto& [s, t] : rels) out.emplace_back(parse_term(s), parse_term(t));
    return Presentation(arity, std::move(out));
}
}  // namespace

TEST_CASE("varieties of simple presentations") {
    Polyhedron v1 = variety(pres(1, {{"x0 (+) x0", "1"}}));
    Polyhedron upper(1, {Simplex({pt({Rat(1, 2)}), pt({Rat(1)})})});
    CHECK(poly_equal(v1, upper));

    Polyhedron v2 = variety(pres(1, {{"x0", "~x0"}}));
    Polyhedron half(1, {Simplex({pt({Rat(1, 2)})})});
    CHECK(poly_equal(v2, half));

    // No relations: the whole cube (free algebra dual).
    Polyhedron v3 = variety(Presentation(2, {}));
    CHECK(poly_equal(v3, full_cube(2)));

    // Inconsistent presentation: empty variety.
    Polyhedron v4 = variety(pres(1, {{"0", "1"}}));
    CHECK(v4.empty());
}

TEST_CASE("ideal membership") {
    Polyhedron half(1, {Simplex({pt({Rat(1, 2)})})});
    CHECK(in_ideal(half, parse_term("x0"), parse_term("~x0")));
    CHECK_FALSE(in_ideal(full_cube(1), parse_term("x0"), parse_term("~x0")));
    Polyhedron upper(1, {Simplex({pt({Rat(1, 2)}), pt({Rat(1)})})});
    CHECK(in_ideal(upper, parse_term("x0 (+) x0"), parse_term("1")));
    // Antitone in the polyhedron.
    CHECK(in_ideal(half, parse_term("x0 (+) x0"), parse_term("1")));
}

TEST_CASE("radical equality goes through varieties") {
    auto s = pres(1, {{"x0", "~x0"}});
    auto t = pres(1, {{"x0 (+) x0", "1"}, {"~x0 (+) ~x0", "1"}});
    CHECK(radical_equal(s, t));  // both cut out {1/2}

    CHECK_FALSE(radical_equal(Presentation(1, {}), pres(1, {{"0", "1"}})));

    auto dup = pres(1, {{"x0", "~x0"}, {"x0", "~x0"}});
    CHECK(radical_equal(s, dup));
    CHECK_THROWS_AS(radical_equal(s, Presentation(2, {})), domain_error);
}

TEST_CASE("hom well-definedness") {
    // Identity on identical presentations.
    auto p = pres(1, {{"x0 (+) x0", "1"}});
    HomSpec ident(p, p, {parse_term("x0")});
    CHECK(check_hom(ident));

    // The free target does not satisfy the source relation anywhere dense.
    HomSpec bad(p, Presentation(1, {}), {parse_term("x0")});
    CHECK_FALSE(check_hom(bad));

    // Into a contradictory target everything is vacuously well-defined.
    HomSpec vac(p, pres(1, {{"0", "1"}}), {parse_term("~x0 & x0")});
    CHECK(check_hom(vac));

    // The fixed-point relation transports along x0 |-> ~x0.
    auto fix = pres(1, {{"x0", "~x0"}});
    HomSpec flip(fix, fix, {parse_term("~x0")});
    CHECK(check_hom(flip));
}

TEST_CASE("dual zmaps") {
    auto free1 = Presentation(1, {});
    HomSpec ident(free1, free1, {parse_term("x0")});
    ZMap dual_id = dual_zmap(ident);
    CHECK(zmap_equal_on(dual_id, identity_zmap(1), full_cube(1)));

    HomSpec negh(free1, free1, {parse_term("~x0")});
    ZMap dn = dual_zmap(negh);
    CHECK(pl_equal(dn.components[0], compile(parse_term("~x0"), 1)));

    // The dual sends variety(target) into variety(source): check on
    // barycenters and vertices of the target variety.
    auto src = pres(1, {{"x0 (+) x0", "1"}});
    auto tgt = pres(1, {{"x0", "~x0"}});
    HomSpec h(src, tgt, {parse_term("x0 (+) x0 (+) x0")});
    REQUIRE(check_hom(h));
    ZMap d = dual_zmap(h);
    Polyhedron vs = variety(src);
    REQUIRE(d.domain.has_value());
    for (const auto& s : d.domain->simplices()) {
        CHECK(vs.contains(d.apply(s.barycenter())));
        for (const auto& v : s.vertices()) CHECK(vs.contains(d.apply(v)));
    }
    CHECK_THROWS_AS(dual_zmap(HomSpec(src, Presentation(1, {}), {parse_term("x0")})),
                    domain_error);
}

TEST_CASE("contravariant functoriality on a hand-built pair") {
    // g: free(1) -> free(1), x0 |-> x0 (+) x0 ; h likewise with ~x0.
    auto free1 = Presentation(1, {});
    HomSpec g(free1, free1, {parse_term("x0 (+) x0")});
    HomSpec h(free1, free1, {parse_term("~x0")});
    HomSpec hg = compose_homs(h, g);  // x0 |-> ~x0 (+) ~x0
    ZMap lhs = dual_zmap(hg);
    ZMap rhs = compose(dual_zmap(g), dual_zmap(h));
    CHECK(zmap_equal_on(lhs, rhs, full_cube(1)));
}

TEST_CASE("galois closure stability") {
    auto s = pres(1, {{"x0 (+) x0", "1"}});
    Polyhedron v = variety(s);
    // A consequence already in the ideal does not shrink the variety.
    Term a = parse_term("x0 (+) x0 (+) x0"), b = parse_term("1");
    REQUIRE(in_ideal(v, a, b));
    Presentation enlarged = s;
    enlarged.relations.emplace_back(a, b);
    CHECK(poly_equal(variety(enlarged), v));

    // Antitonicity: more relations, smaller variety.
    Presentation more = s;
    more.relations.emplace_back(parse_term("x0"), parse_term("1"));
    CHECK(poly_subset(variety(more), v));
}

TEST_CASE("evaluation onto witness") {
    auto p = pres(1, {{"x0 (+) x0", "1"}});
    Polyhedron v = variety(p);
    ProvenancedFunction f{parse_term("x0"), compile(parse_term("x0"), 1).restricted_to(v)};
    CHECK(evaluation_onto_check(p, f) == parse_term("x0"));

    // Constant one restricted to a nonempty variety.
    ProvenancedFunction c1{parse_term("1"), compile(parse_term("1"), 1).restricted_to(v)};
    CHECK(evaluation_onto_check(p, c1) == Term::one());

    // On the diagonal of the square, x0 (+) x1 agrees with x0 (+) x0.
    Presentation diag(2, {{parse_term("x0"), parse_term("x1")}});
    ProvenancedFunction g{parse_term("x0 (+) x1"),
                          compile(parse_term("x0 (+) x0"), 2).restricted_to(variety(diag))};
    CHECK(evaluation_onto_check(diag, g) == parse_term("x0 (+) x1"));

    ProvenancedFunction wrong{parse_term("x0"),
                              compile(parse_term("~x0"), 1).restricted_to(v)};
    CHECK_THROWS_AS(evaluation_onto_check(p, wrong), domain_error);
}
