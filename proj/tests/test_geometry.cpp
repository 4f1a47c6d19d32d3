#include <algorithm>

#include "doctest.h"
#include "mvdual/geometry.hpp"

using namespace mvd;

namespace {

Point pt(std::initializer_list<Rat> xs) { return Point(xs); }

Simplex simp(std::initializer_list<Point> vs) { return Simplex(std::vector<Point>(vs)); }

AffineFunctional af(std::initializer_list<Rat> normal, Rat off) {
    return AffineFunctional{Vec(normal), off};
}

Rat total_volume(const std::vector<Simplex>& simps) {
    Rat v(0);
    for (const auto& s : simps) v += s.volume();
    return v;
}

}  // namespace

TEST_CASE("simplex basics") {
    auto t = simp({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    CHECK(t.contains(pt({Rat(1, 4), Rat(1, 4)})));
    CHECK_FALSE(t.contains(pt({1, 1})));
    CHECK(t.volume() == Rat(1, 2));
    auto seg = simp({pt({0}), pt({1})});
    CHECK(seg.contains(pt({Rat(1, 3)})));
    CHECK_THROWS_AS(simp({pt({0, 0}), pt({1, 1}), pt({2, 2})}), domain_error);
}

TEST_CASE("simplex facets and hull equations") {
    auto t = simp({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    auto facets = t.facet_halfspaces();
    CHECK(facets.size() == 3);
    for (const auto& h : facets)
        for (const auto& v : t.vertices()) CHECK(h.eval(v) <= Rat(0));
    CHECK(t.hull_equations().empty());

    auto seg = simp({pt({0, Rat(1, 2)}), pt({1, Rat(1, 2)})});
    auto eqs = seg.hull_equations();
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0].eval(pt({Rat(1, 3), Rat(1, 2)})) == Rat(0));
    CHECK(eqs[0].eval(pt({Rat(1, 3), Rat(1, 3)})) != Rat(0));
}

TEST_CASE("convex cell canonicalizes to extreme points") {
    // Interior and duplicate points are pruned.
    ConvexCell c({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({Rat(1, 2), Rat(1, 2)}),
                  pt({0, 0})});
    CHECK(c.vertices().size() == 4);
    CHECK(c.dim() == 2);
    CHECK(c.contains(pt({Rat(1, 3), Rat(2, 3)})));
    CHECK_FALSE(c.contains(pt({Rat(3, 2), Rat(1, 2)})));
}

TEST_CASE("split unit square at x = 1/2") {
    ConvexCell square({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
    auto [left, right] = split_cell(square, af({1, 0}, Rat(-1, 2)));
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(left->vertices().size() == 4);
    CHECK(right->vertices().size() == 4);
    CHECK(left->contains(pt({Rat(1, 2), Rat(1, 4)})));
    CHECK(right->contains(pt({Rat(1, 2), Rat(1, 4)})));
    CHECK_FALSE(left->contains(pt({Rat(3, 4), Rat(1, 4)})));
}

TEST_CASE("split keeps cells entirely on one side") {
    ConvexCell seg({pt({0}), pt({1})});
    auto [left, right] = split_cell(seg, af({1}, Rat(1)));  // x + 1, positive on [0,1]
    CHECK_FALSE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(right->vertices().size() == 2);
}

TEST_CASE("split triangle by x+y-1/2") {
    ConvexCell tri({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    auto [small, quad] = split_cell(tri, af({1, 1}, Rat(-1, 2)));
    REQUIRE(small.has_value());
    REQUIRE(quad.has_value());
    CHECK(small->vertices() ==
          std::vector<Point>{pt({0, 0}), pt({0, Rat(1, 2)}), pt({Rat(1, 2), 0})});
    CHECK(quad->vertices().size() == 4);
    bool has_cut1 = false, has_cut2 = false;
    for (const auto& v : quad->vertices()) {
        if (v == pt({Rat(1, 2), 0})) has_cut1 = true;
        if (v == pt({0, Rat(1, 2)})) has_cut2 = true;
    }
    CHECK(has_cut1);
    CHECK(has_cut2);
    // Membership is preserved by the split (both closed sides together).
    for (const auto& p : {pt({Rat(1, 8), Rat(1, 8)}), pt({Rat(1, 2), Rat(1, 4)}),
                          pt({Rat(1, 4), Rat(1, 4)})}) {
        bool inside = tri.contains(p);
        bool covered = small->contains(p) || quad->contains(p);
        CHECK(inside == covered);
    }
}

TEST_CASE("triangulate square and simplex") {
    ConvexCell square({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
    auto tris = triangulate(square);
    CHECK(tris.size() == 2);
    CHECK(total_volume(tris) == Rat(1));

    ConvexCell tricell({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    auto own = triangulate(tricell);
    REQUIRE(own.size() == 1);
    CHECK(own[0] == simp({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
}

TEST_CASE("triangulate hexagon by fan") {
    // Rational hexagon; fan from the smallest vertex gives 4 triangles.
    ConvexCell hex({pt({Rat(1, 4), 0}), pt({Rat(3, 4), 0}), pt({1, Rat(1, 2)}),
                    pt({Rat(3, 4), 1}), pt({Rat(1, 4), 1}), pt({0, Rat(1, 2)})});
    CHECK(hex.vertices().size() == 6);
    auto tris = triangulate(hex);
    CHECK(tris.size() == 4);
    // Exact area via the shoelace-equivalent simplex volumes.
    CHECK(total_volume(tris) == Rat(3, 4));
    // Pairwise disjoint interiors: barycenter of one is not interior to another.
    for (std::size_t i = 0; i < tris.size(); ++i) {
        Point b = tris[i].barycenter();
        for (std::size_t j = 0; j < tris.size(); ++j)
            if (i != j) CHECK_FALSE(tris[j].contains(b));
    }
    // Union equals the cell: exact membership sampling on a grid.
    for (int ix = 0; ix <= 8; ++ix) {
        for (int iy = 0; iy <= 8; ++iy) {
            Point p = pt({Rat(ix, 8), Rat(iy, 8)});
            bool in_union = false;
            for (const auto& t : tris) in_union = in_union || t.contains(p);
            CHECK(in_union == hex.contains(p));
        }
    }
}

TEST_CASE("polyhedron equality is representation independent") {
    Polyhedron p(1, {simp({pt({0}), pt({Rat(1, 2)})})});
    Polyhedron q(1, {simp({pt({0}), pt({Rat(1, 4)})}), simp({pt({Rat(1, 4)}), pt({Rat(1, 2)})})});
    CHECK(poly_equal(p, q));

    Polyhedron a(1, {simp({pt({Rat(1, 2)})})});
    Polyhedron b(1, {simp({pt({Rat(1, 3)})})});
    CHECK_FALSE(poly_equal(a, b));

    // Two triangulations of the square along different diagonals.
    Polyhedron d1(2, {simp({pt({0, 0}), pt({1, 0}), pt({1, 1})}),
                      simp({pt({0, 0}), pt({0, 1}), pt({1, 1})})});
    Polyhedron d2(2, {simp({pt({0, 0}), pt({1, 0}), pt({0, 1})}),
                      simp({pt({1, 0}), pt({0, 1}), pt({1, 1})})});
    CHECK(poly_equal(d1, d2));
    CHECK_THROWS_AS(poly_equal(a, d1), domain_error);
}

TEST_CASE("polyhedron intersect and union") {
    Polyhedron p(1, {simp({pt({0}), pt({Rat(1, 2)})})});
    Polyhedron q(1, {simp({pt({Rat(1, 4)}), pt({1})})});
    Polyhedron expect(1, {simp({pt({Rat(1, 4)}), pt({Rat(1, 2)})})});
    CHECK(poly_equal(poly_intersect(p, q), expect));
    CHECK(poly_equal(poly_intersect(p, p), p));

    Polyhedron u = poly_union(p, q);
    Polyhedron whole(1, {simp({pt({0}), pt({1})})});
    CHECK(poly_equal(u, whole));

    // square n diagonal line = the diagonal segment
    Polyhedron square = full_cube(2);
    Polyhedron diag(2, {simp({pt({0, 0}), pt({1, 1})})});
    CHECK(poly_equal(poly_intersect(square, diag), diag));

    Polyhedron empty2(2);
    CHECK(poly_equal(poly_intersect(empty2, square), empty2));
    CHECK(poly_subset(empty2, square));
    CHECK_FALSE(poly_subset(square, empty2));
}

TEST_CASE("projection") {
    Polyhedron tri(2, {simp({pt({0, 0}), pt({1, 0}), pt({0, 1})})});
    Polyhedron seg(1, {simp({pt({0}), pt({1})})});
    CHECK(poly_equal(project(tri, {0}), seg));

    Polyhedron ptp(2, {simp({pt({Rat(1, 2), Rat(1, 3)})})});
    Polyhedron expect(1, {simp({pt({Rat(1, 3)})})});
    CHECK(poly_equal(project(ptp, {1}), expect));

    Polyhedron diag(2, {simp({pt({0, 0}), pt({1, 1})})});
    CHECK(poly_equal(project(diag, {0}), seg));
    CHECK_THROWS_AS(project(tri, {}), domain_error);
}

TEST_CASE("products use staircase triangulations") {
    Polyhedron seg(1, {simp({pt({0}), pt({1})})});
    Polyhedron square = product(seg, seg);
    CHECK(square.ambient_dim() == 2);
    CHECK(square.simplices().size() == 2);
    CHECK(poly_equal(square, full_cube(2)));

    Polyhedron half(1, {simp({pt({Rat(1, 2)})})});
    Polyhedron p(1, {simp({pt({0}), pt({Rat(1, 3)})})});
    Polyhedron lifted = product(half, p);
    CHECK(lifted.ambient_dim() == 2);
    REQUIRE(lifted.simplices().size() == 1);
    CHECK(lifted.simplices()[0] ==
          simp({pt({Rat(1, 2), 0}), pt({Rat(1, 2), Rat(1, 3)})}));

    Polyhedron tri(2, {simp({pt({0, 0}), pt({1, 0}), pt({0, 1})})});
    Polyhedron prism = product(seg, tri);
    CHECK(prism.ambient_dim() == 3);
    CHECK(prism.simplices().size() == 3);  // C(1+2,1) staircase count
    Rat vol(0);
    for (const auto& s : prism.simplices()) vol += s.volume();
    CHECK(vol == Rat(1, 2));
}

TEST_CASE("split then re-split leaves membership intact") {
    // 1000 exact membership checks across a fixed rational grid.
    ConvexCell tri({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    auto h = af({1, -2}, Rat(1, 8));
    auto [l, r] = split_cell(tri, h);
    REQUIRE(l.has_value());
    REQUIRE(r.has_value());
    int checked = 0;
    for (int ix = 0; ix <= 32 && checked < 1000; ++ix) {
        for (int iy = 0; iy + ix <= 32 && checked < 1000; ++iy) {
            Point p = pt({Rat(ix, 32), Rat(iy, 32)});
            bool covered = (l && l->contains(p)) || (r && r->contains(p));
            CHECK(covered == tri.contains(p));
            ++checked;
        }
    }
}

TEST_CASE("kuhn cube") {
    CHECK(full_cube(0).simplices().size() == 1);
    CHECK(full_cube(1).simplices().size() == 1);
    CHECK(full_cube(2).simplices().size() == 2);
    Polyhedron cube3 = full_cube(3);
    CHECK(cube3.simplices().size() == 6);
    CHECK(total_volume(cube3.simplices()) == Rat(1));
}

TEST_CASE("simplex refine split stays triangulated") {
    auto t = simp({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    auto halves = split_simplex_refine(t, af({1, 1}, Rat(-1, 2)));
    CHECK(halves.left.size() == 1);
    CHECK(halves.right.size() >= 2);
    CHECK(total_volume(halves.left) + total_volume(halves.right) == t.volume());

    auto sec = simplex_section(t, af({1, 1}, Rat(-1, 2)));
    REQUIRE(sec.size() == 1);
    CHECK(sec[0] == simp({pt({0, Rat(1, 2)}), pt({Rat(1, 2), 0})}));

    auto closed = clip_simplex_closed(t, af({-1, 0}, Rat(0)));  // x >= 0: whole triangle
    CHECK(closed.size() == 1);
    auto face = clip_simplex_closed(t, af({1, 0}, Rat(0)));  // x <= 0: the edge x=0
    REQUIRE(face.size() == 1);
    CHECK(face[0] == simp({pt({0, 0}), pt({0, 1})}));
}
