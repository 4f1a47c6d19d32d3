#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mvdual/linalg.hpp"
#include "mvdual/rational.hpp"

namespace mvd {

// Affine functional h(x) = normal . x + offset. Halfspaces are written
// h <= 0; hyperplanes are h = 0.
struct AffineFunctional {
    Vec normal;
    Rat offset;

    Rat eval(const Vec& x) const { return dot(normal, x) + offset; }
    std::size_t dim() const { return normal.size(); }

    // Scale to primitive integer coefficients. keep_orientation = false also
    // fixes the sign (first nonzero coefficient positive), which identifies
    // h = 0 and -h = 0.
    AffineFunctional normalized(bool keep_orientation) const;

    friend bool operator==(const AffineFunctional& a, const AffineFunctional& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const AffineFunctional& a, const AffineFunctional& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

// Rational simplex: affinely independent vertices, stored lexicographically
// sorted. May have any dimension <= ambient (points and segments included).
class Simplex {
public:
    explicit Simplex(std::vector<Point> verts);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t ambient_dim() const { return verts_[0].size(); }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    bool contains(const Point& p) const;
    Point barycenter() const;
    Rat volume() const;  // ambient-dimensional volume; 0 for degenerate dim

    // Facet halfspaces h <= 0 (one per omitted vertex, h = 0 exactly on the
    // opposite facet) and affine-hull equations h = 0.
    std::vector<AffineFunctional> facet_halfspaces() const;
    std::vector<AffineFunctional> hull_equations() const;

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.verts_ == b.verts_; }
    friend bool operator<(const Simplex& a, const Simplex& b) { return a.verts_ < b.verts_; }

private:
    std::vector<Point> verts_;
};

// Rational polytope in V-representation. Construction canonicalizes: the
// stored list is exactly the extreme points, deduplicated and sorted.
class ConvexCell {
public:
    explicit ConvexCell(std::vector<Point> pts);
    explicit ConvexCell(const Simplex& s) : verts_(s.vertices()), dim_(s.dim()) {}

    // Fast path when the caller already knows every point is extreme (slice
    // vertices of a simplex, facet vertex sets). Skips the pruning LPs.
    static ConvexCell from_extreme_points(std::vector<Point> pts);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t ambient_dim() const { return verts_[0].size(); }
    int dim() const { return dim_; }
    bool is_simplex() const { return static_cast<int>(verts_.size()) == dim_ + 1; }

    bool contains(const Point& p) const;
    Point barycenter() const;

    friend bool operator==(const ConvexCell& a, const ConvexCell& b) { return a.verts_ == b.verts_; }
    friend bool operator<(const ConvexCell& a, const ConvexCell& b) { return a.verts_ < b.verts_; }

private:
    ConvexCell() : dim_(-1) {}
    std::vector<Point> verts_;
    int dim_;
};

// Closed halves C n {h<=0}, C n {h>=0}; absent when empty. New vertices are
// exact cut points of vertex segments with {h=0}.
std::pair<std::optional<ConvexCell>, std::optional<ConvexCell>> split_cell(
    const ConvexCell& c, const AffineFunctional& h);

// One closed side only.
std::optional<ConvexCell> clip_cell(const ConvexCell& c, const AffineFunctional& h);

// The section C n {h=0}.
std::optional<ConvexCell> cell_section(const ConvexCell& c, const AffineFunctional& h);

std::optional<ConvexCell> intersect_cells(const ConvexCell& a, const ConvexCell& b);

// Facets of a cell (within its affine hull), oriented h <= 0, brute-forced
// from vertex subsets; fine at the small sizes this library produces.
std::vector<AffineFunctional> cell_facets(const ConvexCell& c);
std::vector<AffineFunctional> cell_hull_equations(const ConvexCell& c);

// Deterministic fan triangulation from the lexicographically smallest vertex.
std::vector<Simplex> triangulate(const ConvexCell& c);

// Simplex-level splitting that keeps everything triangulated. The refine
// variant drops sides of lower dimension than the input (the full-dimensional
// pieces already cover it), which is what complex refinement wants; the
// closed variant returns the honest closed side even when it degenerates.
struct SimplexSplit {
    std::vector<Simplex> left, right;
};
SimplexSplit split_simplex_refine(const Simplex& s, const AffineFunctional& h);
std::vector<Simplex> clip_simplex_refine(const Simplex& s, const AffineFunctional& h);
std::vector<Simplex> clip_simplex_closed(const Simplex& s, const AffineFunctional& h);
std::vector<Simplex> simplex_section(const Simplex& s, const AffineFunctional& h);

// Triangulated a n b; empty when disjoint.
std::vector<Simplex> intersect_simplices(const Simplex& a, const Simplex& b);

// Finite union of rational simplices sharing an ambient dimension. The list
// is canonical: sorted, deduplicated, and no simplex contained in another.
// Lower-dimensional simplices are allowed; the empty polyhedron is ambient
// dimension + no simplices.
class Polyhedron {
public:
    explicit Polyhedron(int ambient_dim) : dim_(ambient_dim) {
        if (ambient_dim < 0) throw domain_error("polyhedron with negative dimension");
    }
    Polyhedron(int ambient_dim, std::vector<Simplex> simplices);

    int ambient_dim() const { return dim_; }
    const std::vector<Simplex>& simplices() const { return simps_; }
    bool empty() const { return simps_.empty(); }

    bool contains(const Point& p) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        return a.dim_ == b.dim_ && a.simps_ == b.simps_;
    }

private:
    int dim_;
    std::vector<Simplex> simps_;
};

// Kuhn triangulation of [0,1]^n (n! simplices; the single point for n = 0).
Polyhedron full_cube(int n);

Polyhedron poly_from_simplex(const Simplex& s);

bool poly_subset(const Polyhedron& p, const Polyhedron& q);
bool poly_equal(const Polyhedron& p, const Polyhedron& q);
Polyhedron poly_intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron poly_union(const Polyhedron& p, const Polyhedron& q);

// Image under coordinate projection; coords are distinct ascending indices.
Polyhedron project(const Polyhedron& p, const std::vector<int>& coords);

// Set-theoretic product, staircase-triangulated.
Polyhedron product(const Polyhedron& p, const Polyhedron& q);

bool simplex_contains(const Simplex& s, const Point& p);

}  // namespace mvd
