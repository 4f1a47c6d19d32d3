#pragma once

#include <vector>

#include "mvdual/geometry.hpp"
#include "mvdual/rational.hpp"

namespace mvd {

// Polynomial in t = 1/i with rational coefficients, poly[k] the coefficient
// of t^k. Everything about eventual behaviour along integer i -> infinity is
// decided exactly through these.
using TailPoly = std::vector<Rat>;

// Sign of p(1/i) for all large i: the sign of the lowest-order nonzero
// coefficient, 0 for the zero polynomial.
int eventual_sign(const TailPoly& p);

// An index i* such that sign(p(1/i)) = eventual_sign(p) for every integer
// i >= i*.
long eventual_sign_threshold(const TailPoly& p);

// Does p(1/i) >= 0 hold for every integer i >= i0? Exact: eventual sign plus
// an explicit scan of the finite prefix up to the threshold.
bool nonneg_for_all(const TailPoly& p, long i0);

Rat eval_tail(const TailPoly& p, long i);

// Rational curve germ x_i = x + sum_k c_k i^{-k}, i >= i0, constrained to
// stay inside the unit cube for every such i (checked exactly).
class CurveGerm {
public:
    CurveGerm(Point base, std::vector<Vec> coeffs, long i0);

    // Picks the smallest threshold the sign analysis certifies; fails when
    // the germ eventually leaves the cube.
    static CurveGerm with_auto_i0(Point base, std::vector<Vec> coeffs);

    const Point& base() const { return base_; }
    const std::vector<Vec>& coeffs() const { return coeffs_; }
    long i0() const { return i0_; }
    std::size_t dim() const { return base_.size(); }

    Point at(long i) const;

    // Coordinate polynomial of an affine functional along the germ.
    TailPoly compose_functional(const AffineFunctional& h) const;

private:
    CurveGerm() = default;
    Point base_;
    std::vector<Vec> coeffs_;
    long i0_;
};

// Pairwise orthogonal rational direction representatives at a base point.
// The paper's unit vectors are the normalizations of these rays; every
// condition checked here is invariant under positive rescaling.
struct TangentTuple {
    Point base;
    std::vector<Vec> directions;

    TangentTuple(Point b, std::vector<Vec> dirs);
};

// Witness data for the rationally-outgoing conditions.
struct OutgoingWitness {
    Simplex simplex;
    std::vector<int> face;      // vertex indices of S spanning the face F
    std::vector<Rat> lambdas;   // positive step lengths, one per direction

    OutgoingWitness(Simplex s, std::vector<int> face_ixs, std::vector<Rat> ls);
    Simplex face_simplex() const;
};

// First k directions by residual order: the first nonzero coefficient, then
// each later coefficient's component orthogonal to the span so far
// (rational Gram-Schmidt, no normalization).
TangentTuple extract_tangent(const CurveGerm& g, int k);

// Is x_i inside X for all large i? Per simplex the composed constraints are
// tail polynomials, so eventual membership is a finite sign computation.
bool germ_in_polyhedron(const Polyhedron& x, const CurveGerm& g);

// Does x_i - x escape span(directions) for all large i?
bool tangent_condition_2(const CurveGerm& g, const TangentTuple& u);

// The three witness conditions, exactly: chain containment in S, the chain
// not all inside F, and F n X = S n X.
bool verify_outgoing(const Polyhedron& x, const TangentTuple& u, const OutgoingWitness& w);

// Full witness check: germ eventually in X, condition (2) for the extracted
// k-tangent, and the outgoing witness conditions. True would certify that
// the algebra of X is not strongly semisimple.
bool check_outgoing_tangent(const Polyhedron& x, const CurveGerm& g, int k,
                            const OutgoingWitness& w);

}  // namespace mvd
