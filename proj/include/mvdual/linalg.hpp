#pragma once

#include <optional>
#include <vector>

#include "mvdual/rational.hpp"

namespace mvd {

// Dense exact matrices, row-major. Everything here is plain Gaussian
// elimination over the rationals; sizes stay small throughout the library.
using Mat = std::vector<Vec>;

int rank(Mat m);

Rat det(Mat m);  // square only

// Any solution of A x = b, or nullopt when inconsistent. Free variables are
// set to zero.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Basis of { x : A x = 0 }.
std::vector<Vec> nullspace(const Mat& a);

// Exact LP feasibility: does p lie in the convex hull of pts? Phase-1 simplex
// with Bland's rule, so it terminates on every input.
bool in_convex_hull(const Vec& p, const std::vector<Vec>& pts);

// Barycentric coordinates of p w.r.t. affinely independent verts: the unique
// lambda >= componentwise with sum 1 and sum lambda_i v_i = p, or nullopt when
// p is outside the affine hull. Coordinates may be negative.
std::optional<Vec> barycentric(const std::vector<Vec>& verts, const Vec& p);

bool affine_independent(const std::vector<Point>& points);

// Affine dimension of the hull of a point set (-1 for the empty set).
int affine_dim(const std::vector<Point>& points);

}  // namespace mvd
