#pragma once

#include <cstdint>
#include <random>

#include "mvdual/finite_algebra.hpp"
#include "mvdual/geometry.hpp"
#include "mvdual/tangent.hpp"
#include "mvdual/term.hpp"

namespace mvd {

// Deterministic input generation for the property suites and the CLI
// falsification command. Bounded draws go through modulo reduction rather
// than std distributions so identical seeds give identical streams on every
// platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    long pick(long lo, long hi);  // uniform-ish integer in [lo, hi]

    Rat rat(long max_den);           // value in [0,1]
    Rat positive_rat(long max_den);  // value in (0,1]
    Point point(int n, long max_den);

    Term term(int arity, int max_depth);
    Presentation presentation(int arity, int max_relations, int max_depth);

    Simplex simplex_in_cube(int n, int dim, long max_den);
    Polyhedron polyhedron(int n, int max_simplices, long max_den);

    // A germ guaranteed to stay inside (one simplex of) x for all large i;
    // its first coefficient is nonzero.
    CurveGerm germ_in(const Polyhedron& x, int stages, long max_den);

    // Any valid cube germ with a nonzero first coefficient.
    CurveGerm germ_anywhere(int n, int stages, long max_den);

    // A witness whose simplex starts at base; the face is a random proper or
    // improper subset so every condition gets exercised.
    OutgoingWitness witness(const Point& base, int k, long max_den);

private:
    std::mt19937_64 rng_;
};

struct FalsifyReport {
    int polyhedra = 0;
    long checks = 0;
    long counterexamples = 0;
    long germs_in_x = 0;  // samples whose germ lay eventually inside x
};

// The executable face of polyhedral strong semisimplicity: random rational
// polyhedra never admit a passing witness.
FalsifyReport poly_falsify_suite(int dim, int n_polyhedra, int samples_per_poly,
                                 std::uint64_t seed);

}  // namespace mvd
