#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mvdual/geometry.hpp"
#include "mvdual/term.hpp"

namespace mvd {

// Integer-affine piece: x |-> coeffs . x + constant. McNaughton form means
// these stay integral; rational coefficients never appear in a PLFunction.
struct AffinePiece {
    std::vector<Int> coeffs;
    Int constant = 0;

    Rat eval(const Point& p) const;
    AffinePiece negated() const;

    friend bool operator==(const AffinePiece& a, const AffinePiece& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
};

struct PLCell {
    Simplex cell;
    AffinePiece piece;
};

// Continuous piecewise-linear map [0,1]^n -> [0,1] with integer coefficients,
// as a simplicial complex covering the full cube. A restricted function keeps
// its cube complex and carries the restriction polyhedron alongside; values
// outside the domain are still defined but not part of the function's
// contract.
class PLFunction {
public:
    PLFunction(int arity, std::vector<PLCell> cells,
               std::optional<Polyhedron> domain = std::nullopt);

    int arity() const { return arity_; }
    const std::vector<PLCell>& cells() const { return cells_; }
    bool restricted() const { return domain_.has_value(); }
    Polyhedron domain() const;  // the restriction, or the full cube

    PLFunction restricted_to(Polyhedron p) const;

private:
    int arity_;
    std::vector<PLCell> cells_;
    std::optional<Polyhedron> domain_;
};

enum class PLOp { Oplus, Neg, Wedge, Vee, Odot };

// Structural compilation of a term into McNaughton form on [0,1]^n.
PLFunction compile(const Term& t, int arity);

Rat pl_eval(const PLFunction& f, const Point& p);

PLFunction pl_op(PLOp op, const PLFunction& f, const PLFunction& g);
PLFunction pl_neg(const PLFunction& f);

bool pl_equal(const PLFunction& f, const PLFunction& g);

// Agreement / vanishing over an explicit polyhedron (used for restrictions).
bool pl_equal_on(const PLFunction& f, const PLFunction& g, const Polyhedron& p);
bool pl_is_zero_on(const PLFunction& f, const Polyhedron& p);

Polyhedron zero_set(const PLFunction& f);
Polyhedron one_set(const PLFunction& f);

std::set<int> used_variables(const PLFunction& f);

// Structural sanity used by tests: integer pieces in [0,1] at vertices, cube
// coverage by volume, and exact continuity across every cell intersection.
bool pl_validate(const PLFunction& f);

// Tuple of PL functions out of a shared source cube, optionally restricted to
// a domain polyhedron inside it.
struct ZMap {
    int source_dim = 0;
    std::optional<Polyhedron> domain;
    std::vector<PLFunction> components;

    ZMap() = default;
    ZMap(int src, std::optional<Polyhedron> dom, std::vector<PLFunction> comps);

    int target_dim() const { return static_cast<int>(components.size()); }
    Point apply(const Point& p) const;
};

ZMap identity_zmap(int n);

// g after f: pieces compose exactly (integer matrices), cells are pullbacks
// of g's cells through f's common refinement.
ZMap compose(const ZMap& g, const ZMap& f);

// Variables any selected component actually reads (nonzero coefficient).
std::set<int> used_variables(const ZMap& eta, const std::vector<int>& component_subset);

struct Factorization {
    std::vector<int> kept_inputs;  // I'
    ZMap factor;                   // xi over [0,1]^{I'}
};

// Finite-support factorization: pi_{J'} o eta = xi o pi_{I'}.
Factorization factor(const ZMap& eta, const std::vector<int>& component_subset);

// Re-embed a PLFunction over coordinates `kept` into arity n (cells become
// products with the dropped coordinates' cube).
PLFunction embed(const PLFunction& f, int arity, const std::vector<int>& kept);

bool zmap_equal_on(const ZMap& a, const ZMap& b, const Polyhedron& p);

}  // namespace mvd
