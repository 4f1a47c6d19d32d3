#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvdual/geometry.hpp"
#include "mvdual/rational.hpp"

namespace mvd {

// Concrete finite MV-algebra: a finite subset of [0,1]^N containing the zero
// tuple and closed under coordinatewise negation and truncated sum. Elements
// are kept lexicographically sorted, so indices are stable and deterministic.
class FiniteMVAlgebra {
public:
    using Tuple = Vec;

    FiniteMVAlgebra(int ambient, std::vector<Tuple> elements);

    int ambient() const { return ambient_; }
    const std::vector<Tuple>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    int index_of(const Tuple& t) const;  // -1 when absent
    const Tuple& zero() const { return elems_[static_cast<std::size_t>(zero_ix_)]; }
    const Tuple& one() const { return elems_[static_cast<std::size_t>(one_ix_)]; }
    int zero_index() const { return zero_ix_; }
    int one_index() const { return one_ix_; }

    bool is_trivial() const;  // the one-element algebra (0 = 1)

    friend bool operator==(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
        return a.ambient_ == b.ambient_ && a.elems_ == b.elems_;
    }

private:
    int ambient_;
    std::vector<Tuple> elems_;
    int zero_ix_, one_ix_;
};

Vec tuple_neg(const Vec& a);
Vec tuple_oplus(const Vec& a, const Vec& b);
Vec tuple_odot(const Vec& a, const Vec& b);
Vec tuple_vee(const Vec& a, const Vec& b);
Vec tuple_wedge(const Vec& a, const Vec& b);

// The (n+1)-element chain {0, 1/n, ..., 1} as 1-coordinate tuples.
FiniteMVAlgebra chain(int n);

FiniteMVAlgebra algebra_product(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

// Least subalgebra of [0,1]^ambient containing the generators: fixpoint
// closure under negation and truncated sum.
FiniteMVAlgebra subalgebra_closure(int ambient, const std::vector<Vec>& generators);

// Hom(A, [0,1]) kept inside its enveloping cube: one labelled coordinate per
// element of the defining data, points sorted and deduplicated.
struct Spectrum {
    std::vector<std::string> labels;
    std::vector<Point> points;

    std::size_t dim() const { return labels.size(); }
};

std::string element_label(const Vec& t);

// All MV-homomorphisms A -> [0,1], each as the tuple (h(a))_{a in A} over the
// element labels. Candidate values are bounded by the denominators occurring
// in A; a brute-force oracle over a finer grid is in the tests.
Spectrum spectrum(const FiniteMVAlgebra& a);

// Points (p,q) over the disjoint-union labels A + B.
Spectrum coproduct_spectrum(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

// Image of spectrum(A) x spectrum(B) under pointwise multiplication, over
// the product labels A x B; keeps the generating pairs so injectivity is
// checkable.
struct TensorSpectrum {
    Spectrum spec;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;  // per point, pre-dedup
};
TensorSpectrum tensor_spectrum(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b);

// The nine relation families presenting the semisimple tensor product,
// checked exactly on a point indexed by A x B (row-major over element
// indices).
bool relations_satisfied(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b, const Point& pt);

// Subalgebra of [0,1]^points generated by the coordinate functions (one
// generator per label); the trivial algebra for an empty spectrum.
FiniteMVAlgebra algebra_of_spectrum(const Spectrum& x);

}  // namespace mvd
