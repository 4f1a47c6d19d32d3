#pragma once

#include <vector>

#include "mvdual/plfunction.hpp"
#include "mvdual/term.hpp"

namespace mvd {

// Homomorphism between finitely presented algebras, given by generator
// images: generator i of the source goes to images[i], a term over the
// target's variables.
struct HomSpec {
    Presentation source;
    Presentation target;
    std::vector<Term> images;

    HomSpec(Presentation src, Presentation tgt, std::vector<Term> imgs);
};

// Solution set of all relations inside [0,1]^arity, always a rational
// polyhedron. No relations means the full cube.
Polyhedron variety(const Presentation& p);

// Do s and t agree everywhere on p?
bool in_ideal(const Polyhedron& p, const Term& s, const Term& t);

// Equal radicals, decided through the varieties.
bool radical_equal(const Presentation& s, const Presentation& t);

// Well-definedness of the induced map between the quotients.
bool check_hom(const HomSpec& h);

// Contravariant dual: a ZMap from variety(target) into variety(source).
ZMap dual_zmap(const HomSpec& h);

// Composite hom: first g, then h (so source(g) -> target(h)); generator
// images compose by substitution.
HomSpec compose_homs(const HomSpec& h, const HomSpec& g);

// A function on variety(P) that arose by restricting a compiled term; the
// term is kept as provenance.
struct ProvenancedFunction {
    Term provenance;
    PLFunction fn;
};

// Returns a term compiling to f on variety(P); with provenanced inputs this
// is the provenance itself, revalidated. Witnesses surjectivity of the
// evaluation map at finite scale.
Term evaluation_onto_check(const Presentation& p, const ProvenancedFunction& f);

}  // namespace mvd
