#include "mvdual/duality.hpp"

namespace mvd {

HomSpec::HomSpec(Presentation src, Presentation tgt, std::vector<Term> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (static_cast<int>(images.size()) != source.arity)
        throw domain_error("hom spec needs one image per source generator");
    for (const auto& im : images)
        if (im.min_arity() > target.arity)
            throw domain_error("hom image uses a variable beyond the target arity");
}

Polyhedron variety(const Presentation& p) {
    // Points where every relation holds = zero set of the max of the
    // relations' distance terms; the empty max is 0, giving the full cube.
    Term worst = Term::zero();
    for (const auto& [s, t] : p.relations)
        worst = Term::vee(worst, chang_distance(s, t));
    return zero_set(compile(worst, p.arity));
}

bool in_ideal(const Polyhedron& p, const Term& s, const Term& t) {
    int arity = p.ambient_dim();
    if (s.min_arity() > arity || t.min_arity() > arity)
        throw domain_error("in_ideal: term variable beyond the ambient dimension");
    return pl_is_zero_on(compile(chang_distance(s, t), arity), p);
}

bool radical_equal(const Presentation& s, const Presentation& t) {
    if (s.arity != t.arity) throw domain_error("radical_equal: arity mismatch");
    return poly_equal(variety(s), variety(t));
}

bool check_hom(const HomSpec& h) {
    Polyhedron vt = variety(h.target);
    for (const auto& [s, sp] : h.source.relations) {
        Term a = substitute(s, h.images);
        Term b = substitute(sp, h.images);
        if (!pl_is_zero_on(compile(chang_distance(a, b), h.target.arity), vt)) return false;
    }
    return true;
}

ZMap dual_zmap(const HomSpec& h) {
    if (!check_hom(h)) throw domain_error("dual_zmap: ill-defined hom");
    std::vector<PLFunction> comps;
    comps.reserve(h.images.size());
    for (const auto& im : h.images) comps.push_back(compile(im, h.target.arity));
    return ZMap(h.target.arity, variety(h.target), std::move(comps));
}

HomSpec compose_homs(const HomSpec& h, const HomSpec& g) {
    if (g.target.arity != h.source.arity)
        throw domain_error("compose_homs: middle presentation mismatch");
    std::vector<Term> images;
    images.reserve(g.images.size());
    for (const auto& im : g.images) images.push_back(substitute(im, h.images));
    return HomSpec(g.source, h.target, std::move(images));
}

Term evaluation_onto_check(const Presentation& p, const ProvenancedFunction& f) {
    Polyhedron v = variety(p);
    PLFunction compiled = compile(f.provenance, p.arity);
    if (!pl_equal_on(compiled, f.fn, v))
        throw domain_error("evaluation_onto_check: provenance does not match the function");
    return f.provenance;
}

}  // namespace mvd
