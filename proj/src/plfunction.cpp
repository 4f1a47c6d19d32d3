#include "mvdual/plfunction.hpp"

#include <algorithm>
#include <map>

namespace mvd {

namespace {

struct BBox {
    Vec lo, hi;
};

BBox bbox_of(const Simplex& s) {
    BBox b{s.vertices()[0], s.vertices()[0]};
    for (const auto& v : s.vertices())
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < b.lo[i]) b.lo[i] = v[i];
            if (b.hi[i] < v[i]) b.hi[i] = v[i];
        }
    return b;
}

bool bbox_overlap(const BBox& a, const BBox& b) {
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
    return true;
}

// h(x) = piece_f(x) + piece_g(x) - 1, as an exact functional.
AffineFunctional sum_minus_one(const AffinePiece& a, const AffinePiece& b) {
    AffineFunctional h;
    h.normal.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        h.normal[i] = Rat(Int(a.coeffs[i] + b.coeffs[i]));
    h.offset = Rat(Int(a.constant + b.constant - 1));
    return h;
}

AffineFunctional difference(const AffinePiece& a, const AffinePiece& b) {
    AffineFunctional h;
    h.normal.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        h.normal[i] = Rat(Int(a.coeffs[i] - b.coeffs[i]));
    h.offset = Rat(Int(a.constant - b.constant));
    return h;
}

AffinePiece piece_sum(const AffinePiece& a, const AffinePiece& b, Int extra) {
    AffinePiece r;
    r.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    r.constant = a.constant + b.constant + extra;
    return r;
}

AffinePiece constant_piece(std::size_t n, Int c) {
    AffinePiece r;
    r.coeffs.assign(n, Int(0));
    r.constant = std::move(c);
    return r;
}

struct RefinedFragment {
    Simplex cell;
    const AffinePiece* pf;
    const AffinePiece* pg;
};

// Common refinement of two full-cube complexes: full-dimensional pieces of
// all pairwise intersections.
std::vector<RefinedFragment> refine(const PLFunction& f, const PLFunction& g) {
    std::vector<BBox> fb, gb;
    fb.reserve(f.cells().size());
    gb.reserve(g.cells().size());
    for (const auto& c : f.cells()) fb.push_back(bbox_of(c.cell));
    for (const auto& c : g.cells()) gb.push_back(bbox_of(c.cell));
    std::vector<RefinedFragment> out;
    for (std::size_t i = 0; i < f.cells().size(); ++i) {
        for (std::size_t j = 0; j < g.cells().size(); ++j) {
            if (!bbox_overlap(fb[i], gb[j])) continue;
            std::vector<Simplex> frags{f.cells()[i].cell};
            for (const auto& h : g.cells()[j].cell.facet_halfspaces()) {
                std::vector<Simplex> next;
                for (const auto& fr : frags)
                    for (auto& piece : clip_simplex_refine(fr, h)) next.push_back(std::move(piece));
                frags = std::move(next);
                if (frags.empty()) break;
            }
            for (auto& fr : frags)
                out.push_back({std::move(fr), &f.cells()[i].piece, &g.cells()[j].piece});
        }
    }
    return out;
}

std::optional<Polyhedron> merged_domain(const PLFunction& f, const PLFunction& g,
                                        const char* what) {
    if (f.restricted() != g.restricted())
        throw domain_error(std::string(what) + ": domain mismatch");
    if (f.restricted() && !poly_equal(f.domain(), g.domain()))
        throw domain_error(std::string(what) + ": domain mismatch");
    return f.restricted() ? std::optional<Polyhedron>(f.domain()) : std::nullopt;
}

}  // namespace

Rat AffinePiece::eval(const Point& p) const {
    if (p.size() != coeffs.size()) throw domain_error("affine piece: dimension mismatch");
    Rat s(constant);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += Rat(coeffs[i]) * p[i];
    return s;
}

AffinePiece AffinePiece::negated() const {
    AffinePiece r;
    r.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) r.coeffs.push_back(-c);
    r.constant = 1 - constant;
    return r;
}

PLFunction::PLFunction(int arity, std::vector<PLCell> cells, std::optional<Polyhedron> domain)
    : arity_(arity), cells_(std::move(cells)), domain_(std::move(domain)) {
    if (arity_ < 0) throw domain_error("plfunction with negative arity");
    if (cells_.empty()) throw domain_error("plfunction needs at least one cell");
    for (const auto& c : cells_) {
        if (c.cell.ambient_dim() != static_cast<std::size_t>(arity_))
            throw domain_error("plfunction cell dimension mismatch");
        if (c.piece.coeffs.size() != static_cast<std::size_t>(arity_))
            throw domain_error("plfunction piece arity mismatch");
    }
    if (domain_ && domain_->ambient_dim() != arity_)
        throw domain_error("plfunction domain dimension mismatch");
}

Polyhedron PLFunction::domain() const { return domain_ ? *domain_ : full_cube(arity_); }

PLFunction PLFunction::restricted_to(Polyhedron p) const {
    if (p.ambient_dim() != arity_) throw domain_error("restriction dimension mismatch");
    return PLFunction(arity_, cells_, std::move(p));
}

namespace {

PLFunction compile_rec(const Term& t, int arity, std::map<std::string, PLFunction>& memo);

PLFunction compile_leaf(int arity, const AffinePiece& piece) {
    std::vector<PLCell> cells;
    Polyhedron cube = full_cube(arity);
    for (const auto& s : cube.simplices()) cells.push_back({s, piece});
    return PLFunction(arity, std::move(cells));
}

PLFunction compile_oplus(const PLFunction& f, const PLFunction& g) {
    std::vector<PLCell> cells;
    for (const auto& fr : refine(f, g)) {
        AffineFunctional h = sum_minus_one(*fr.pf, *fr.pg);
        auto halves = split_simplex_refine(fr.cell, h);
        AffinePiece sum = piece_sum(*fr.pf, *fr.pg, 0);
        AffinePiece one = constant_piece(sum.coeffs.size(), 1);
        for (auto& s : halves.left) cells.push_back({std::move(s), sum});
        for (auto& s : halves.right) cells.push_back({std::move(s), one});
    }
    return PLFunction(f.arity(), std::move(cells), merged_domain(f, g, "pl_op"));
}

PLFunction compile_rec(const Term& t, int arity, std::map<std::string, PLFunction>& memo) {
    std::string key = t.str();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PLFunction out = [&]() -> PLFunction {
        switch (t.kind()) {
            case Term::Kind::Zero:
                return compile_leaf(arity, constant_piece(static_cast<std::size_t>(arity), 0));
            case Term::Kind::Var: {
                AffinePiece p = constant_piece(static_cast<std::size_t>(arity), 0);
                p.coeffs[static_cast<std::size_t>(t.var_index())] = 1;
                return compile_leaf(arity, p);
            }
            case Term::Kind::Neg:
                return pl_neg(compile_rec(t.child(), arity, memo));
            case Term::Kind::Oplus: {
                PLFunction f = compile_rec(t.left(), arity, memo);
                PLFunction g = compile_rec(t.right(), arity, memo);
                return compile_oplus(f, g);
            }
        }
        throw domain_error("unreachable term kind");
    }();
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

PLFunction compile(const Term& t, int arity) {
    if (t.min_arity() > arity) throw domain_error("compile: term variable beyond arity");
    std::map<std::string, PLFunction> memo;
    return compile_rec(t, arity, memo);
}

Rat pl_eval(const PLFunction& f, const Point& p) {
    if (p.size() != static_cast<std::size_t>(f.arity()))
        throw domain_error("pl_eval: dimension mismatch");
    if (!in_unit_cube(p)) throw domain_error("pl_eval: point outside the cube");
    if (f.restricted() && !f.domain().contains(p))
        throw domain_error("pl_eval: point outside the domain");
    for (const auto& c : f.cells())
        if (c.cell.contains(p)) return c.piece.eval(p);
    throw domain_error("pl_eval: no cell contains the point");  // cover invariant violated
}

PLFunction pl_neg(const PLFunction& f) {
    std::vector<PLCell> cells;
    cells.reserve(f.cells().size());
    for (const auto& c : f.cells()) cells.push_back({c.cell, c.piece.negated()});
    return PLFunction(f.arity(), std::move(cells),
                      f.restricted() ? std::optional<Polyhedron>(f.domain()) : std::nullopt);
}

PLFunction pl_op(PLOp op, const PLFunction& f, const PLFunction& g) {
    if (f.arity() != g.arity()) throw domain_error("pl_op: arity mismatch");
    switch (op) {
        case PLOp::Neg:
            return pl_neg(f);
        case PLOp::Oplus:
            return compile_oplus(f, g);
        case PLOp::Odot: {
            std::vector<PLCell> cells;
            for (const auto& fr : refine(f, g)) {
                AffineFunctional h = sum_minus_one(*fr.pf, *fr.pg);
                auto halves = split_simplex_refine(fr.cell, h);
                AffinePiece zero = constant_piece(static_cast<std::size_t>(f.arity()), 0);
                AffinePiece over = piece_sum(*fr.pf, *fr.pg, -1);
                for (auto& s : halves.left) cells.push_back({std::move(s), zero});
                for (auto& s : halves.right) cells.push_back({std::move(s), over});
            }
            return PLFunction(f.arity(), std::move(cells), merged_domain(f, g, "pl_op"));
        }
        case PLOp::Wedge:
        case PLOp::Vee: {
            std::vector<PLCell> cells;
            for (const auto& fr : refine(f, g)) {
                AffineFunctional h = difference(*fr.pf, *fr.pg);
                auto halves = split_simplex_refine(fr.cell, h);
                // left: f <= g, right: f >= g
                const AffinePiece& lo = *fr.pf;
                const AffinePiece& hi = *fr.pg;
                bool take_min = op == PLOp::Wedge;
                for (auto& s : halves.left) cells.push_back({std::move(s), take_min ? lo : hi});
                for (auto& s : halves.right) cells.push_back({std::move(s), take_min ? hi : lo});
            }
            return PLFunction(f.arity(), std::move(cells), merged_domain(f, g, "pl_op"));
        }
    }
    throw domain_error("unreachable pl_op");
}

namespace {

bool pieces_agree_on(const AffinePiece& a, const AffinePiece& b,
                     const std::vector<Simplex>& frags) {
    for (const auto& fr : frags)
        for (const auto& v : fr.vertices())
            if (a.eval(v) != b.eval(v)) return false;
    return true;
}

// Full-dimensional pieces of cf n cg for full-cube complexes.
std::vector<Simplex> fulldim_intersection(const Simplex& a, const Simplex& b) {
    std::vector<Simplex> frags{a};
    for (const auto& h : b.facet_halfspaces()) {
        std::vector<Simplex> next;
        for (const auto& fr : frags)
            for (auto& piece : clip_simplex_refine(fr, h)) next.push_back(std::move(piece));
        frags = std::move(next);
        if (frags.empty()) break;
    }
    return frags;
}

}  // namespace

bool pl_equal(const PLFunction& f, const PLFunction& g) {
    if (f.arity() != g.arity()) throw domain_error("pl_equal: arity mismatch");
    if (f.restricted() != g.restricted()) throw domain_error("pl_equal: domain mismatch");
    if (f.restricted()) {
        if (!poly_equal(f.domain(), g.domain())) throw domain_error("pl_equal: domain mismatch");
        return pl_equal_on(f, g, f.domain());
    }
    std::vector<BBox> gb;
    gb.reserve(g.cells().size());
    for (const auto& c : g.cells()) gb.push_back(bbox_of(c.cell));
    for (const auto& cf : f.cells()) {
        BBox fb = bbox_of(cf.cell);
        for (std::size_t j = 0; j < g.cells().size(); ++j) {
            const auto& cg = g.cells()[j];
            if (cf.piece == cg.piece) continue;
            if (!bbox_overlap(fb, gb[j])) continue;
            if (!pieces_agree_on(cf.piece, cg.piece, fulldim_intersection(cf.cell, cg.cell)))
                return false;
        }
    }
    return true;
}

bool pl_equal_on(const PLFunction& f, const PLFunction& g, const Polyhedron& p) {
    if (f.arity() != g.arity() || p.ambient_dim() != f.arity())
        throw domain_error("pl_equal_on: dimension mismatch");
    for (const auto& t : p.simplices()) {
        BBox tb = bbox_of(t);
        for (const auto& cf : f.cells()) {
            if (!bbox_overlap(tb, bbox_of(cf.cell))) continue;
            auto base = intersect_simplices(t, cf.cell);
            if (base.empty()) continue;
            for (const auto& cg : g.cells()) {
                if (cf.piece == cg.piece) continue;
                if (!bbox_overlap(tb, bbox_of(cg.cell))) continue;
                for (const auto& x : base) {
                    auto frags = intersect_simplices(x, cg.cell);
                    if (!pieces_agree_on(cf.piece, cg.piece, frags)) return false;
                }
            }
        }
    }
    return true;
}

bool pl_is_zero_on(const PLFunction& f, const Polyhedron& p) {
    if (p.ambient_dim() != f.arity()) throw domain_error("pl_is_zero_on: dimension mismatch");
    for (const auto& t : p.simplices()) {
        BBox tb = bbox_of(t);
        for (const auto& cf : f.cells()) {
            bool zero_piece = true;
            for (const auto& c : cf.piece.coeffs) zero_piece = zero_piece && sgn(c) == 0;
            zero_piece = zero_piece && sgn(cf.piece.constant) == 0;
            if (zero_piece) continue;
            if (!bbox_overlap(tb, bbox_of(cf.cell))) continue;
            for (const auto& x : intersect_simplices(t, cf.cell))
                for (const auto& v : x.vertices())
                    if (cf.piece.eval(v).sign() != 0) return false;
        }
    }
    return true;
}

namespace {

Polyhedron level_set(const PLFunction& f, bool at_one) {
    std::vector<Simplex> out;
    for (const auto& c : f.cells()) {
        std::vector<Point> flat;
        for (const auto& v : c.cell.vertices()) {
            Rat val = c.piece.eval(v);
            if ((at_one && val == Rat(1)) || (!at_one && val.sign() == 0)) flat.push_back(v);
        }
        // The piece stays within [0,1] on the cell, so its level set at an
        // endpoint is exactly the face spanned by the level vertices.
        if (!flat.empty()) out.emplace_back(std::move(flat));
    }
    Polyhedron res(f.arity(), std::move(out));
    if (f.restricted()) return poly_intersect(res, f.domain());
    return res;
}

}  // namespace

Polyhedron zero_set(const PLFunction& f) { return level_set(f, false); }
Polyhedron one_set(const PLFunction& f) { return level_set(f, true); }

std::set<int> used_variables(const PLFunction& f) {
    std::set<int> out;
    for (const auto& c : f.cells())
        for (std::size_t i = 0; i < c.piece.coeffs.size(); ++i)
            if (sgn(c.piece.coeffs[i]) != 0) out.insert(static_cast<int>(i));
    return out;
}

bool pl_validate(const PLFunction& f) {
    // Range at vertices.
    for (const auto& c : f.cells())
        for (const auto& v : c.cell.vertices())
            if (!in_unit_interval(c.piece.eval(v))) return false;
    // Exact cover of the cube: total volume 1 catches both gaps and overlaps
    // (cells never overlap with positive measure by construction).
    Rat vol(0);
    for (const auto& c : f.cells()) vol += c.cell.volume();
    if (vol != Rat(1)) return false;
    // Continuity across every shared face.
    std::vector<BBox> boxes;
    for (const auto& c : f.cells()) boxes.push_back(bbox_of(c.cell));
    for (std::size_t i = 0; i < f.cells().size(); ++i) {
        for (std::size_t j = i + 1; j < f.cells().size(); ++j) {
            if (f.cells()[i].piece == f.cells()[j].piece) continue;
            if (!bbox_overlap(boxes[i], boxes[j])) continue;
            auto shared = intersect_simplices(f.cells()[i].cell, f.cells()[j].cell);
            if (!pieces_agree_on(f.cells()[i].piece, f.cells()[j].piece, shared)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// ZMap

ZMap::ZMap(int src, std::optional<Polyhedron> dom, std::vector<PLFunction> comps)
    : source_dim(src), domain(std::move(dom)), components(std::move(comps)) {
    if (source_dim < 0) throw domain_error("zmap with negative source dimension");
    for (const auto& c : components)
        if (c.arity() != source_dim) throw domain_error("zmap component arity mismatch");
    if (domain && domain->ambient_dim() != source_dim)
        throw domain_error("zmap domain dimension mismatch");
}

Point ZMap::apply(const Point& p) const {
    Point out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(pl_eval(c, p));
    return out;
}

ZMap identity_zmap(int n) {
    std::vector<PLFunction> comps;
    for (int i = 0; i < n; ++i) comps.push_back(compile(Term::var(i), n));
    return ZMap(n, std::nullopt, std::move(comps));
}

namespace {

struct MultiFragment {
    Simplex cell;
    std::vector<const AffinePiece*> pieces;
};

// One complex refining every component of f, with per-component pieces.
std::vector<MultiFragment> refine_all(const ZMap& f) {
    if (f.components.empty()) {
        std::vector<MultiFragment> out;
        Polyhedron cube = full_cube(f.source_dim);
        for (const auto& s : cube.simplices()) out.push_back({s, {}});
        return out;
    }
    std::vector<MultiFragment> frags;
    for (const auto& c : f.components[0].cells()) frags.push_back({c.cell, {&c.piece}});
    for (std::size_t k = 1; k < f.components.size(); ++k) {
        std::vector<BBox> kb;
        for (const auto& c : f.components[k].cells()) kb.push_back(bbox_of(c.cell));
        std::vector<MultiFragment> next;
        for (const auto& fr : frags) {
            BBox fb = bbox_of(fr.cell);
            for (std::size_t j = 0; j < f.components[k].cells().size(); ++j) {
                if (!bbox_overlap(fb, kb[j])) continue;
                for (auto& piece :
                     fulldim_intersection(fr.cell, f.components[k].cells()[j].cell)) {
                    MultiFragment m{std::move(piece), fr.pieces};
                    m.pieces.push_back(&f.components[k].cells()[j].piece);
                    next.push_back(std::move(m));
                }
            }
        }
        frags = std::move(next);
    }
    return frags;
}

}  // namespace

ZMap compose(const ZMap& g, const ZMap& f) {
    if (g.source_dim != f.target_dim())
        throw domain_error("compose: inner target and outer source dimensions differ");
    auto frags = refine_all(f);
    std::vector<PLFunction> comps;
    for (const auto& gj : g.components) {
        std::vector<PLCell> cells;
        for (const auto& fr : frags) {
            // Affine map F x + c on this fragment, rows from the pieces.
            for (const auto& [cg, pg] : gj.cells()) {
                // Pull the cell back through the fragment's affine map.
                std::vector<Simplex> pulled{fr.cell};
                for (const auto& h : cg.facet_halfspaces()) {
                    AffineFunctional hh;
                    hh.normal.assign(static_cast<std::size_t>(f.source_dim), Rat(0));
                    hh.offset = h.offset;
                    for (std::size_t r = 0; r < fr.pieces.size(); ++r) {
                        const AffinePiece& row = *fr.pieces[r];
                        for (std::size_t i = 0; i < hh.normal.size(); ++i)
                            hh.normal[i] += h.normal[r] * Rat(row.coeffs[i]);
                        hh.offset += h.normal[r] * Rat(row.constant);
                    }
                    std::vector<Simplex> next;
                    for (const auto& s : pulled)
                        for (auto& piece : clip_simplex_refine(s, hh))
                            next.push_back(std::move(piece));
                    pulled = std::move(next);
                    if (pulled.empty()) break;
                }
                if (pulled.empty()) continue;
                AffinePiece composed;
                composed.coeffs.assign(static_cast<std::size_t>(f.source_dim), Int(0));
                composed.constant = pg.constant;
                for (std::size_t r = 0; r < fr.pieces.size(); ++r) {
                    const AffinePiece& row = *fr.pieces[r];
                    for (std::size_t i = 0; i < composed.coeffs.size(); ++i)
                        composed.coeffs[i] += pg.coeffs[r] * row.coeffs[i];
                    composed.constant += pg.coeffs[r] * row.constant;
                }
                for (auto& s : pulled) cells.push_back({std::move(s), composed});
            }
        }
        comps.emplace_back(f.source_dim, std::move(cells));
    }
    return ZMap(f.source_dim, f.domain, std::move(comps));
}

std::set<int> used_variables(const ZMap& eta, const std::vector<int>& component_subset) {
    std::set<int> out;
    for (int j : component_subset) {
        if (j < 0 || j >= eta.target_dim()) throw domain_error("component index out of range");
        auto u = used_variables(eta.components[static_cast<std::size_t>(j)]);
        out.insert(u.begin(), u.end());
    }
    return out;
}

PLFunction embed(const PLFunction& f, int arity, const std::vector<int>& kept) {
    if (static_cast<int>(kept.size()) != f.arity())
        throw domain_error("embed: kept-coordinate count differs from arity");
    std::vector<bool> is_kept(static_cast<std::size_t>(arity), false);
    for (int k : kept) {
        if (k < 0 || k >= arity) throw domain_error("embed: coordinate out of range");
        is_kept[static_cast<std::size_t>(k)] = true;
    }
    std::vector<int> dropped;
    for (int i = 0; i < arity; ++i)
        if (!is_kept[static_cast<std::size_t>(i)]) dropped.push_back(i);

    Polyhedron cube_rest = full_cube(static_cast<int>(dropped.size()));
    std::vector<PLCell> cells;
    for (const auto& c : f.cells()) {
        Polyhedron base(f.arity(), {c.cell});
        Polyhedron prod = product(base, cube_rest);  // coords: kept..., dropped...
        AffinePiece piece;
        piece.coeffs.assign(static_cast<std::size_t>(arity), Int(0));
        piece.constant = c.piece.constant;
        for (std::size_t i = 0; i < kept.size(); ++i)
            piece.coeffs[static_cast<std::size_t>(kept[i])] = c.piece.coeffs[i];
        for (const auto& s : prod.simplices()) {
            std::vector<Point> verts;
            for (const auto& v : s.vertices()) {
                Point w(static_cast<std::size_t>(arity));
                for (std::size_t i = 0; i < kept.size(); ++i)
                    w[static_cast<std::size_t>(kept[i])] = v[i];
                for (std::size_t i = 0; i < dropped.size(); ++i)
                    w[static_cast<std::size_t>(dropped[i])] = v[kept.size() + i];
                verts.push_back(std::move(w));
            }
            cells.push_back({Simplex(std::move(verts)), piece});
        }
    }
    return PLFunction(arity, std::move(cells));
}

Factorization factor(const ZMap& eta, const std::vector<int>& component_subset) {
    auto used = used_variables(eta, component_subset);
    std::vector<int> kept(used.begin(), used.end());
    std::vector<PLFunction> comps;
    for (int j : component_subset) {
        const PLFunction& fj = eta.components[static_cast<std::size_t>(j)];
        if (kept.empty()) {
            // Constant component: a 0-dimensional factor.
            std::vector<PLCell> cells;
            AffinePiece p;
            p.constant = fj.cells()[0].piece.constant;
            Polyhedron point_cube = full_cube(0);
            cells.push_back({point_cube.simplices()[0], p});
            comps.emplace_back(0, std::move(cells));
            continue;
        }
        std::vector<PLCell> cells;
        for (const auto& c : fj.cells()) {
            AffinePiece p;
            p.constant = c.piece.constant;
            p.coeffs.reserve(kept.size());
            for (int k : kept) p.coeffs.push_back(c.piece.coeffs[static_cast<std::size_t>(k)]);
            std::vector<Point> proj;
            for (const auto& v : c.cell.vertices()) {
                Point w;
                w.reserve(kept.size());
                for (int k : kept) w.push_back(v[static_cast<std::size_t>(k)]);
                proj.push_back(std::move(w));
            }
            ConvexCell shadow(std::move(proj));
            if (shadow.dim() != static_cast<int>(kept.size())) continue;  // covered by full ones
            for (auto& s : triangulate(shadow)) cells.push_back({std::move(s), p});
        }
        comps.emplace_back(static_cast<int>(kept.size()), std::move(cells));
    }
    Factorization out;
    out.kept_inputs = kept;
    out.factor = ZMap(static_cast<int>(kept.size()), std::nullopt, std::move(comps));
    return out;
}

bool zmap_equal_on(const ZMap& a, const ZMap& b, const Polyhedron& p) {
    if (a.source_dim != b.source_dim || a.target_dim() != b.target_dim())
        throw domain_error("zmap_equal_on: shape mismatch");
    for (int j = 0; j < a.target_dim(); ++j)
        if (!pl_equal_on(a.components[static_cast<std::size_t>(j)],
                         b.components[static_cast<std::size_t>(j)], p))
            return false;
    return true;
}

}  // namespace mvd
