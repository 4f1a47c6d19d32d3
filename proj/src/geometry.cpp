#include "mvdual/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mvd {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw domain_error(std::string(what) + ": dimension mismatch");
}

// Deduplicate + lex-sort a point list.
void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

Point segment_cut(const Point& u, const Point& w, const Rat& hu, const Rat& hw) {
    // h(u) < 0 < h(w); the unique zero of h on [u,w].
    Rat t = hu / (hu - hw);
    Point c(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) c[i] = u[i] + t * (w[i] - u[i]);
    return c;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

AffineFunctional AffineFunctional::normalized(bool keep_orientation) const {
    Int l = 1;
    for (const auto& c : normal) l = lcm(l, c.den());
    l = lcm(l, offset.den());
    std::vector<Int> num(normal.size() + 1);
    for (std::size_t i = 0; i < normal.size(); ++i) num[i] = normal[i].num() * (l / normal[i].den());
    num.back() = offset.num() * (l / offset.den());
    Int g = 0;
    for (const auto& x : num) g = gcd(g, x);
    if (sgn(g) == 0) return {Vec(normal.size(), Rat(0)), Rat(0)};
    int flip = 1;
    if (!keep_orientation) {
        for (const auto& x : num)
            if (sgn(x) != 0) { flip = sgn(x) < 0 ? -1 : 1; break; }
    }
    AffineFunctional out;
    out.normal.resize(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) out.normal[i] = Rat(num[i] * flip, g);
    out.offset = Rat(num.back() * flip, g);
    return out;
}

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<Point> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw domain_error("simplex needs at least one vertex");
    std::size_t n = verts_[0].size();
    for (const auto& v : verts_) check_same_dim(v.size(), n, "simplex");
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw domain_error("simplex with repeated vertex");
    if (!affine_independent(verts_)) throw domain_error("simplex vertices affinely dependent");
}

bool Simplex::contains(const Point& p) const {
    check_same_dim(p.size(), ambient_dim(), "simplex_contains");
    auto lam = barycentric(verts_, p);
    if (!lam) return false;
    for (const auto& l : *lam)
        if (l.sign() < 0) return false;
    return true;
}

Point Simplex::barycenter() const {
    Point b(ambient_dim(), Rat(0));
    for (const auto& v : verts_) b = vadd(b, v);
    Rat inv(1, static_cast<long>(verts_.size()));
    return vscale(inv, b);
}

Rat Simplex::volume() const {
    int n = static_cast<int>(ambient_dim());
    if (dim() != n) return Rat(0);
    Mat m;
    for (int i = 1; i <= n; ++i) m.push_back(vsub(verts_[i], verts_[0]));
    if (n == 0) return Rat(1);  // the single point of [0,1]^0 has measure 1
    Rat d = det(std::move(m));
    return abs(d) / Rat(factorial(n));
}

std::vector<AffineFunctional> Simplex::facet_halfspaces() const {
    std::size_t m = verts_.size() - 1;
    std::vector<AffineFunctional> out;
    if (m == 0) return out;
    // Affine basis directions; g(x) = sum mu_k (u_k . x) + b.
    std::vector<Vec> basis;
    for (std::size_t k = 1; k <= m; ++k) basis.push_back(vsub(verts_[k], verts_[0]));
    for (std::size_t j = 0; j <= m; ++j) {
        Mat a;
        Vec rhs;
        for (std::size_t i = 0; i <= m; ++i) {
            Vec row(m + 1);
            for (std::size_t k = 0; k < m; ++k) row[k] = dot(basis[k], verts_[i]);
            row[m] = Rat(1);
            a.push_back(std::move(row));
            rhs.push_back(i == j ? Rat(-1) : Rat(0));
        }
        auto sol = solve(a, rhs);
        if (!sol) throw domain_error("simplex facet solve failed");  // cannot happen
        AffineFunctional h;
        h.normal.assign(ambient_dim(), Rat(0));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t c = 0; c < ambient_dim(); ++c) h.normal[c] += (*sol)[k] * basis[k][c];
        h.offset = (*sol)[m];
        out.push_back(h.normalized(true));
    }
    return out;
}

std::vector<AffineFunctional> Simplex::hull_equations() const {
    std::size_t n = ambient_dim();
    Mat rows;
    for (const auto& v : verts_) {
        Vec r = v;
        r.push_back(Rat(1));
        rows.push_back(std::move(r));
    }
    std::vector<AffineFunctional> out;
    for (auto& k : nullspace(rows)) {
        AffineFunctional h;
        h.normal.assign(k.begin(), k.begin() + static_cast<long>(n));
        h.offset = k[n];
        out.push_back(h.normalized(false));
    }
    return out;
}

bool simplex_contains(const Simplex& s, const Point& p) { return s.contains(p); }

// ---------------------------------------------------------------------------
// ConvexCell

namespace {

std::vector<Point> canonical_extremes(std::vector<Point> pts) {
    if (pts.empty()) throw domain_error("convex cell needs at least one point");
    std::size_t n = pts[0].size();
    for (const auto& p : pts) check_same_dim(p.size(), n, "convex cell");
    sort_unique(pts);
    // Dropping a non-extreme point never changes the hull, so one sweep with a
    // shrinking list is enough.
    for (std::size_t i = 0; i < pts.size() && pts.size() > 1;) {
        std::vector<Point> rest;
        rest.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        if (in_convex_hull(pts[i], rest))
            pts.erase(pts.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return pts;
}

}  // namespace

ConvexCell::ConvexCell(std::vector<Point> pts) : verts_(canonical_extremes(std::move(pts))) {
    dim_ = affine_dim(verts_);
}

ConvexCell ConvexCell::from_extreme_points(std::vector<Point> pts) {
    if (pts.empty()) throw domain_error("convex cell needs at least one point");
    sort_unique(pts);
    ConvexCell c;
    c.verts_ = std::move(pts);
    c.dim_ = affine_dim(c.verts_);
    return c;
}

bool ConvexCell::contains(const Point& p) const {
    check_same_dim(p.size(), ambient_dim(), "cell contains");
    if (is_simplex()) {
        auto lam = barycentric(verts_, p);
        if (!lam) return false;
        for (const auto& l : *lam)
            if (l.sign() < 0) return false;
        return true;
    }
    return in_convex_hull(p, verts_);
}

Point ConvexCell::barycenter() const {
    Point b(ambient_dim(), Rat(0));
    for (const auto& v : verts_) b = vadd(b, v);
    return vscale(Rat(1, static_cast<long>(verts_.size())), b);
}

std::pair<std::optional<ConvexCell>, std::optional<ConvexCell>> split_cell(
    const ConvexCell& c, const AffineFunctional& h) {
    check_same_dim(h.dim(), c.ambient_dim(), "split_cell");
    std::vector<Point> neg, zero, pos;
    std::vector<Rat> vals;
    for (const auto& v : c.vertices()) {
        Rat hv = h.eval(v);
        vals.push_back(hv);
        (hv.sign() < 0 ? neg : hv.sign() > 0 ? pos : zero).push_back(v);
    }
    auto side = [&](const std::vector<Point>& strict) -> std::optional<ConvexCell> {
        std::vector<Point> pts = strict;
        pts.insert(pts.end(), zero.begin(), zero.end());
        if (!neg.empty() && !pos.empty()) {
            const auto& vs = c.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = 0; j < vs.size(); ++j)
                    if (vals[i].sign() < 0 && vals[j].sign() > 0)
                        pts.push_back(segment_cut(vs[i], vs[j], vals[i], vals[j]));
        }
        if (pts.empty()) return std::nullopt;
        return ConvexCell(std::move(pts));
    };
    return {side(neg), side(pos)};
}

std::optional<ConvexCell> clip_cell(const ConvexCell& c, const AffineFunctional& h) {
    return split_cell(c, h).first;
}

std::optional<ConvexCell> cell_section(const ConvexCell& c, const AffineFunctional& h) {
    check_same_dim(h.dim(), c.ambient_dim(), "cell_section");
    std::vector<Point> pts;
    std::vector<Rat> vals;
    for (const auto& v : c.vertices()) {
        Rat hv = h.eval(v);
        vals.push_back(hv);
        if (hv.sign() == 0) pts.push_back(v);
    }
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (vals[i].sign() < 0 && vals[j].sign() > 0)
                pts.push_back(segment_cut(vs[i], vs[j], vals[i], vals[j]));
    if (pts.empty()) return std::nullopt;
    return ConvexCell(std::move(pts));
}

std::optional<ConvexCell> intersect_cells(const ConvexCell& a, const ConvexCell& b) {
    check_same_dim(a.ambient_dim(), b.ambient_dim(), "intersect_cells");
    std::optional<ConvexCell> cur = a;
    for (const auto& eq : cell_hull_equations(b)) {
        cur = cell_section(*cur, eq);
        if (!cur) return std::nullopt;
    }
    for (const auto& f : cell_facets(b)) {
        cur = clip_cell(*cur, f);
        if (!cur) return std::nullopt;
    }
    return cur;
}

std::vector<AffineFunctional> cell_hull_equations(const ConvexCell& c) {
    Mat rows;
    for (const auto& v : c.vertices()) {
        Vec r = v;
        r.push_back(Rat(1));
        rows.push_back(std::move(r));
    }
    std::size_t n = c.ambient_dim();
    std::vector<AffineFunctional> out;
    for (auto& k : nullspace(rows)) {
        AffineFunctional h;
        h.normal.assign(k.begin(), k.begin() + static_cast<long>(n));
        h.offset = k[n];
        out.push_back(h.normalized(false));
    }
    return out;
}

std::vector<AffineFunctional> cell_facets(const ConvexCell& c) {
    if (c.is_simplex() && c.dim() >= 1) return Simplex(c.vertices()).facet_halfspaces();
    int d = c.dim();
    if (d == 0) return {};
    const auto& vs = c.vertices();
    std::size_t n = c.ambient_dim(), m = vs.size();

    // Affine basis of the cell's hull.
    std::vector<Vec> basis;
    {
        Mat probe;
        for (std::size_t i = 1; i < m && static_cast<int>(basis.size()) < d; ++i) {
            Vec dvec = vsub(vs[i], vs[0]);
            probe.push_back(dvec);
            if (rank(probe) == static_cast<int>(probe.size()))
                basis.push_back(std::move(dvec));
            else
                probe.pop_back();
        }
    }

    std::set<AffineFunctional> found;
    // Enumerate d-subsets of vertices; each spanning (d-1)-flat that bounds
    // the cell is a facet hyperplane.
    std::vector<std::size_t> comb(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < comb.size(); ++k) comb[k] = k;
    auto next_comb = [&]() {
        int k = d - 1;
        while (k >= 0 && comb[static_cast<std::size_t>(k)] == m - static_cast<std::size_t>(d - k)) --k;
        if (k < 0) return false;
        ++comb[static_cast<std::size_t>(k)];
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < comb.size(); ++j)
            comb[j] = comb[j - 1] + 1;
        return true;
    };
    while (true) {
        // Candidate functional vanishing on the chosen subset.
        Mat a;
        for (std::size_t t = 0; t < comb.size(); ++t) {
            Vec row(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) row[k] = dot(basis[k], vs[comb[t]]);
            row[basis.size()] = Rat(1);
            a.push_back(std::move(row));
        }
        for (auto& kvec : nullspace(a)) {
            AffineFunctional h;
            h.normal.assign(n, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (std::size_t cix = 0; cix < n; ++cix) h.normal[cix] += kvec[k] * basis[k][cix];
            h.offset = kvec[basis.size()];
            int lo = 0, hi = 0;
            for (const auto& v : vs) {
                int s = h.eval(v).sign();
                if (s < 0) ++lo;
                if (s > 0) ++hi;
            }
            if (lo == 0 && hi == 0) continue;  // vanishes on the whole cell
            if (lo > 0 && hi > 0) continue;    // cuts through: not a facet
            if (lo > 0) {
                // flip so the cell satisfies h <= 0
            } else {
                h.normal = vscale(Rat(-1), h.normal);
                h.offset = -h.offset;
            }
            h = h.normalized(true);
            // A facet must have a (d-1)-dimensional tight set.
            std::vector<Point> tight;
            for (const auto& v : vs)
                if (h.eval(v).sign() == 0) tight.push_back(v);
            if (affine_dim(tight) == d - 1) found.insert(h);
        }
        if (!next_comb()) break;
    }
    return {found.begin(), found.end()};
}

std::vector<Simplex> triangulate(const ConvexCell& c) {
    if (c.is_simplex()) return {Simplex(c.vertices())};
    const Point& apex = c.vertices().front();  // lexicographically smallest
    std::vector<Simplex> out;
    for (const auto& h : cell_facets(c)) {
        if (h.eval(apex).sign() == 0) continue;
        std::vector<Point> tight;
        for (const auto& v : c.vertices())
            if (h.eval(v).sign() == 0) tight.push_back(v);
        ConvexCell face = ConvexCell::from_extreme_points(std::move(tight));
        for (const auto& t : triangulate(face)) {
            std::vector<Point> verts = t.vertices();
            verts.push_back(apex);
            out.emplace_back(std::move(verts));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Simplex splitting with triangulated output (the refinement workhorse).

namespace {

struct Classified {
    std::vector<Point> neg, zero, pos;
    std::vector<Rat> vals;
};

Classified classify(const Simplex& s, const AffineFunctional& h) {
    Classified c;
    for (const auto& v : s.vertices()) {
        Rat hv = h.eval(v);
        c.vals.push_back(hv);
        (hv.sign() < 0 ? c.neg : hv.sign() > 0 ? c.pos : c.zero).push_back(v);
    }
    return c;
}

std::vector<Point> slice_vertices(const Simplex& s, const Classified& c, bool left) {
    // Vertices of the closed side: kept vertices plus edge cuts. Every vertex
    // pair of a simplex is an edge, so all of these are extreme.
    std::vector<Point> pts = left ? c.neg : c.pos;
    pts.insert(pts.end(), c.zero.begin(), c.zero.end());
    const auto& vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (c.vals[i].sign() < 0 && c.vals[j].sign() > 0)
                pts.push_back(segment_cut(vs[i], vs[j], c.vals[i], c.vals[j]));
    return pts;
}

}  // namespace

SimplexSplit split_simplex_refine(const Simplex& s, const AffineFunctional& h) {
    check_same_dim(h.dim(), s.ambient_dim(), "split_simplex");
    Classified c = classify(s, h);
    if (c.pos.empty() && c.neg.empty()) return {{s}, {}};  // h vanishes on s
    if (c.pos.empty()) return {{s}, {}};
    if (c.neg.empty()) return {{}, {s}};
    SimplexSplit out;
    out.left = triangulate(ConvexCell::from_extreme_points(slice_vertices(s, c, true)));
    out.right = triangulate(ConvexCell::from_extreme_points(slice_vertices(s, c, false)));
    return out;
}

std::vector<Simplex> simplex_section(const Simplex& s, const AffineFunctional& h) {
    check_same_dim(h.dim(), s.ambient_dim(), "simplex_section");
    Classified c = classify(s, h);
    if (c.pos.empty() && c.neg.empty()) return {s};
    if (c.pos.empty() || c.neg.empty()) {
        if (c.zero.empty()) return {};
        return {Simplex(c.zero)};
    }
    std::vector<Point> pts = c.zero;
    const auto& vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (c.vals[i].sign() < 0 && c.vals[j].sign() > 0)
                pts.push_back(segment_cut(vs[i], vs[j], c.vals[i], c.vals[j]));
    return triangulate(ConvexCell::from_extreme_points(std::move(pts)));
}

std::vector<Simplex> clip_simplex_refine(const Simplex& s, const AffineFunctional& h) {
    Classified c = classify(s, h);
    if (c.pos.empty()) return {s};
    if (c.neg.empty()) return {};
    return triangulate(ConvexCell::from_extreme_points(slice_vertices(s, c, true)));
}

std::vector<Simplex> clip_simplex_closed(const Simplex& s, const AffineFunctional& h) {
    Classified c = classify(s, h);
    if (c.pos.empty()) return {s};
    if (c.neg.empty()) {
        if (c.zero.empty()) return {};
        return {Simplex(c.zero)};
    }
    return triangulate(ConvexCell::from_extreme_points(slice_vertices(s, c, true)));
}

std::vector<Simplex> intersect_simplices(const Simplex& a, const Simplex& b) {
    check_same_dim(a.ambient_dim(), b.ambient_dim(), "intersect_simplices");
    std::vector<Simplex> frags{a};
    for (const auto& eq : b.hull_equations()) {
        std::vector<Simplex> next;
        for (const auto& f : frags)
            for (auto& piece : simplex_section(f, eq)) next.push_back(std::move(piece));
        frags = std::move(next);
        if (frags.empty()) return {};
    }
    for (const auto& hf : b.facet_halfspaces()) {
        std::vector<Simplex> next;
        for (const auto& f : frags)
            for (auto& piece : clip_simplex_closed(f, hf)) next.push_back(std::move(piece));
        frags = std::move(next);
        if (frags.empty()) return {};
    }
    return frags;
}

// ---------------------------------------------------------------------------
// Polyhedron

namespace {

bool simplex_in_simplex(const Simplex& a, const Simplex& b) {
    for (const auto& v : a.vertices())
        if (!b.contains(v)) return false;
    return true;
}

std::vector<Simplex> canonical_simplices(std::vector<Simplex> simps) {
    std::sort(simps.begin(), simps.end());
    simps.erase(std::unique(simps.begin(), simps.end()), simps.end());
    std::vector<bool> dead(simps.size(), false);
    for (std::size_t i = 0; i < simps.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < simps.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (simplex_in_simplex(simps[i], simps[j])) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < simps.size(); ++i)
        if (!dead[i]) out.push_back(std::move(simps[i]));
    return out;
}

}  // namespace

Polyhedron::Polyhedron(int ambient_dim, std::vector<Simplex> simplices)
    : dim_(ambient_dim), simps_(canonical_simplices(std::move(simplices))) {
    if (ambient_dim < 0) throw domain_error("polyhedron with negative dimension");
    for (const auto& s : simps_)
        check_same_dim(s.ambient_dim(), static_cast<std::size_t>(dim_), "polyhedron");
}

bool Polyhedron::contains(const Point& p) const {
    check_same_dim(p.size(), static_cast<std::size_t>(dim_), "poly contains");
    for (const auto& s : simps_)
        if (s.contains(p)) return true;
    return false;
}

Polyhedron full_cube(int n) {
    if (n < 0) throw domain_error("full_cube: negative dimension");
    if (n == 0) return Polyhedron(0, {Simplex({Point{}})});
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<Simplex> simps;
    do {
        std::vector<Point> verts;
        Point cur(static_cast<std::size_t>(n), Rat(0));
        verts.push_back(cur);
        for (int k = 0; k < n; ++k) {
            cur[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = Rat(1);
            verts.push_back(cur);
        }
        simps.emplace_back(std::move(verts));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polyhedron(n, std::move(simps));
}

Polyhedron poly_from_simplex(const Simplex& s) {
    return Polyhedron(static_cast<int>(s.ambient_dim()), {s});
}

bool poly_subset(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw domain_error("poly_subset: dimension mismatch");
    if (p.empty()) return true;
    if (q.empty()) return false;
    std::set<AffineFunctional> planes;
    for (const auto& t : q.simplices()) {
        for (const auto& h : t.facet_halfspaces()) planes.insert(h.normalized(false));
        for (const auto& h : t.hull_equations()) planes.insert(h);
    }
    for (const auto& s : p.simplices()) {
        std::vector<Simplex> frags{s};
        for (const auto& h : planes) {
            std::vector<Simplex> next;
            for (const auto& f : frags) {
                auto halves = split_simplex_refine(f, h);
                for (auto& x : halves.left) next.push_back(std::move(x));
                for (auto& x : halves.right) next.push_back(std::move(x));
            }
            frags = std::move(next);
        }
        for (const auto& f : frags)
            if (!q.contains(f.barycenter())) return false;
    }
    return true;
}

bool poly_equal(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw domain_error("poly_equal: dimension mismatch");
    if (p.simplices() == q.simplices()) return true;
    return poly_subset(p, q) && poly_subset(q, p);
}

Polyhedron poly_intersect(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw domain_error("poly_intersect: dimension mismatch");
    std::vector<Simplex> out;
    for (const auto& s : p.simplices())
        for (const auto& t : q.simplices())
            for (auto& f : intersect_simplices(s, t)) out.push_back(std::move(f));
    return Polyhedron(p.ambient_dim(), std::move(out));
}

Polyhedron poly_union(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw domain_error("poly_union: dimension mismatch");
    std::vector<Simplex> out = p.simplices();
    for (const auto& t : q.simplices()) out.push_back(t);
    return Polyhedron(p.ambient_dim(), std::move(out));
}

Polyhedron project(const Polyhedron& p, const std::vector<int>& coords) {
    if (coords.empty()) throw domain_error("project: empty coordinate set");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= p.ambient_dim())
            throw domain_error("project: coordinate out of range");
        if (i > 0 && coords[i] <= coords[i - 1])
            throw domain_error("project: coordinates must be strictly increasing");
    }
    std::vector<Simplex> out;
    for (const auto& s : p.simplices()) {
        std::vector<Point> proj;
        for (const auto& v : s.vertices()) {
            Point q(coords.size());
            for (std::size_t i = 0; i < coords.size(); ++i)
                q[i] = v[static_cast<std::size_t>(coords[i])];
            proj.push_back(std::move(q));
        }
        for (auto& t : triangulate(ConvexCell(std::move(proj)))) out.push_back(std::move(t));
    }
    return Polyhedron(static_cast<int>(coords.size()), std::move(out));
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
    int n = p.ambient_dim() + q.ambient_dim();
    std::vector<Simplex> out;
    for (const auto& s : p.simplices()) {
        for (const auto& t : q.simplices()) {
            std::size_t a = s.vertices().size() - 1, b = t.vertices().size() - 1;
            // Monotone staircase paths through the (a+1) x (b+1) vertex grid;
            // the mask says which of the a+b steps advance the first factor.
            std::vector<Simplex> local;
            std::vector<bool> stepmask(a + b, false);
            for (std::size_t k = 0; k < a; ++k) stepmask[k] = true;
            std::sort(stepmask.begin(), stepmask.end());
            do {
                std::vector<Point> verts;
                std::size_t i = 0, j = 0;
                auto emit = [&]() {
                    Point v = s.vertices()[i];
                    const Point& w = t.vertices()[j];
                    v.insert(v.end(), w.begin(), w.end());
                    verts.push_back(std::move(v));
                };
                emit();
                for (std::size_t k = 0; k < a + b; ++k) {
                    if (stepmask[k]) ++i; else ++j;
                    emit();
                }
                local.emplace_back(std::move(verts));
            } while (std::next_permutation(stepmask.begin(), stepmask.end()));
            for (auto& x : local) out.push_back(std::move(x));
        }
    }
    return Polyhedron(n, std::move(out));
}

}  // namespace mvd
