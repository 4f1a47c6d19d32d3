#include "mvdual/tangent.hpp"

#include <algorithm>

namespace mvd {

int eventual_sign(const TailPoly& p) {
    for (const auto& c : p)
        if (c.sign() != 0) return c.sign();
    return 0;
}

long eventual_sign_threshold(const TailPoly& p) {
    std::size_t m = 0;
    while (m < p.size() && p[m].sign() == 0) ++m;
    if (m == p.size()) return 1;
    // For 0 < t <= t* the tail sum stays below |p_m| t^m, so the lowest
    // term's sign wins: t* = |p_m| / (|p_m| + sum_{k>m} |p_k|), capped at 1.
    Rat lead = abs(p[m]);
    Rat tail(0);
    for (std::size_t k = m + 1; k < p.size(); ++k) tail += abs(p[k]);
    if (tail.sign() == 0) return 1;
    Rat tstar = lead / (lead + tail);
    // Smallest integer i with 1/i < t*, i.e. i > 1/t*.
    Rat inv = Rat(1) / tstar;
    Int i_floor = inv.num() / inv.den();
    if (!i_floor.fits_slong_p()) throw domain_error("tangent threshold overflow");
    return i_floor.get_si() + 1;
}

Rat eval_tail(const TailPoly& p, long i) {
    Rat t(1, i);
    Rat acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
    return acc;
}

bool nonneg_for_all(const TailPoly& p, long i0) {
    if (i0 < 1) throw domain_error("tail polynomial index must be positive");
    if (eventual_sign(p) < 0) return false;
    long limit = std::max(i0, eventual_sign_threshold(p));
    for (long i = i0; i <= limit; ++i)
        if (eval_tail(p, i).sign() < 0) return false;
    return true;
}

CurveGerm::CurveGerm(Point base, std::vector<Vec> coeffs, long i0)
    : base_(std::move(base)), coeffs_(std::move(coeffs)), i0_(i0) {
    if (i0_ < 1) throw domain_error("germ needs i0 >= 1");
    if (!in_unit_cube(base_)) throw domain_error("germ base outside the cube");
    for (const auto& c : coeffs_)
        if (c.size() != base_.size()) throw domain_error("germ coefficient dimension mismatch");
    for (std::size_t j = 0; j < base_.size(); ++j) {
        TailPoly coord{base_[j]};
        TailPoly upper{Rat(1) - base_[j]};
        for (const auto& c : coeffs_) {
            coord.push_back(c[j]);
            upper.push_back(-c[j]);
        }
        if (!nonneg_for_all(coord, i0_) || !nonneg_for_all(upper, i0_))
            throw domain_error("germ leaves the unit cube");
    }
}

CurveGerm CurveGerm::with_auto_i0(Point base, std::vector<Vec> coeffs) {
    long start = 1;
    for (std::size_t j = 0; j < base.size(); ++j) {
        TailPoly coord{base[j]};
        TailPoly upper{Rat(1) - base[j]};
        for (const auto& c : coeffs) {
            coord.push_back(c[j]);
            upper.push_back(-c[j]);
        }
        if (eventual_sign(coord) < 0 || eventual_sign(upper) < 0)
            throw domain_error("germ leaves the unit cube for all thresholds");
        long t1 = eventual_sign_threshold(coord);
        long t2 = eventual_sign_threshold(upper);
        start = std::max({start, t1, t2});
    }
    return CurveGerm(std::move(base), std::move(coeffs), start);
}

Point CurveGerm::at(long i) const {
    if (i < i0_) throw domain_error("germ evaluated before its threshold");
    Point p = base_;
    Rat t(1, i);
    Rat power(1);
    for (const auto& c : coeffs_) {
        power *= t;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += power * c[j];
    }
    return p;
}

TailPoly CurveGerm::compose_functional(const AffineFunctional& h) const {
    TailPoly p{h.eval(base_)};
    for (const auto& c : coeffs_) p.push_back(dot(h.normal, c));
    return p;
}

TangentTuple::TangentTuple(Point b, std::vector<Vec> dirs)
    : base(std::move(b)), directions(std::move(dirs)) {
    for (std::size_t i = 0; i < directions.size(); ++i) {
        if (directions[i].size() != base.size())
            throw domain_error("tangent direction dimension mismatch");
        if (is_zero_vec(directions[i])) throw domain_error("tangent direction is zero");
        for (std::size_t j = i + 1; j < directions.size(); ++j)
            if (dot(directions[i], directions[j]).sign() != 0)
                throw domain_error("tangent directions not orthogonal");
    }
}

OutgoingWitness::OutgoingWitness(Simplex s, std::vector<int> face_ixs, std::vector<Rat> ls)
    : simplex(std::move(s)), face(std::move(face_ixs)), lambdas(std::move(ls)) {
    if (face.empty()) throw domain_error("witness face needs at least one vertex");
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
        throw domain_error("witness face has repeated vertices");
    for (int ix : face)
        if (ix < 0 || ix >= static_cast<int>(simplex.vertices().size()))
            throw domain_error("witness face index out of range");
    for (const auto& l : lambdas)
        if (l.sign() <= 0) throw domain_error("witness lambdas must be positive");
}

Simplex OutgoingWitness::face_simplex() const {
    std::vector<Point> verts;
    for (int ix : face) verts.push_back(simplex.vertices()[static_cast<std::size_t>(ix)]);
    return Simplex(std::move(verts));
}

namespace {

Vec residual(const Vec& v, const std::vector<Vec>& basis) {
    Vec r = v;
    for (const auto& b : basis) {
        Rat factor = dot(r, b) / dot(b, b);
        r = vsub(r, vscale(factor, b));
    }
    return r;
}

}  // namespace

TangentTuple extract_tangent(const CurveGerm& g, int k) {
    if (k < 1) throw domain_error("extract_tangent: k must be positive");
    bool all_zero = true;
    for (const auto& c : g.coeffs()) all_zero = all_zero && is_zero_vec(c);
    if (all_zero) throw domain_error("extract_tangent: constant germ");
    std::vector<Vec> basis;
    for (const auto& c : g.coeffs()) {
        if (static_cast<int>(basis.size()) == k) break;
        Vec r = residual(c, basis);
        if (!is_zero_vec(r)) basis.push_back(std::move(r));
    }
    if (static_cast<int>(basis.size()) < k)
        throw domain_error("extract_tangent: germ has fewer independent stages than k");
    return TangentTuple(g.base(), std::move(basis));
}

bool germ_in_polyhedron(const Polyhedron& x, const CurveGerm& g) {
    if (static_cast<std::size_t>(x.ambient_dim()) != g.dim())
        throw domain_error("germ_in_polyhedron: dimension mismatch");
    for (const auto& s : x.simplices()) {
        bool ok = true;
        for (const auto& eq : s.hull_equations()) {
            // A nonzero tail polynomial has finitely many integer zeros, so
            // an equality holds along the tail only when it holds identically.
            TailPoly p = g.compose_functional(eq);
            for (const auto& c : p)
                if (c.sign() != 0) { ok = false; break; }
            if (!ok) break;
        }
        if (!ok) continue;
        for (const auto& h : s.facet_halfspaces()) {
            TailPoly p = g.compose_functional(h);
            // Need h(x_i) <= 0 eventually: the eventual sign of -p is >= 0.
            if (eventual_sign(p) > 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool tangent_condition_2(const CurveGerm& g, const TangentTuple& u) {
    if (g.base() != u.base) throw domain_error("tangent_condition_2: base mismatch");
    // x_i - x escapes the span for all large i iff some coefficient has a
    // nonzero component orthogonal to it.
    for (const auto& c : g.coeffs())
        if (!is_zero_vec(residual(c, u.directions))) return true;
    return false;
}

bool verify_outgoing(const Polyhedron& x, const TangentTuple& u, const OutgoingWitness& w) {
    if (static_cast<std::size_t>(x.ambient_dim()) != u.base.size() ||
        w.simplex.ambient_dim() != u.base.size())
        throw domain_error("verify_outgoing: dimension mismatch");
    if (w.lambdas.size() != u.directions.size())
        throw domain_error("verify_outgoing: one lambda per direction required");

    // Chain points x, x + l1 u1, x + l1 u1 + l2 u2, ...
    std::vector<Point> chain{u.base};
    Point cur = u.base;
    for (std::size_t s = 0; s < u.directions.size(); ++s) {
        cur = vadd(cur, vscale(w.lambdas[s], u.directions[s]));
        chain.push_back(cur);
    }

    // (1) S contains the whole chain (hence its convex hull).
    for (const auto& p : chain)
        if (!w.simplex.contains(p)) return false;

    // (2) F does not contain the whole chain.
    Simplex f = w.face_simplex();
    bool all_in_face = true;
    for (const auto& p : chain) all_in_face = all_in_face && f.contains(p);
    if (all_in_face) return false;

    // (3) F n X = S n X.
    Polyhedron fx = poly_intersect(poly_from_simplex(f), x);
    Polyhedron sx = poly_intersect(poly_from_simplex(w.simplex), x);
    return poly_equal(fx, sx);
}

bool check_outgoing_tangent(const Polyhedron& x, const CurveGerm& g, int k,
                            const OutgoingWitness& w) {
    if (k < 1 || k > x.ambient_dim() - 1)
        throw domain_error("check_outgoing_tangent: k out of range 1..n-1");
    if (!germ_in_polyhedron(x, g)) return false;
    TangentTuple u = extract_tangent(g, k);
    if (!tangent_condition_2(g, u)) return false;
    return verify_outgoing(x, u, w);
}

}  // namespace mvd
