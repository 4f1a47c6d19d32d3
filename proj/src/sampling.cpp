#include "mvdual/sampling.hpp"

#include <algorithm>

namespace mvd {

long Sampler::pick(long lo, long hi) {
    if (hi < lo) throw domain_error("pick: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rat Sampler::rat(long max_den) {
    long den = pick(1, max_den);
    long num = pick(0, den);
    return Rat(num, den);
}

Rat Sampler::positive_rat(long max_den) {
    long den = pick(1, max_den);
    long num = pick(1, den);
    return Rat(num, den);
}

Point Sampler::point(int n, long max_den) {
    Point p(static_cast<std::size_t>(n));
    for (auto& c : p) c = rat(max_den);
    return p;
}

Term Sampler::term(int arity, int max_depth) {
    if (max_depth <= 0 || (arity == 0 && pick(0, 2) == 0)) {
        long c = pick(0, arity == 0 ? 1 : 2 + arity);
        if (c == 0) return Term::zero();
        if (c == 1) return Term::one();
        return Term::var(static_cast<int>(pick(0, arity - 1)));
    }
    switch (pick(0, 7)) {
        case 0: return Term::neg(term(arity, max_depth - 1));
        case 1:
        case 2: return Term::oplus(term(arity, max_depth - 1), term(arity, max_depth - 1));
        case 3: return Term::odot(term(arity, max_depth - 1), term(arity, max_depth - 1));
        case 4: return Term::vee(term(arity, max_depth - 1), term(arity, max_depth - 1));
        case 5: return Term::wedge(term(arity, max_depth - 1), term(arity, max_depth - 1));
        case 6: return Term::imp(term(arity, max_depth - 1), term(arity, max_depth - 1));
        default: {
            long c = pick(0, arity == 0 ? 1 : 2 + arity);
            if (c == 0) return Term::zero();
            if (c == 1) return Term::one();
            return Term::var(static_cast<int>(pick(0, arity - 1)));
        }
    }
}

Presentation Sampler::presentation(int arity, int max_relations, int max_depth) {
    long nrels = pick(0, max_relations);
    std::vector<std::pair<Term, Term>> rels;
    for (long i = 0; i < nrels; ++i) {
        Term s = term(arity, max_depth);
        // Bias toward satisfiable relations: half the time equate with 1 or
        // a plain variable instead of a second random term.
        long mode = pick(0, 3);
        Term t = mode == 0   ? Term::one()
                 : mode == 1 ? (arity > 0 ? Term::var(static_cast<int>(pick(0, arity - 1)))
                                          : Term::zero())
                             : term(arity, max_depth);
        rels.emplace_back(std::move(s), std::move(t));
    }
    return Presentation(arity, std::move(rels));
}

Simplex Sampler::simplex_in_cube(int n, int dim, long max_den) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Point> verts;
        for (int i = 0; i <= dim; ++i) verts.push_back(point(n, max_den));
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (static_cast<int>(verts.size()) != dim + 1) continue;
        if (!affine_independent(verts)) continue;
        return Simplex(std::move(verts));
    }
    throw domain_error("simplex_in_cube: could not sample an independent vertex set");
}

Polyhedron Sampler::polyhedron(int n, int max_simplices, long max_den) {
    long count = pick(1, max_simplices);
    std::vector<Simplex> simps;
    for (long i = 0; i < count; ++i) {
        // Mostly full-dimensional pieces, sometimes lower-dimensional ones.
        long d = pick(0, 3) == 0 ? pick(0, n) : n;
        simps.push_back(simplex_in_cube(n, static_cast<int>(d), max_den));
    }
    return Polyhedron(n, std::move(simps));
}

CurveGerm Sampler::germ_in(const Polyhedron& x, int stages, long max_den) {
    if (x.empty()) throw domain_error("germ_in: empty polyhedron");
    for (int attempt = 0; attempt < 200; ++attempt) {
        const Simplex& t =
            x.simplices()[static_cast<std::size_t>(pick(0, static_cast<long>(x.simplices().size()) - 1))];
        const auto& vs = t.vertices();
        // Base: a random vertex or the barycenter.
        Point base = pick(0, 3) == 0 ? t.barycenter()
                                     : vs[static_cast<std::size_t>(
                                           pick(0, static_cast<long>(vs.size()) - 1))];
        // Stage coefficients: nonnegative combinations of (v_j - base), so
        // the curve approaches base inside t.
        std::vector<Vec> coeffs;
        bool nonzero_first = false;
        for (int k = 0; k < stages; ++k) {
            Vec c(base.size(), Rat(0));
            for (const auto& v : vs) {
                if (pick(0, 2) != 0) continue;
                Rat mu = rat(max_den);
                if (mu.sign() == 0) continue;
                c = vadd(c, vscale(mu, vsub(v, base)));
            }
            if (k == 0 && !is_zero_vec(c)) nonzero_first = true;
            coeffs.push_back(std::move(c));
        }
        if (!nonzero_first) continue;
        try {
            return CurveGerm::with_auto_i0(base, coeffs);
        } catch (const domain_error&) {
            continue;  // numerically fine but outside the cube; resample
        }
    }
    throw domain_error("germ_in: sampling failed");
}

CurveGerm Sampler::germ_anywhere(int n, int stages, long max_den) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Point base = point(n, max_den);
        std::vector<Vec> coeffs;
        for (int k = 0; k < stages; ++k) {
            Vec c(static_cast<std::size_t>(n));
            for (auto& e : c) {
                Rat r = rat(max_den);
                e = pick(0, 1) == 0 ? r : -r;
            }
            coeffs.push_back(std::move(c));
        }
        if (coeffs.empty() || is_zero_vec(coeffs[0])) continue;
        try {
            return CurveGerm::with_auto_i0(base, coeffs);
        } catch (const domain_error&) {
            continue;
        }
    }
    throw domain_error("germ_anywhere: sampling failed");
}

OutgoingWitness Sampler::witness(const Point& base, int k, long max_den) {
    int n = static_cast<int>(base.size());
    for (int attempt = 0; attempt < 200; ++attempt) {
        int extra = static_cast<int>(pick(std::max(1L, static_cast<long>(k)), static_cast<long>(n)));
        std::vector<Point> verts{base};
        for (int i = 0; i < extra; ++i) {
            Point v = base;
            for (auto& c : v) {
                long moves = pick(-2, 2);
                c = c + Rat(moves, 8 * pick(1, max_den));
                if (c.sign() < 0) c = Rat(0);
                if (c > Rat(1)) c = Rat(1);
            }
            verts.push_back(std::move(v));
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (!affine_independent(verts)) continue;
        Simplex s(verts);
        long fsize = pick(1, static_cast<long>(s.vertices().size()));
        std::vector<int> face;
        for (long i = 0; i < fsize; ++i)
            face.push_back(static_cast<int>(pick(0, static_cast<long>(s.vertices().size()) - 1)));
        std::sort(face.begin(), face.end());
        face.erase(std::unique(face.begin(), face.end()), face.end());
        std::vector<Rat> lambdas;
        for (int i = 0; i < k; ++i) lambdas.push_back(positive_rat(max_den));
        return OutgoingWitness(std::move(s), std::move(face), std::move(lambdas));
    }
    throw domain_error("witness: sampling failed");
}

FalsifyReport poly_falsify_suite(int dim, int n_polyhedra, int samples_per_poly,
                                 std::uint64_t seed) {
    if (dim < 2) throw domain_error("poly_falsify_suite: dimension must be at least 2");
    Sampler s(seed);
    FalsifyReport report;
    for (int p = 0; p < n_polyhedra; ++p) {
        Polyhedron x = s.polyhedron(dim, 3, 4);
        ++report.polyhedra;
        for (int i = 0; i < samples_per_poly; ++i) {
            int k = static_cast<int>(s.pick(1, std::min(2L, static_cast<long>(dim - 1))));
            CurveGerm g = s.pick(0, 4) == 0 ? s.germ_anywhere(dim, k + (s.pick(0, 1) != 0), 4)
                                            : s.germ_in(x, k + (s.pick(0, 1) != 0 ? 1 : 0), 4);
            bool inside = germ_in_polyhedron(x, g);
            if (inside) {
                ++report.germs_in_x;
                // Keep k within the germ's independent stages so the checker
                // always returns instead of reporting a malformed request.
                while (k > 1) {
                    try {
                        extract_tangent(g, k);
                        break;
                    } catch (const domain_error&) {
                        --k;
                    }
                }
                try {
                    extract_tangent(g, k);
                } catch (const domain_error&) {
                    continue;  // constant germ: nothing to check
                }
            }
            OutgoingWitness w = s.witness(g.base(), k, 4);
            ++report.checks;
            if (check_outgoing_tangent(x, g, k, w)) ++report.counterexamples;
        }
    }
    return report;
}

}  // namespace mvd
