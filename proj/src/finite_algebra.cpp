#include "mvdual/finite_algebra.hpp"

#include <algorithm>
#include <set>

namespace mvd {

namespace {

Vec pointwise(const Vec& a, const Vec& b, Rat (*op)(const Rat&, const Rat&)) {
    if (a.size() != b.size()) throw domain_error("tuple operation: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = op(a[i], b[i]);
    return r;
}

}  // namespace

Vec tuple_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mv_neg(a[i]);
    return r;
}
Vec tuple_oplus(const Vec& a, const Vec& b) { return pointwise(a, b, mv_oplus); }
Vec tuple_odot(const Vec& a, const Vec& b) { return pointwise(a, b, mv_odot); }
Vec tuple_vee(const Vec& a, const Vec& b) { return pointwise(a, b, mv_vee); }
Vec tuple_wedge(const Vec& a, const Vec& b) { return pointwise(a, b, mv_wedge); }

FiniteMVAlgebra::FiniteMVAlgebra(int ambient, std::vector<Tuple> elements)
    : ambient_(ambient), elems_(std::move(elements)) {
    if (ambient_ < 0) throw domain_error("algebra with negative ambient dimension");
    if (elems_.empty()) throw domain_error("algebra needs at least one element");
    for (const auto& e : elems_) {
        if (e.size() != static_cast<std::size_t>(ambient_))
            throw domain_error("algebra element has wrong arity");
        if (!in_unit_cube(e)) throw domain_error("algebra element outside [0,1]^N");
    }
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());

    Tuple zero(static_cast<std::size_t>(ambient_), Rat(0));
    zero_ix_ = index_of(zero);
    one_ix_ = index_of(tuple_neg(zero));
    if (zero_ix_ < 0) throw domain_error("algebra misses the zero tuple");
    for (const auto& a : elems_) {
        if (index_of(tuple_neg(a)) < 0) throw domain_error("algebra not closed under negation");
        for (const auto& b : elems_)
            if (index_of(tuple_oplus(a, b)) < 0)
                throw domain_error("algebra not closed under truncated sum");
    }
}

int FiniteMVAlgebra::index_of(const Tuple& t) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
    if (it == elems_.end() || *it != t) return -1;
    return static_cast<int>(it - elems_.begin());
}

bool FiniteMVAlgebra::is_trivial() const { return zero_ix_ == one_ix_; }

FiniteMVAlgebra chain(int n) {
    if (n < 1) throw domain_error("chain needs n >= 1");
    std::vector<Vec> elems;
    for (int k = 0; k <= n; ++k) elems.push_back({Rat(k, n)});
    return FiniteMVAlgebra(1, std::move(elems));
}

FiniteMVAlgebra algebra_product(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
    std::vector<Vec> elems;
    for (const auto& x : a.elements()) {
        for (const auto& y : b.elements()) {
            Vec t = x;
            t.insert(t.end(), y.begin(), y.end());
            elems.push_back(std::move(t));
        }
    }
    return FiniteMVAlgebra(a.ambient() + b.ambient(), std::move(elems));
}

FiniteMVAlgebra subalgebra_closure(int ambient, const std::vector<Vec>& generators) {
    std::set<Vec> seen;
    seen.insert(Vec(static_cast<std::size_t>(ambient), Rat(0)));
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(ambient))
            throw domain_error("generator has wrong arity");
        if (!in_unit_cube(g)) throw domain_error("generator outside [0,1]^N");
        seen.insert(g);
    }
    // All coordinates keep denominators dividing the generators' lcm, so the
    // fixpoint is reached in finitely many rounds.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> snapshot(seen.begin(), seen.end());
        for (const auto& a : snapshot) {
            if (seen.insert(tuple_neg(a)).second) grew = true;
            for (const auto& b : snapshot)
                if (seen.insert(tuple_oplus(a, b)).second) grew = true;
        }
    }
    return FiniteMVAlgebra(ambient, std::vector<Vec>(seen.begin(), seen.end()));
}

std::string element_label(const Vec& t) { return vec_str(t); }

namespace {

// How each element arises from a generator set; drives hom extension.
struct Derivation {
    enum class Kind { Zero, Gen, Neg, Oplus } kind = Kind::Zero;
    int gen = -1;        // generator slot
    int a = -1, b = -1;  // element indices
};

struct ClosureInfo {
    std::vector<bool> known;
    std::vector<Derivation> der;
    std::vector<int> order;  // fill order, respects dependencies

    bool covers_all() const {
        return std::all_of(known.begin(), known.end(), [](bool b) { return b; });
    }
};

ClosureInfo close_over(const FiniteMVAlgebra& alg, const std::vector<int>& gens) {
    ClosureInfo info;
    info.known.assign(alg.size(), false);
    info.der.assign(alg.size(), {});
    auto mark = [&](int ix, Derivation d) {
        if (!info.known[static_cast<std::size_t>(ix)]) {
            info.known[static_cast<std::size_t>(ix)] = true;
            info.der[static_cast<std::size_t>(ix)] = d;
            info.order.push_back(ix);
        }
    };
    mark(alg.zero_index(), {Derivation::Kind::Zero});
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        mark(gens[gi], {Derivation::Kind::Gen, static_cast<int>(gi)});
    for (std::size_t head = 0; head < info.order.size(); ++head) {
        int i = info.order[head];
        const Vec& ei = alg.elements()[static_cast<std::size_t>(i)];
        mark(alg.index_of(tuple_neg(ei)), {Derivation::Kind::Neg, -1, i});
        // Combine with everything already known (including elements added
        // later in the scan: re-walk the list each round).
        for (std::size_t other = 0; other <= head; ++other) {
            int j = info.order[other];
            const Vec& ej = alg.elements()[static_cast<std::size_t>(j)];
            mark(alg.index_of(tuple_oplus(ei, ej)), {Derivation::Kind::Oplus, -1, i, j});
            mark(alg.index_of(tuple_oplus(ej, ei)), {Derivation::Kind::Oplus, -1, j, i});
        }
    }
    return info;
}

}  // namespace

Spectrum spectrum(const FiniteMVAlgebra& alg) {
    Spectrum out;
    for (const auto& e : alg.elements()) out.labels.push_back(element_label(e));

    // Candidate hom values live on the grid given by the data's denominator.
    Int big_l = 1;
    for (const auto& e : alg.elements())
        for (const auto& c : e) big_l = lcm(big_l, c.den());
    if (!big_l.fits_slong_p()) throw domain_error("spectrum: denominator lcm too large");
    long l = big_l.get_si();

    // Greedy generating set in element order.
    std::vector<int> gens;
    ClosureInfo info = close_over(alg, gens);
    while (!info.covers_all()) {
        for (std::size_t i = 0; i < alg.size(); ++i) {
            if (!info.known[i]) {
                gens.push_back(static_cast<int>(i));
                break;
            }
        }
        info = close_over(alg, gens);
    }

    std::vector<Rat> grid;
    for (long k = 0; k <= l; ++k) grid.push_back(Rat(k, l));

    std::vector<Point> points;
    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<Rat> values(alg.size());
    while (true) {
        for (int ix : info.order) {
            const Derivation& d = info.der[static_cast<std::size_t>(ix)];
            Rat v;
            switch (d.kind) {
                case Derivation::Kind::Zero: v = Rat(0); break;
                case Derivation::Kind::Gen: v = grid[choice[static_cast<std::size_t>(d.gen)]]; break;
                case Derivation::Kind::Neg: v = mv_neg(values[static_cast<std::size_t>(d.a)]); break;
                case Derivation::Kind::Oplus:
                    v = mv_oplus(values[static_cast<std::size_t>(d.a)],
                                 values[static_cast<std::size_t>(d.b)]);
                    break;
            }
            values[static_cast<std::size_t>(ix)] = std::move(v);
        }
        // Exhaustive preservation check over all elements and pairs.
        bool ok = values[static_cast<std::size_t>(alg.zero_index())].sign() == 0;
        for (std::size_t i = 0; ok && i < alg.size(); ++i) {
            const Vec& ei = alg.elements()[i];
            int ni = alg.index_of(tuple_neg(ei));
            if (values[static_cast<std::size_t>(ni)] != mv_neg(values[i])) ok = false;
            for (std::size_t j = i; ok && j < alg.size(); ++j) {
                int oi = alg.index_of(tuple_oplus(ei, alg.elements()[j]));
                if (values[static_cast<std::size_t>(oi)] != mv_oplus(values[i], values[j]))
                    ok = false;
            }
        }
        if (ok) points.push_back(values);

        if (gens.empty()) break;
        std::size_t k = 0;
        while (k < gens.size() && ++choice[k] == grid.size()) choice[k++] = 0;
        if (k == gens.size()) break;
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    out.points = std::move(points);
    return out;
}

Spectrum coproduct_spectrum(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
    Spectrum sa = spectrum(a), sb = spectrum(b);
    Spectrum out;
    for (const auto& l : sa.labels) out.labels.push_back("A:" + l);
    for (const auto& l : sb.labels) out.labels.push_back("B:" + l);
    for (const auto& p : sa.points) {
        for (const auto& q : sb.points) {
            Point r = p;
            r.insert(r.end(), q.begin(), q.end());
            out.points.push_back(std::move(r));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

TensorSpectrum tensor_spectrum(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b) {
    Spectrum sa = spectrum(a), sb = spectrum(b);
    TensorSpectrum out;
    for (const auto& la : sa.labels)
        for (const auto& lb : sb.labels) out.spec.labels.push_back(la + "*" + lb);
    for (std::size_t i = 0; i < sa.points.size(); ++i) {
        for (std::size_t j = 0; j < sb.points.size(); ++j) {
            Point r;
            r.reserve(out.spec.labels.size());
            for (const auto& pa : sa.points[i])
                for (const auto& qb : sb.points[j]) r.push_back(pa * qb);
            out.spec.points.push_back(std::move(r));
            out.pairing.emplace_back(i, j);
        }
    }
    // Points stay aligned with the pairing; injectivity assertions need to
    // be able to notice collisions, so no deduplication here.
    return out;
}

bool relations_satisfied(const FiniteMVAlgebra& a, const FiniteMVAlgebra& b, const Point& pt) {
    std::size_t na = a.size(), nb = b.size();
    if (pt.size() != na * nb) throw domain_error("relations_satisfied: index mismatch");
    auto at = [&](int ia, int ib) -> const Rat& {
        return pt[static_cast<std::size_t>(ia) * nb + static_cast<std::size_t>(ib)];
    };

    // (1): r(1,1) = 1, r(a,0) = 0, r(0,b) = 0.
    if (at(a.one_index(), b.one_index()) != Rat(1)) return false;
    for (std::size_t i = 0; i < na; ++i)
        if (at(static_cast<int>(i), b.zero_index()).sign() != 0) return false;
    for (std::size_t j = 0; j < nb; ++j)
        if (at(a.zero_index(), static_cast<int>(j)).sign() != 0) return false;

    // (2),(4): lattice operations in the B slot; (6),(8): odot annihilation
    // and additivity when b1 odot b2 = 0.
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j1 = 0; j1 < nb; ++j1) {
            for (std::size_t j2 = 0; j2 < nb; ++j2) {
                const Vec& b1 = b.elements()[j1];
                const Vec& b2 = b.elements()[j2];
                const Rat& x1 = at(static_cast<int>(i), static_cast<int>(j1));
                const Rat& x2 = at(static_cast<int>(i), static_cast<int>(j2));
                if (at(static_cast<int>(i), b.index_of(tuple_vee(b1, b2))) != mv_vee(x1, x2))
                    return false;
                if (at(static_cast<int>(i), b.index_of(tuple_wedge(b1, b2))) != mv_wedge(x1, x2))
                    return false;
                if (b.index_of(tuple_odot(b1, b2)) == b.zero_index()) {
                    if (mv_odot(x1, x2).sign() != 0) return false;
                    if (at(static_cast<int>(i), b.index_of(tuple_oplus(b1, b2))) !=
                        mv_oplus(x1, x2))
                        return false;
                }
            }
        }
    }
    // (3),(5),(7),(9): the same with the A slot varying.
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t i1 = 0; i1 < na; ++i1) {
            for (std::size_t i2 = 0; i2 < na; ++i2) {
                const Vec& a1 = a.elements()[i1];
                const Vec& a2 = a.elements()[i2];
                const Rat& x1 = at(static_cast<int>(i1), static_cast<int>(j));
                const Rat& x2 = at(static_cast<int>(i2), static_cast<int>(j));
                if (at(a.index_of(tuple_vee(a1, a2)), static_cast<int>(j)) != mv_vee(x1, x2))
                    return false;
                if (at(a.index_of(tuple_wedge(a1, a2)), static_cast<int>(j)) != mv_wedge(x1, x2))
                    return false;
                if (a.index_of(tuple_odot(a1, a2)) == a.zero_index()) {
                    if (mv_odot(x1, x2).sign() != 0) return false;
                    if (at(a.index_of(tuple_oplus(a1, a2)), static_cast<int>(j)) !=
                        mv_oplus(x1, x2))
                        return false;
                }
            }
        }
    }
    return true;
}

FiniteMVAlgebra algebra_of_spectrum(const Spectrum& x) {
    int ambient = static_cast<int>(x.points.size());
    std::vector<Vec> gens;
    for (std::size_t l = 0; l < x.labels.size(); ++l) {
        Vec g;
        g.reserve(x.points.size());
        for (const auto& p : x.points) g.push_back(p[l]);
        gens.push_back(std::move(g));
    }
    return subalgebra_closure(ambient, gens);
}

}  // namespace mvd
