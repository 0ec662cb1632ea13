#include "relent/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace relent {

namespace {

bool has_transposed(const Relation& g) {
    for (const auto& s : g.segment_data())
        if (s.transposed) return true;
    return false;
}

// Minimal period of a tuple, then the lexicographically smallest rotation.
std::vector<Scalar> canonical_cycle(std::vector<Scalar> pts) {
    const size_t p = pts.size();
    for (size_t q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        bool periodic = true;
        for (size_t i = 0; i + q < p && periodic; ++i)
            if (pts[i] != pts[i + q]) periodic = false;
        if (periodic) {
            pts.resize(q);
            break;
        }
    }
    const size_t q = pts.size();
    size_t best = 0;
    for (size_t r = 1; r < q; ++r) {
        for (size_t i = 0; i < q; ++i) {
            int c = Scalar::cmp(pts[(r + i) % q], pts[(best + i) % q]);
            if (c < 0) { best = r; break; }
            if (c > 0) break;
        }
    }
    std::vector<Scalar> out;
    out.reserve(q);
    for (size_t i = 0; i < q; ++i) out.push_back(pts[(best + i) % q]);
    return out;
}

std::string cycle_key(const std::vector<Scalar>& pts) {
    std::string k;
    for (const auto& s : pts) k += s.str() + ";";
    return k;
}

// Smallest segment index of g containing each cyclic pair; the canonical
// branch word for a point cycle.
BranchWord derive_branch(const Relation& g, const std::vector<Scalar>& pts) {
    BranchWord w;
    if (g.kind() != RelKind::segments) return w;
    const auto& segs = g.segment_data();
    const size_t p = pts.size();
    for (size_t i = 0; i < p; ++i) {
        const Scalar& x = pts[(i + 1) % p];
        const Scalar& y = pts[i];
        int found = -1;
        for (size_t j = 0; j < segs.size() && found < 0; ++j)
            if (segs[j].contains(x, y)) found = static_cast<int>(j);
        if (found < 0) throw std::logic_error("cycle pair not on any segment");
        w.word.push_back(found);
    }
    return w;
}

void verify_orbit(const Relation& g, const PeriodicOrbit& orbit) {
    const size_t p = orbit.points.size();
    for (size_t i = 0; i < p; ++i) {
        if (!contains(g, orbit.points[(i + 1) % p], orbit.points[i]))
            throw std::logic_error("periodic orbit failed cyclic re-verification");
    }
}

Census search_segment_orbits(const Relation& g, int max_period) {
    struct Branch {
        Scalar s, e, lo, hi;
    };
    std::vector<Branch> br;
    for (const auto& seg : g.segment_data()) br.push_back({seg.slope, seg.intercept, seg.xlo, seg.xhi});

    Census out;
    std::map<std::string, PeriodicOrbit> orbit_set;
    std::map<std::string, OrbitFamily> family_set;
    long nodes = 0;

    // Depth-first over forward application words. After k applications the
    // composed map A_k sends x_1 to x_{p+1-k}; fixed points of A_p close a
    // p-cycle. The admissible-x_1 interval shrinks monotonically, so empty
    // domains prune whole subtrees.
    std::function<void(AffineMap, std::optional<Interval>, std::vector<int>&)> rec =
        [&](AffineMap a, std::optional<Interval> dom, std::vector<int>& word) {
            if (++nodes > 5000000) throw std::length_error("branch word search exceeded guard");
            const int depth = static_cast<int>(word.size());
            if (depth > 0 && dom) {
                // Solve A(x) = x on dom.
                if (a.c != Scalar(1)) {
                    Scalar x = a.e / (Scalar(1) - a.c);
                    if (dom->contains(x)) {
                        std::vector<Scalar> pts;
                        pts.push_back(x);
                        AffineMap acc{Scalar(1), Scalar(0)};
                        std::vector<Scalar> images;  // A_k(x) = x_{p+1-k}
                        for (int k = 0; k + 1 < depth; ++k) {
                            const Branch& b = br[word[k]];
                            acc = AffineMap{b.s * acc.c, b.s * acc.e + b.e};
                            images.push_back(acc(x));
                        }
                        for (int k = static_cast<int>(images.size()) - 1; k >= 0; --k) pts.push_back(images[k]);
                        std::vector<Scalar> canon = canonical_cycle(std::move(pts));
                        std::string key = cycle_key(canon);
                        if (!orbit_set.count(key)) {
                            PeriodicOrbit orbit;
                            orbit.period = static_cast<int>(canon.size());
                            orbit.points = std::move(canon);
                            orbit.branch = derive_branch(g, orbit.points);
                            verify_orbit(g, orbit);
                            orbit_set.emplace(std::move(key), std::move(orbit));
                        }
                    }
                } else if (a.e.is_zero()) {
                    OrbitFamily fam;
                    fam.period = depth;
                    fam.range = *dom;
                    for (int k = depth - 1; k >= 0; --k) fam.branch.word.push_back(word[k]);
                    std::string key = std::to_string(depth) + "|" + fam.range.lo.str() + "|" + fam.range.hi.str();
                    family_set.emplace(std::move(key), std::move(fam));
                }
            }
            if (depth == max_period || !dom) return;
            for (size_t i = 0; i < br.size(); ++i) {
                const Branch& b = br[i];
                // Input of this application is A(x); pull its domain back.
                std::optional<Interval> next = dom;
                if (a.c.is_zero()) {
                    if (!(b.lo <= a.e && a.e <= b.hi)) next = std::nullopt;
                } else {
                    Scalar u = (b.lo - a.e) / a.c;
                    Scalar v = (b.hi - a.e) / a.c;
                    if (u > v) std::swap(u, v);
                    next = next ? intersect(*next, Interval(u, v)) : std::nullopt;
                }
                if (!next) continue;
                AffineMap na{b.s * a.c, b.s * a.e + b.e};
                word.push_back(static_cast<int>(i));
                rec(na, next, word);
                word.pop_back();
            }
        };

    std::vector<int> word;
    rec(AffineMap{Scalar(1), Scalar(0)}, Interval(g.ambient().lo, g.ambient().hi), word);

    for (auto& [k, o] : orbit_set) out.orbits.push_back(std::move(o));
    for (auto& [k, f] : family_set) out.families.push_back(std::move(f));
    std::sort(out.orbits.begin(), out.orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.period != b.period) return a.period < b.period;
        return Scalar::cmp(a.points[0], b.points[0]) < 0;
    });
    return out;
}

Census search_finite_orbits(const Relation& g, int max_period) {
    FiniteDigraph dg = finite_digraph(g);
    const long nv = static_cast<long>(dg.values.size());
    Census out;
    std::map<std::string, PeriodicOrbit> orbit_set;
    long found = 0;

    std::vector<long> walk;
    std::function<void(long)> rec = [&](long v) {
        walk.push_back(v);
        // Closed walks (not only simple cycles) of length <= max_period are
        // periodic orbits once reversed.
        if (std::binary_search(dg.out[v].begin(), dg.out[v].end(), walk.front())) {
            if (++found > 200000) throw std::length_error("closed walk enumeration exceeded guard");
            std::vector<Scalar> pts;
            for (auto it = walk.rbegin(); it != walk.rend(); ++it) pts.push_back(dg.values[*it]);
            std::vector<Scalar> canon = canonical_cycle(std::move(pts));
            std::string key = cycle_key(canon);
            if (!orbit_set.count(key)) {
                PeriodicOrbit orbit;
                orbit.period = static_cast<int>(canon.size());
                orbit.points = std::move(canon);
                verify_orbit(g, orbit);
                orbit_set.emplace(std::move(key), std::move(orbit));
            }
        }
        if (static_cast<int>(walk.size()) < max_period) {
            for (long w : dg.out[v]) rec(w);
        }
        walk.pop_back();
    };
    for (long v = 0; v < nv; ++v) rec(v);

    for (auto& [k, o] : orbit_set) out.orbits.push_back(std::move(o));
    std::sort(out.orbits.begin(), out.orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.period != b.period) return a.period < b.period;
        return Scalar::cmp(a.points[0], b.points[0]) < 0;
    });
    return out;
}

}  // namespace

BranchComposition branch_compose(const Relation& segs, const BranchWord& w) {
    const auto& data = segs.segment_data();
    if (w.word.empty()) throw std::invalid_argument("empty branch word");
    AffineMap a{Scalar(1), Scalar(0)};  // x_1 -> x_{k+1}
    std::optional<Interval> dom = Interval(segs.ambient().lo, segs.ambient().hi);
    for (int idx : w.word) {
        if (idx < 0 || idx >= static_cast<int>(data.size())) throw std::invalid_argument("branch index out of range");
        const AffineSegment& s = data[idx];
        if (s.transposed) throw std::domain_error("branch not invertible (vertical piece)");
        if (s.slope.is_zero()) throw std::domain_error("branch not invertible");
        // x_{k+1} = (x_k - e)/s, constrained to the segment's x-domain.
        a = AffineMap{a.c / s.slope, (a.e - s.intercept) / s.slope};
        if (dom) {
            Scalar u = (s.xlo - a.e) / a.c;
            Scalar v = (s.xhi - a.e) / a.c;
            if (u > v) std::swap(u, v);
            dom = intersect(*dom, Interval(u, v));
        }
    }
    return BranchComposition{a, dom};
}

Census find_periodic_orbits(const Relation& g, int max_period) {
    if (max_period < 1) throw std::invalid_argument("max_period must be >= 1");
    if (max_period > 24) throw std::invalid_argument("max_period is capped at 24");
    if (g.kind() == RelKind::grid)
        throw std::invalid_argument("periodic orbits are defined for finite and segment relations only");
    if (g.kind() == RelKind::points) return search_finite_orbits(g, max_period);

    if (has_transposed(g)) {
        Relation inv = inverse(g);
        if (has_transposed(inv))
            throw std::invalid_argument("orbit search does not support mixed vertical and horizontal pieces");
        // Periodic orbits of G are the reversed periodic orbits of G^{-1}.
        Census rev = find_periodic_orbits(inv, max_period);
        Census out;
        for (auto& o : rev.orbits) {
            std::reverse(o.points.begin(), o.points.end());
            o.points = canonical_cycle(std::move(o.points));
            o.period = static_cast<int>(o.points.size());
            o.branch = derive_branch(g, o.points);
            verify_orbit(g, o);
            out.orbits.push_back(std::move(o));
        }
        for (auto& f : rev.families) {
            // The reversed orbit starts at x_p = f_{b_p}(x_1); map the range
            // through that branch. Branch words are not re-derived here.
            OrbitFamily nf;
            nf.period = f.period;
            const AffineSegment& last = inv.segment_data()[f.branch.word.back()];
            Scalar u = last.value_at(f.range.lo);
            Scalar v = last.value_at(f.range.hi);
            if (u > v) std::swap(u, v);
            nf.range = Interval(u, v);
            out.families.push_back(std::move(nf));
        }
        return out;
    }
    return search_segment_orbits(g, max_period);
}

NoOrbitProof prove_no_nonzero_periodic(const Relation& segs) {
    NoOrbitProof out;
    if (segs.kind() != RelKind::segments || segs.is_empty()) return out;

    std::vector<std::pair<Scalar, Scalar>> lines;  // (slope, intercept), distinct
    for (const auto& s : segs.segment_data()) {
        if (s.transposed) return out;
        if (s.slope == Scalar(1)) return out;  // diagonal-parallel piece
        bool seen = false;
        for (const auto& l : lines)
            if (l.first == s.slope && l.second == s.intercept) seen = true;
        if (!seen) lines.emplace_back(s.slope, s.intercept);
    }

    // All branch lines must share one diagonal fixed point c = e/(1-s);
    // every affine branch then fixes c, so any cyclic composition F satisfies
    // F(x) - c = (prod of slopes)(x - c) and fixes only c unless the slope
    // product is 1.
    Scalar c = lines.front().second / (Scalar(1) - lines.front().first);
    for (const auto& l : lines) {
        if (l.second / (Scalar(1) - l.first) != c) return out;
    }

    std::vector<Scalar> slopes;
    for (const auto& l : lines) {
        if (l.first.is_zero()) continue;  // constant branch: product 0 != 1
        bool seen = false;
        for (const auto& s : slopes)
            if (s == l.first) seen = true;
        if (!seen) slopes.push_back(l.first);
    }

    bool certified = false;
    const Scalar one(1);
    if (slopes.empty()) {
        certified = true;
    } else if (slopes.size() == 1) {
        certified = slopes[0].abs() != one;
    } else {
        bool all_big = true, all_small = true;
        for (const auto& s : slopes) {
            if (!(s.abs() > one)) all_big = false;
            if (!(s.abs() < one)) all_small = false;
        }
        if (all_big || all_small) {
            certified = true;
        } else if (slopes.size() == 2) {
            // One rational slope q with |q| not in {0, 1}, one slope u + v*sqrt(d)
            // with u*v != 0: every power of the latter is irrational (equal
            // conjugate magnitudes would force u*v = 0), so no mixed power
            // product can be 1.
            for (int i = 0; i < 2 && !certified; ++i) {
                const Scalar& q = slopes[i];
                const Scalar& irr = slopes[1 - i];
                if (q.is_rational() && q.abs() != one && !q.is_zero() && !irr.is_rational() &&
                    !irr.rational_part().is_zero() && !irr.radical_part().is_zero())
                    certified = true;
            }
        }
    }
    if (!certified) return out;
    out.proven = true;
    out.fixed_value = c;
    return out;
}

std::vector<std::vector<Scalar>> cycles_of_finite(const Relation& finite) {
    FiniteDigraph dg = finite_digraph(finite);
    const long nv = static_cast<long>(dg.values.size());
    std::vector<std::vector<Scalar>> cycles;
    std::vector<bool> on_path(nv, false);
    std::vector<long> path;

    // Simple cycles with the smallest vertex index first: each rotation class
    // is produced exactly once.
    std::function<void(long, long)> rec = [&](long start, long v) {
        on_path[v] = true;
        path.push_back(v);
        for (long w : dg.out[v]) {
            if (w == start) {
                std::vector<Scalar> cyc;
                for (long u : path) cyc.push_back(dg.values[u]);
                cycles.push_back(std::move(cyc));
                if (cycles.size() > 100000) throw std::length_error("cycle enumeration exceeded guard");
            } else if (w > start && !on_path[w]) {
                rec(start, w);
            }
        }
        path.pop_back();
        on_path[v] = false;
    };
    for (long s = 0; s < nv; ++s) rec(s, s);
    return cycles;
}

PeriodicOrbit build_periodic_from_cycle(const Relation& finite, const std::vector<Scalar>& cycle) {
    if (cycle.empty()) throw std::invalid_argument("invalid cycle");
    const size_t p = cycle.size();
    for (size_t i = 0; i < p; ++i) {
        if (!contains(finite, cycle[i], cycle[(i + 1) % p])) throw std::invalid_argument("invalid cycle");
    }
    // The orbit reads the cycle against the arrows: (x_{i+1}, x_i) in F.
    std::vector<Scalar> pts(cycle.rbegin(), cycle.rend());
    PeriodicOrbit orbit;
    orbit.points = canonical_cycle(std::move(pts));
    orbit.period = static_cast<int>(orbit.points.size());

    // Re-verify that the 3p-prefix of the infinite repetition is shifted onto
    // itself by sigma^p and stays inside the Mahavier product.
    const size_t q = orbit.points.size();
    std::vector<Scalar> prefix;
    for (size_t i = 0; i < 3 * q; ++i) prefix.push_back(orbit.points[i % q]);
    for (size_t i = 0; i + 1 < prefix.size(); ++i)
        if (!contains(finite, prefix[i + 1], prefix[i])) throw std::logic_error("cycle does not generate an orbit");
    for (size_t i = 0; i + q < prefix.size(); ++i)
        if (prefix[i] != prefix[i + q]) throw std::logic_error("prefix not fixed by the shift power");
    return orbit;
}

bool infinite_product_nonempty(const Relation& finite) {
    FiniteDigraph dg = finite_digraph(finite);
    const long nv = static_cast<long>(dg.values.size());
    // An infinite walk exists in a finite digraph iff some cycle exists.
    std::vector<int> color(nv, 0);
    std::function<bool(long)> has_cycle = [&](long v) {
        color[v] = 1;
        for (long w : dg.out[v]) {
            if (color[w] == 1) return true;
            if (color[w] == 0 && has_cycle(w)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (long v = 0; v < nv; ++v)
        if (color[v] == 0 && has_cycle(v)) return true;
    return false;
}

Relation restrict_to_core(const Relation& g) {
    if (g.kind() == RelKind::grid) return g;
    IntervalSet core = project(g, 1).intersect_with(project(g, 2));
    if (g.kind() == RelKind::points) {
        std::vector<Point> pts;
        for (const auto& p : g.point_data())
            if (core.contains(p.first) && core.contains(p.second)) pts.push_back(p);
        return Relation::points(g.ambient(), std::move(pts));
    }
    std::vector<AffineSegment> segs;
    for (const auto& s : g.segment_data()) {
        // Keep the parameter ranges where both coordinates land in the core
        // (the constraint is symmetric, so transposed pieces use the same
        // computation on their underlying parameter).
        IntervalSet param({Interval(s.xlo, s.xhi)});
        param = param.intersect_with(core);
        // Pull the other coordinate's constraint back through the affine map.
        std::vector<Interval> pulled;
        if (s.slope.is_zero()) {
            if (core.contains(s.intercept)) pulled.push_back(Interval(s.xlo, s.xhi));
        } else {
            for (const auto& iv : core.parts()) {
                Scalar u = (iv.lo - s.intercept) / s.slope;
                Scalar v = (iv.hi - s.intercept) / s.slope;
                if (u > v) std::swap(u, v);
                pulled.emplace_back(u, v);
            }
        }
        param = param.intersect_with(IntervalSet(std::move(pulled)));
        for (const auto& iv : param.parts()) segs.emplace_back(s.slope, s.intercept, iv.lo, iv.hi, s.transposed);
    }
    return Relation::segments(g.ambient(), std::move(segs));
}

OrbitCensus orbit_census(const Relation& g, int max_period) {
    OrbitCensus oc;
    oc.max_period = max_period;
    if (g.kind() != RelKind::grid && g.is_empty()) {
        oc.proof = ProofLevel::proven;
        return oc;
    }
    oc.census = find_periodic_orbits(g, max_period);
    if (g.kind() == RelKind::points) {
        if (!infinite_product_nonempty(g)) oc.proof = ProofLevel::proven;
        return oc;
    }
    if (g.kind() != RelKind::segments) return oc;

    Relation core = restrict_to_core(g);
    NoOrbitProof pr = prove_no_nonzero_periodic(core);
    if (!pr.proven) return oc;

    // The certificate pins every periodic point to the constant sequence at
    // the common fixed value; the census must agree exactly.
    bool fixed_present = g.ambient().contains(pr.fixed_value) && !core.is_empty() &&
                         contains(core, pr.fixed_value, pr.fixed_value);
    if (!oc.census.families.empty()) throw std::logic_error("proof contradicts a reported orbit family");
    if (fixed_present) {
        if (oc.census.orbits.size() != 1 || oc.census.orbits[0].period != 1 ||
            oc.census.orbits[0].points[0] != pr.fixed_value)
            throw std::logic_error("proof disagrees with the exhaustive orbit search");
    } else if (!oc.census.orbits.empty()) {
        throw std::logic_error("proof disagrees with the exhaustive orbit search");
    }
    oc.proof = ProofLevel::proven;
    return oc;
}

}  // namespace relent
