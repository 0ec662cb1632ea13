#include "relent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace relent {

namespace {

// Iterative Tarjan SCC on the walk graph (entry (i,j) read as edge i -> j).
std::vector<std::vector<long>> strongly_connected_components(const TransitionMatrix& m) {
    const long n = m.n;
    std::vector<long> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<long> stack;
    std::vector<std::vector<long>> sccs;
    long next_index = 0;

    struct Frame {
        long v;
        size_t edge;
    };
    for (long start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < m.rows[f.v].size()) {
                long w = m.rows[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                long v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<long> scc;
                    long w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = static_cast<long>(sccs.size());
                        scc.push_back(w);
                    } while (w != v);
                    sccs.push_back(std::move(scc));
                }
            }
        }
    }
    return sccs;
}

// Perron-root enclosure of one irreducible block via power iteration on
// block + I. For strictly positive v, min_i (Bv)_i/v_i <= rho(B) <= max_i,
// and enclosures from successive iterates may be intersected.
std::pair<double, double> block_perron(const TransitionMatrix& m, const std::vector<long>& scc) {
    const size_t k = scc.size();
    std::vector<long> local(m.n, -1);
    for (size_t i = 0; i < k; ++i) local[scc[i]] = static_cast<long>(i);
    std::vector<std::vector<long>> adj(k);
    for (size_t i = 0; i < k; ++i) {
        for (long j : m.rows[scc[i]])
            if (local[j] >= 0) adj[i].push_back(local[j]);
    }

    std::vector<double> v(k, 1.0);
    double best_lo = 1.0, best_hi = std::numeric_limits<double>::infinity();
    const double target = 1e-10;
    for (int it = 0; it < 200000; ++it) {
        std::vector<double> w(k, 0.0);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (size_t i = 0; i < k; ++i) {
            double acc = v[i];  // the +I shift
            for (long j : adj[i]) acc += v[j];
            w[i] = acc;
            double ratio = acc / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        best_lo = std::max(best_lo, lo);
        best_hi = std::min(best_hi, hi);
        if (best_hi - best_lo <= target) break;
        double norm = *std::max_element(w.begin(), w.end());
        for (auto& x : w) x /= norm;
        v = std::move(w);
    }
    // Small inflation absorbs double rounding in the ratio computations.
    const double pad = 1e-12 * best_hi;
    return {best_lo - 1.0 - pad, best_hi - 1.0 + pad};
}

}  // namespace

SpectralResult spectral_entropy(const TransitionMatrix& m) {
    // rho(M) = max over SCC blocks; [max lo, max hi] encloses the maximum.
    double rho_lo = 0.0, rho_hi = 0.0;
    bool any_cycle = false;
    std::vector<bool> member(m.n, false);
    for (const auto& scc : strongly_connected_components(m)) {
        for (long v : scc) member[v] = true;
        bool has_edge = false;
        for (long v : scc) {
            for (long j : m.rows[v])
                if (member[j]) { has_edge = true; break; }
            if (has_edge) break;
        }
        for (long v : scc) member[v] = false;
        if (!has_edge) continue;  // trivial component, contributes no cycle
        auto [lo, hi] = block_perron(m, scc);
        rho_lo = std::max(rho_lo, lo);
        rho_hi = std::max(rho_hi, hi);
        any_cycle = true;
    }
    SpectralResult r;
    if (!any_cycle) {
        r.no_growth = true;
        return r;
    }
    // An integer matrix with a cycle has rho >= 1.
    r.lo = std::log(std::max(rho_lo, 1.0));
    r.hi = std::log(std::max(rho_hi, 1.0));
    return r;
}

/// log of a positive big integer, accurate to ~1e-13 relative.
static double log_big(const Int& x) {
    if (x <= 0) throw std::domain_error("log of non-positive count");
    if (x == 1) return 0.0;
    const long bits = static_cast<long>(boost::multiprecision::msb(x));
    if (bits <= 52) return std::log(x.convert_to<double>());
    const long shift = bits - 52;
    Int mant = x >> shift;
    return std::log(mant.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

Int box_count(const Relation& g, long n, long m) {
    if (g.is_empty()) throw std::domain_error("entropy of the empty relation is 0 by definition; no counts");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    Relation bitmap = (g.kind() == RelKind::grid && g.grid_n() == n) ? g : rasterize(g, n);
    return walk_count(transition_matrix(bitmap), m);
}

FiniteDigraph finite_digraph(const Relation& finite) {
    const auto& pts = finite.point_data();
    std::vector<Scalar> values;
    for (const auto& p : pts) {
        values.push_back(p.first);
        values.push_back(p.second);
    }
    std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    values.erase(std::unique(values.begin(), values.end()), values.end());

    FiniteDigraph dg;
    dg.values = std::move(values);
    dg.out.assign(dg.values.size(), {});
    for (const auto& p : pts) dg.out[dg.index_of(p.first)].push_back(dg.index_of(p.second));
    for (auto& o : dg.out) std::sort(o.begin(), o.end());
    return dg;
}

long FiniteDigraph::index_of(const Scalar& v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v,
                               [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    if (it == values.end() || *it != v) throw std::logic_error("value not a digraph vertex");
    return static_cast<long>(it - values.begin());
}

std::vector<std::vector<Scalar>> mahavier_members(const Relation& finite, long m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    FiniteDigraph dg = finite_digraph(finite);
    const size_t nv = dg.values.size();
    double est = std::pow(static_cast<double>(nv), static_cast<double>(m + 1));
    if (est > 1e7) throw std::length_error("mahavier_members: sequence space too large");

    // (x_{k+1}, x_k) in F means edge x_{k+1} -> x_k; enumerate tuples
    // directly over value indices in lexicographic order.
    std::vector<std::vector<bool>> edge(nv, std::vector<bool>(nv, false));
    for (size_t i = 0; i < nv; ++i)
        for (long j : dg.out[i]) edge[i][j] = true;

    std::vector<std::vector<Scalar>> out;
    std::vector<size_t> tuple(m + 1);
    std::function<void(long)> rec = [&](long k) {
        if (k == m + 1) {
            std::vector<Scalar> seq;
            seq.reserve(m + 1);
            for (size_t idx : tuple) seq.push_back(dg.values[idx]);
            out.push_back(std::move(seq));
            if (out.size() > 2000000) throw std::length_error("mahavier_members: too many sequences");
            return;
        }
        for (size_t v = 0; v < nv; ++v) {
            if (k > 0 && !edge[v][tuple[k - 1]]) continue;
            tuple[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

EntropyReport entropy_sequence(const Relation& g, long n, long m_max) {
    if (m_max < 2) throw std::invalid_argument("m_max must be >= 2");
    if (m_max > 32) throw std::invalid_argument("m_max is capped at 32 for exact counts");
    EntropyReport rep;
    rep.n = n;
    rep.m_max = m_max;
    if (g.is_empty()) {
        rep.empty_relation = true;
        rep.spectral.no_growth = true;
        return rep;
    }
    Relation bitmap = (g.kind() == RelKind::grid && g.grid_n() == n) ? g : rasterize(g, n);
    rep.outer = !(g.kind() == RelKind::grid && g.grid_n() == n);
    TransitionMatrix tm = transition_matrix(bitmap);

    Int bound = 1;
    for (long m = 1; m <= m_max; ++m) {
        rep.counts.push_back(walk_count(tm, m));
        if (m == 1) {
            bound = Int(n) * Int(n);
        } else {
            bound *= Int(n);
        }
        if (rep.counts.back() > bound) rep.obs_bound_ok = false;
        rep.ratios.push_back(log_big(rep.counts.back()) / static_cast<double>(m));
    }
    for (long m = 1; m <= m_max; ++m)
        for (long k = 1; m + k <= m_max; ++k)
            if (rep.counts[m + k - 1] > rep.counts[m - 1] * rep.counts[k - 1]) rep.subadditive_ok = false;

    rep.min_ratio = *std::min_element(rep.ratios.begin(), rep.ratios.end());
    rep.spectral = spectral_entropy(tm);
    return rep;
}

SpectralResult finite_entropy(const Relation& finite) {
    FiniteDigraph dg = finite_digraph(finite);
    TransitionMatrix m;
    m.n = static_cast<long>(dg.values.size());
    m.rows = dg.out;
    return spectral_entropy(m);
}

bool check_inverse_invariance(const Relation& g, long n, long m_max) {
    if (g.is_empty()) throw std::domain_error("empty relation");
    Relation inv = inverse(g);
    for (long m = 1; m <= m_max; ++m) {
        if (box_count(g, n, m) != box_count(inv, n, m)) return false;
    }
    return true;
}

}  // namespace relent
