#ifndef LPA_TESTS_SUPPORT_HPP
#define LPA_TESTS_SUPPORT_HPP

// Shared helpers for the test and acceptance suites: deterministic random
// generators for raw elements, and brute-force oracles kept independent of
// the implementation paths they check.

#include <random>
#include <vector>

#include "lpa/lpa.hpp"

namespace lpa::testing {

inline std::vector<Graph> fixture_graphs() {
    return {fixtures::g1(), fixtures::g3(), fixtures::g4(), fixtures::g6(),
            fixtures::g7(), fixtures::g8(), fixtures::line_window(3),
            fixtures::clock_window(3)};
}

// ---------------------------------------------------------------------------
// Random raw elements. Words are built by a composability-biased walk so that
// a useful share of them survives rewriting.
// ---------------------------------------------------------------------------

inline RawWord random_word(const Graph& g, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::size_t len = len_dist(rng);
    RawWord w;

    auto any_symbol = [&]() {
        std::uniform_int_distribution<std::size_t> kind(0, 2);
        switch (kind(rng)) {
        case 0: {
            std::uniform_int_distribution<std::size_t> d(0, g.vertex_count() - 1);
            return raw_vertex(static_cast<VertexId>(d(rng)));
        }
        case 1: {
            std::uniform_int_distribution<std::size_t> d(0, g.edge_count() - 1);
            return raw_edge(static_cast<EdgeId>(d(rng)));
        }
        default: {
            std::uniform_int_distribution<std::size_t> d(0, g.edge_count() - 1);
            return raw_ghost(static_cast<EdgeId>(d(rng)));
        }
        }
    };
    auto range_of = [&](const RawSymbol& s) {
        if (s.kind == SymbolKind::vertex) return s.index;
        if (s.kind == SymbolKind::edge) return g.edge_dst(s.index);
        return g.edge_src(s.index);
    };

    if (g.edge_count() == 0) {
        std::uniform_int_distribution<std::size_t> d(0, g.vertex_count() - 1);
        w.push_back(raw_vertex(static_cast<VertexId>(d(rng))));
        return w;
    }
    w.push_back(any_symbol());
    std::uniform_int_distribution<int> coin(0, 7);
    while (w.size() < len) {
        if (coin(rng) == 0) {
            w.push_back(any_symbol());
            continue;
        }
        VertexId cur = range_of(w.back());
        std::vector<RawSymbol> followers;
        followers.push_back(raw_vertex(cur));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge_src(e) == cur) followers.push_back(raw_edge(e));
            if (g.edge_dst(e) == cur) followers.push_back(raw_ghost(e));
        }
        std::uniform_int_distribution<std::size_t> d(0, followers.size() - 1);
        w.push_back(followers[d(rng)]);
    }
    return w;
}

template <class F, class K = typename F::Scalar>
RawElement<K> random_raw_element(const F& f, const Graph& g, std::mt19937_64& rng,
                                 std::size_t max_terms = 3, std::size_t max_len = 5) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    RawElement<K> raw;
    std::size_t n = nterms(rng);
    for (std::size_t i = 0; i < n; ++i) {
        long long c = coeff(rng);
        if (c == 0) c = 1;
        raw.push_back({f.from_long(c), random_word(g, rng, max_len)});
    }
    return raw;
}

template <class F, class K = typename F::Scalar>
Element<K> random_element(const F& f, const Graph& g, std::mt19937_64& rng,
                          std::size_t max_terms = 3, std::size_t max_len = 5) {
    return normal_form(g, random_raw_element(f, g, rng, max_terms, max_len));
}

/// The raw word spelling of a normal monomial (inverse of the normalizer's
/// word conversion); used to cross-check mul against word rewriting.
inline RawWord monomial_word(const Monomial& m) {
    RawWord w;
    for (EdgeId e : m.mu.edges()) w.push_back(raw_edge(e));
    for (std::size_t i = m.nu.length(); i > 0; --i) w.push_back(raw_ghost(m.nu.edges()[i - 1]));
    if (w.empty()) w.push_back(raw_vertex(m.source()));
    return w;
}

// ---------------------------------------------------------------------------
// Brute-force oracles.
// ---------------------------------------------------------------------------

/// Reachability by boolean matrix closure.
inline std::vector<std::vector<bool>> reach_oracle(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) r[v][v] = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) r[g.edge_src(e)][g.edge_dst(e)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

/// All composable edge sequences from v of length <= max_len (every path, not
/// just simple ones).
inline std::vector<std::vector<EdgeId>> path_sequences_from(const Graph& g, VertexId v,
                                                            std::size_t max_len) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> cur;
    auto dfs = [&](auto&& self, VertexId at) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() >= max_len) return;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge_src(e) != at) continue;
            cur.push_back(e);
            self(self, g.edge_dst(e));
            cur.pop_back();
        }
    };
    dfs(dfs, v);
    return out;
}

/// Exhaustive cycle search: every closed sequence with pairwise distinct
/// sources, reported per base vertex.
inline std::vector<Path> cycles_oracle(const Graph& g) {
    std::vector<Path> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (const auto& seq : path_sequences_from(g, v, g.vertex_count())) {
            if (g.edge_dst(seq.back()) != v) continue;
            std::vector<VertexId> sources;
            for (EdgeId e : seq) sources.push_back(g.edge_src(e));
            std::sort(sources.begin(), sources.end());
            if (std::adjacent_find(sources.begin(), sources.end()) != sources.end()) continue;
            out.push_back(Path::make(g, v, seq));
        }
    }
    return out;
}

/// Exhaustive bounded CSP search from the definition.
inline std::vector<Path> csp_oracle(const Graph& g, VertexId v, std::size_t max_len) {
    std::vector<Path> out;
    for (const auto& seq : path_sequences_from(g, v, max_len)) {
        if (g.edge_dst(seq.back()) != v) continue;
        bool simple = true;
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (g.edge_src(seq[i]) == v) { simple = false; break; }
        if (simple) out.push_back(Path::make(g, v, seq));
    }
    return out;
}

/// All closed paths based at v up to a length bound.
inline std::vector<Path> closed_paths_up_to(const Graph& g, VertexId v, std::size_t max_len) {
    std::vector<Path> out;
    for (const auto& seq : path_sequences_from(g, v, max_len))
        if (g.edge_dst(seq.back()) == v) out.push_back(Path::make(g, v, seq));
    return out;
}

/// Number of ways to write mu as a concatenation of closed simple paths based
/// at its source (Lemma 2 says: exactly one).
inline std::size_t factorization_count(const Graph& g, const Path& mu) {
    VertexId v = mu.source();
    const auto& es = mu.edges();
    auto segment_is_csp = [&](std::size_t from, std::size_t to) {
        if (g.edge_dst(es[to - 1]) != v) return false;
        for (std::size_t k = from + 1; k < to; ++k)
            if (g.edge_src(es[k]) == v) return false;
        return true;
    };
    std::vector<std::size_t> ways(es.size() + 1, 0);
    ways[es.size()] = 1;
    for (std::size_t i = es.size(); i > 0; --i) {
        std::size_t from = i - 1;
        for (std::size_t to = from + 1; to <= es.size(); ++to)
            if (segment_is_csp(from, to)) ways[from] += ways[to];
    }
    return ways[0];
}

/// Smallest hereditary saturated superset by intersecting all of them,
/// straight from the definitions (subset enumeration; needs a small graph).
inline VertexSet closure_oracle(const Graph& g, const VertexSet& x) {
    std::size_t n = g.vertex_count();
    auto reach = reach_oracle(g);
    std::uint64_t best = (std::uint64_t(1) << n) - 1;
    std::uint64_t xmask = 0;
    for (VertexId v : x) xmask |= std::uint64_t(1) << v;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        if ((mask & xmask) != xmask) continue;
        bool hereditary = true, saturated = true;
        for (VertexId v = 0; v < n; ++v) {
            bool inside = (mask >> v) & 1;
            if (inside)
                for (VertexId w = 0; w < n; ++w)
                    if (reach[v][w] && !((mask >> w) & 1)) hereditary = false;
            if (!inside && !g.is_sink(v)) {
                bool all_in = true;
                for (EdgeId e : g.out_edges(v))
                    if (!((mask >> g.edge_dst(e)) & 1)) all_in = false;
                if (all_in) saturated = false;
            }
        }
        if (hereditary && saturated) best &= mask;
    }
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < n; ++v)
        if ((best >> v) & 1) vs.push_back(v);
    return VertexSet(std::move(vs));
}

} // namespace lpa::testing

#endif
