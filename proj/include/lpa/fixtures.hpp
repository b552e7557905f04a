#ifndef LPA_FIXTURES_HPP
#define LPA_FIXTURES_HPP

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::fixtures {

/// Two vertices, a loop at each, one connecting edge: e1: v->v, e2: v->w, e3: w->w.
inline Graph g1() {
    return Graph::make({"v", "w"}, {{"e1", "v", "v"}, {"e2", "v", "w"}, {"e3", "w", "w"}});
}

/// Rose with two petals: loops f and g at a single vertex v.
inline Graph g3() {
    return Graph::make({"v"}, {{"f", "v", "v"}, {"g", "v", "v"}});
}

/// One vertex with one loop.
inline Graph g4() {
    return Graph::make({"v"}, {{"g", "v", "v"}});
}

/// A single edge u -> v.
inline Graph g6() {
    return Graph::make({"u", "v"}, {{"e", "u", "v"}});
}

/// Detour: a: v->w, l: w->w, b: w->v. CSP(v) is infinite.
inline Graph g7() {
    return Graph::make({"v", "w"}, {{"a", "v", "w"}, {"l", "w", "w"}, {"b", "w", "v"}});
}

/// Two-vertex cycle: a: u->v, b: v->u.
inline Graph g8() {
    return Graph::make({"u", "v"}, {{"a", "u", "v"}, {"b", "v", "u"}});
}

inline std::string window_name(const std::string& prefix, int i) {
    if (i < 0) return prefix + "m" + std::to_string(-i);
    if (i > 0) return prefix + "p" + std::to_string(i);
    return prefix + "0";
}

/// Window of the doubly infinite line: vertices v_-n .. v_n, one edge into
/// each vertex from its predecessor.
inline Graph line_window(int n) {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int i = -n; i <= n; ++i) vs.push_back(window_name("v", i));
    for (int i = -n + 1; i <= n; ++i)
        es.emplace_back(window_name("e", i), window_name("v", i - 1), window_name("v", i));
    return Graph::make(std::move(vs), std::move(es));
}

/// Window of the looped clock: a central sink v; spokes w_i -> v plus a loop
/// at each w_i. Closures of {w_1..w_i} form a strictly ascending chain.
inline Graph clock_window(int n) {
    std::vector<std::string> vs{"v"};
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) {
        std::string w = "w" + std::to_string(i);
        vs.push_back(w);
        es.emplace_back("e" + std::to_string(i), w, "v");
        es.emplace_back("f" + std::to_string(i), w, w);
    }
    return Graph::make(std::move(vs), std::move(es));
}

/// All file-backed fixtures, paired with their conventional names.
inline std::vector<std::pair<std::string, Graph>> named() {
    return {{"g1", g1()}, {"g3", g3()}, {"g4", g4()}, {"g6", g6()}, {"g7", g7()}, {"g8", g8()}};
}

/// Random graph with at most max_vertices vertices and max_edges edges.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices = 8,
                          std::size_t max_edges = 16) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
    std::size_t n = nv(rng);
    std::uniform_int_distribution<std::size_t> ne(0, max_edges);
    std::size_t m = ne(rng);
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < m; ++i)
        es.emplace_back("e" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]);
    return Graph::make(std::move(vs), std::move(es));
}

} // namespace lpa::fixtures

#endif
