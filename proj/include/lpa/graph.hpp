#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "lpa/errors.hpp"

namespace lpa {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Finite directed multigraph with named vertices and edges. Immutable after
/// construction. Vertices and edges are stored sorted by name, so index order
/// is lexicographic id order throughout; every "deterministic order" in this
/// library is derived from that.
class Graph {
public:
    struct Edge {
        std::string name;
        VertexId src;
        VertexId dst;
    };

    Graph() = default;

    /// Build from raw components: vertex names and (edge, src, dst) name triples.
    static Graph make(std::vector<std::string> vertex_names,
                      std::vector<std::tuple<std::string, std::string, std::string>> edge_triples) {
        Graph g;
        std::sort(vertex_names.begin(), vertex_names.end());
        for (std::size_t i = 0; i + 1 < vertex_names.size(); ++i)
            if (vertex_names[i] == vertex_names[i + 1])
                throw graph_error("duplicate id '" + vertex_names[i] + "'");
        g.vertex_names_ = std::move(vertex_names);

        std::sort(edge_triples.begin(), edge_triples.end(),
                  [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
        for (std::size_t i = 0; i + 1 < edge_triples.size(); ++i)
            if (std::get<0>(edge_triples[i]) == std::get<0>(edge_triples[i + 1]))
                throw graph_error("duplicate id '" + std::get<0>(edge_triples[i]) + "'");

        for (auto& [name, src, dst] : edge_triples) {
            if (g.find_vertex(name))
                throw graph_error("duplicate id '" + name + "' (used for both a vertex and an edge)");
            auto s = g.find_vertex(src);
            if (!s) throw graph_error("dangling endpoint: edge '" + name + "' has undeclared source '" + src + "'");
            auto d = g.find_vertex(dst);
            if (!d) throw graph_error("dangling endpoint: edge '" + name + "' has undeclared target '" + dst + "'");
            g.edges_.push_back(Edge{std::move(name), *s, *d});
        }

        g.out_edges_.assign(g.vertex_names_.size(), {});
        for (EdgeId e = 0; e < g.edges_.size(); ++e)
            g.out_edges_[g.edges_[e].src].push_back(e);

        g.compute_reachability();
        return g;
    }

    /// Parse the graph file format: a JSON document with top-level fields
    /// `vertices` (list of strings) and `edges` (list of {id, src, dst}).
    static Graph parse(std::string_view text) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw parse_error(std::string("graph file: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
            throw parse_error("graph file: expected an object with 'vertices' and 'edges'");
        if (!doc["vertices"].is_array() || !doc["edges"].is_array())
            throw parse_error("graph file: 'vertices' and 'edges' must be lists");

        std::vector<std::string> vs;
        for (const auto& v : doc["vertices"]) {
            if (!v.is_string()) throw parse_error("graph file: vertex ids must be strings");
            vs.push_back(v.get<std::string>());
        }
        std::vector<std::tuple<std::string, std::string, std::string>> es;
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst"))
                throw parse_error("graph file: each edge needs 'id', 'src' and 'dst'");
            es.emplace_back(e["id"].get<std::string>(), e["src"].get<std::string>(), e["dst"].get<std::string>());
        }
        return make(std::move(vs), std::move(es));
    }

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::string& edge_name(EdgeId e) const { return edges_[e].name; }
    VertexId edge_src(EdgeId e) const { return edges_[e].src; }
    VertexId edge_dst(EdgeId e) const { return edges_[e].dst; }

    std::optional<VertexId> find_vertex(std::string_view name) const {
        auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
        if (it == vertex_names_.end() || *it != name) return std::nullopt;
        return static_cast<VertexId>(it - vertex_names_.begin());
    }
    std::optional<EdgeId> find_edge(std::string_view name) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                                   [](const Edge& e, std::string_view n) { return e.name < n; });
        if (it == edges_.end() || it->name != name) return std::nullopt;
        return static_cast<EdgeId>(it - edges_.begin());
    }
    VertexId vertex(std::string_view name) const {
        auto v = find_vertex(name);
        if (!v) throw graph_error("unknown vertex '" + std::string(name) + "'");
        return *v;
    }
    EdgeId edge(std::string_view name) const {
        auto e = find_edge(name);
        if (!e) throw graph_error("unknown edge '" + std::string(name) + "'");
        return *e;
    }

    /// Edges emitted by v, sorted by edge id.
    std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_[v]; }
    bool is_sink(VertexId v) const { return out_edges_[v].empty(); }

    /// The designated special edge of a non-sink vertex: the lexicographically
    /// least edge it emits. The oriented relation-(5) rewrite contracts this
    /// edge, which fixes the normal-form basis of the algebra.
    std::optional<EdgeId> special_edge(VertexId v) const {
        if (is_sink(v)) return std::nullopt;
        return out_edges_[v].front();
    }

    /// Preorder u >= v: u == v or a directed path u -> v exists.
    bool reaches(VertexId u, VertexId v) const { return reach_[u][v]; }

    bool is_acyclic() const { return acyclic_; }

    /// Number of edges on a longest directed path. Only defined on acyclic graphs.
    std::size_t longest_path_length() const {
        if (!acyclic_) throw domain_error("longest path undefined on a graph with cycles");
        return longest_path_;
    }

    std::string to_dot() const {
        std::string out = "digraph E {\n";
        for (const auto& v : vertex_names_) out += "  \"" + v + "\";\n";
        for (const auto& e : edges_)
            out += "  \"" + vertex_names_[e.src] + "\" -> \"" + vertex_names_[e.dst] +
                   "\" [label=\"" + e.name + "\"];\n";
        out += "}\n";
        return out;
    }

private:
    void compute_reachability() {
        std::size_t n = vertex_names_.size();
        reach_.assign(n, std::vector<bool>(n, false));
        for (VertexId s = 0; s < n; ++s) {
            std::deque<VertexId> queue{s};
            reach_[s][s] = true;
            while (!queue.empty()) {
                VertexId u = queue.front();
                queue.pop_front();
                for (EdgeId e : out_edges_[u]) {
                    VertexId w = edges_[e].dst;
                    if (!reach_[s][w]) {
                        reach_[s][w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        // a vertex on a cycle reaches itself through an out-edge
        acyclic_ = true;
        for (EdgeId e = 0; e < edges_.size(); ++e)
            if (reach_[edges_[e].dst][edges_[e].src]) acyclic_ = false;
        longest_path_ = 0;
        if (acyclic_) {
            std::vector<std::size_t> depth(n, 0);
            // vertices in reverse topological order via repeated relaxation
            bool changed = true;
            while (changed) {
                changed = false;
                for (EdgeId e = 0; e < edges_.size(); ++e) {
                    std::size_t d = depth[edges_[e].dst] + 1;
                    if (d > depth[edges_[e].src]) { depth[edges_[e].src] = d; changed = true; }
                }
            }
            for (std::size_t d : depth) longest_path_ = std::max(longest_path_, d);
        }
    }

    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_edges_;
    std::vector<std::vector<bool>> reach_;
    bool acyclic_ = true;
    std::size_t longest_path_ = 0;
};

/// Finite path of real edges. A path of length 0 is exactly a vertex (its
/// base). Source and range are cached so most path algebra needs no graph
/// lookups.
class Path {
public:
    static Path trivial(VertexId v) { return Path(v, v, {}); }

    static Path make(const Graph& g, VertexId base, std::vector<EdgeId> edges) {
        VertexId cur = base;
        for (EdgeId e : edges) {
            if (g.edge_src(e) != cur)
                throw domain_error("edges do not compose into a path at '" + g.edge_name(e) + "'");
            cur = g.edge_dst(e);
        }
        return Path(base, cur, std::move(edges));
    }

    static Path of_edge(const Graph& g, EdgeId e) {
        return Path(g.edge_src(e), g.edge_dst(e), {e});
    }

    VertexId source() const { return src_; }
    VertexId range() const { return dst_; }
    std::size_t length() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool closed() const { return src_ == dst_; }
    const std::vector<EdgeId>& edges() const { return edges_; }

    Path extended(const Graph& g, EdgeId e) const {
        if (g.edge_src(e) != dst_)
            throw domain_error("edge '" + g.edge_name(e) + "' does not extend the path");
        std::vector<EdgeId> es = edges_;
        es.push_back(e);
        return Path(src_, g.edge_dst(e), std::move(es));
    }

    /// Drop the last edge.
    Path shortened(const Graph& g) const {
        std::vector<EdgeId> es(edges_.begin(), edges_.end() - 1);
        VertexId d = es.empty() ? src_ : g.edge_dst(es.back());
        return Path(src_, d, std::move(es));
    }

    /// Concatenation; range must meet the other path's source.
    Path concat(const Graph&, const Path& tail) const {
        if (dst_ != tail.src_) throw domain_error("paths do not compose");
        std::vector<EdgeId> es = edges_;
        es.insert(es.end(), tail.edges_.begin(), tail.edges_.end());
        return Path(src_, tail.dst_, std::move(es));
    }

    friend bool operator==(const Path& a, const Path& b) {
        return a.src_ == b.src_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.src_ != b.src_) return a.src_ < b.src_;
        return std::lexicographical_compare(a.edges_.begin(), a.edges_.end(),
                                            b.edges_.begin(), b.edges_.end());
    }

private:
    Path(VertexId src, VertexId dst, std::vector<EdgeId> edges)
        : src_(src), dst_(dst), edges_(std::move(edges)) {}

    VertexId src_;
    VertexId dst_;
    std::vector<EdgeId> edges_;
};

/// Closed path whose edge sources are pairwise distinct, together with its
/// base vertex (the base is the path's source; a k-vertex cycle appears once
/// per base).
struct Cycle {
    Path path;
    VertexId base() const { return path.source(); }
    friend bool operator==(const Cycle& a, const Cycle& b) { return a.path == b.path; }
};

inline bool is_cycle(const Graph& g, const Path& p) {
    if (p.empty() || !p.closed()) return false;
    std::vector<VertexId> sources;
    for (EdgeId e : p.edges()) sources.push_back(g.edge_src(e));
    std::sort(sources.begin(), sources.end());
    return std::adjacent_find(sources.begin(), sources.end()) == sources.end();
}

/// All cycles, reported once per base vertex; ordered by base vertex id, then
/// lexicographically by edge ids.
inline std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<EdgeId> stack;
    for (VertexId base = 0; base < g.vertex_count(); ++base) {
        std::vector<bool> visited(g.vertex_count(), false);
        visited[base] = true;
        auto dfs = [&](auto&& self, VertexId cur) -> void {
            for (EdgeId e : g.out_edges(cur)) {
                VertexId next = g.edge_dst(e);
                stack.push_back(e);
                if (next == base) {
                    out.push_back(Cycle{Path::make(g, base, stack)});
                } else if (!visited[next]) {
                    visited[next] = true;
                    self(self, next);
                    visited[next] = false;
                }
                stack.pop_back();
            }
        };
        dfs(dfs, base);
    }
    return out;
}

/// Closed simple paths based at v (no intermediate return to v) of length at
/// most max_len. The set can be infinite without the bound. Lexicographic
/// order by edge ids.
inline std::vector<Path> csp_enumerate(const Graph& g, VertexId v, std::size_t max_len) {
    if (v >= g.vertex_count()) throw graph_error("unknown vertex index");
    if (max_len < 1) throw domain_error("csp_enumerate needs max_len >= 1");
    std::vector<Path> out;
    std::vector<EdgeId> stack;
    auto dfs = [&](auto&& self, VertexId cur) -> void {
        if (stack.size() >= max_len) return;
        for (EdgeId e : g.out_edges(cur)) {
            VertexId next = g.edge_dst(e);
            stack.push_back(e);
            if (next == v)
                out.push_back(Path::make(g, v, stack));
            else
                self(self, next);
            stack.pop_back();
        }
    };
    dfs(dfs, v);
    return out;
}

/// Unique factorization of a closed path into closed simple paths: split at
/// every intermediate return to the base.
inline std::vector<Path> cp_factorize(const Graph& g, const Path& mu) {
    if (!mu.closed()) throw domain_error("cp_factorize: path is not closed");
    std::vector<Path> factors;
    VertexId base = mu.source();
    std::vector<EdgeId> cur;
    for (EdgeId e : mu.edges()) {
        cur.push_back(e);
        if (g.edge_dst(e) == base) {
            factors.push_back(Path::make(g, base, cur));
            cur.clear();
        }
    }
    // a closed path ends at its base, so nothing can be left over
    return factors;
}

} // namespace lpa

#endif
