#ifndef LPA_CLOSURES_HPP
#define LPA_CLOSURES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Subset of the vertices of a graph, kept sorted.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> vs) : v_(std::move(vs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    static VertexSet full(const Graph& g) {
        std::vector<VertexId> vs(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) vs[v] = v;
        return VertexSet(std::move(vs));
    }

    static VertexSet of_names(const Graph& g, const std::vector<std::string>& names) {
        std::vector<VertexId> vs;
        vs.reserve(names.size());
        for (const auto& n : names) vs.push_back(g.vertex(n));
        return VertexSet(std::move(vs));
    }

    bool contains(VertexId v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }
    bool subset_of(const VertexSet& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }
    VertexSet intersect(const VertexSet& o) const {
        std::vector<VertexId> r;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(r));
        return VertexSet(std::move(r));
    }
    VertexSet unite(const VertexSet& o) const {
        std::vector<VertexId> r;
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r));
        return VertexSet(std::move(r));
    }
    void insert(VertexId v) {
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        if (it == v_.end() || *it != v) v_.insert(it, v);
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<VertexId>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.v_ < b.v_; }

    std::string str(const Graph& g) const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ", ";
            s += g.vertex_name(v_[i]);
        }
        return s + "}";
    }

private:
    std::vector<VertexId> v_;
};

inline void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.empty() && s.vertices().back() >= g.vertex_count())
        throw graph_error("vertex set refers outside the graph");
}

/// H is hereditary when it is closed under reachability downward; closure
/// under single edges is equivalent.
inline bool is_hereditary(const Graph& g, const VertexSet& h) {
    check_subset(g, h);
    for (VertexId v : h)
        for (EdgeId e : g.out_edges(v))
            if (!h.contains(g.edge_dst(e))) return false;
    return true;
}

/// H is saturated when it contains every non-sink whose out-edge ranges all
/// land in H.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
    check_subset(g, h);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v) || h.contains(v)) continue;
        bool all_in = true;
        for (EdgeId e : g.out_edges(v))
            if (!h.contains(g.edge_dst(e))) { all_in = false; break; }
        if (all_in) return false;
    }
    return true;
}

/// The Lambda iteration to the hereditary saturated closure: the trace records
/// every level including the repeated fixed point, so the last two entries are
/// always equal.
struct ClosureTrace {
    VertexSet input;
    std::vector<VertexSet> levels;

    const VertexSet& closure() const { return levels.back(); }

    std::string str(const Graph& g) const {
        std::string s;
        for (std::size_t i = 0; i < levels.size(); ++i)
            s += "Λ_" + std::to_string(i) + " = " + levels[i].str(g) + "\n";
        s += "closure = " + closure().str(g) + "\n";
        return s;
    }
};

inline ClosureTrace closure(const Graph& g, const VertexSet& x) {
    check_subset(g, x);
    ClosureTrace trace;
    trace.input = x;

    // Lambda_0: everything reachable from X
    VertexSet cur;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId s : x)
            if (g.reaches(s, v)) { cur.insert(v); break; }
    trace.levels.push_back(cur);

    // Lambda_n: add non-sinks whose out-edge ranges lie in the previous level
    while (true) {
        VertexSet next = cur;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.is_sink(v) || next.contains(v)) continue;
            bool all_in = true;
            for (EdgeId e : g.out_edges(v))
                if (!cur.contains(g.edge_dst(e))) { all_in = false; break; }
            if (all_in) next.insert(v);
        }
        trace.levels.push_back(next);
        if (next == cur) break;
        cur = std::move(next);
    }
    return trace;
}

/// The lattice of hereditary saturated subsets, enumerated over all 2^|E0|
/// subsets. Members are sorted by (size, vertex list); the longest strictly
/// ascending chain is reported with witnesses.
struct HSLattice {
    std::vector<VertexSet> members;
    std::vector<VertexSet> longest_chain;

    std::size_t longest_chain_length() const { return longest_chain.size(); }
    bool contains(const VertexSet& h) const {
        return std::find(members.begin(), members.end(), h) != members.end();
    }

    /// Hasse diagram of the inclusion order.
    std::string to_dot(const Graph& g) const {
        std::string s = "digraph HS {\n  rankdir=BT;\n";
        for (const auto& m : members) s += "  \"" + m.str(g) + "\";\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j || members[i].size() >= members[j].size()) continue;
                if (!members[i].subset_of(members[j])) continue;
                bool covering = true;
                for (std::size_t k = 0; k < members.size() && covering; ++k) {
                    if (k == i || k == j) continue;
                    if (members[i].subset_of(members[k]) && members[k].subset_of(members[j]) &&
                        members[k].size() > members[i].size() &&
                        members[k].size() < members[j].size())
                        covering = false;
                }
                if (covering)
                    s += "  \"" + members[i].str(g) + "\" -> \"" + members[j].str(g) + "\";\n";
            }
        }
        return s + "}\n";
    }
};

inline HSLattice hs_lattice(const Graph& g, std::size_t vertex_cap = 20) {
    std::size_t n = g.vertex_count();
    if (n > vertex_cap)
        throw domain_error("hs_lattice: graph has " + std::to_string(n) +
                           " vertices, above the cap of " + std::to_string(vertex_cap));

    // mask-level copies of the predicates
    std::vector<std::uint64_t> out_mask(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out_mask[g.edge_src(e)] |= std::uint64_t(1) << g.edge_dst(e);

    HSLattice lat;
    std::vector<std::uint64_t> member_masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            bool inside = (mask >> v) & 1;
            bool sink = g.is_sink(v);
            if (inside && (out_mask[v] & ~mask) != 0) ok = false;              // hereditary
            if (!inside && !sink && (out_mask[v] & ~mask) == 0) ok = false;    // saturated
        }
        if (ok) member_masks.push_back(mask);
    }

    for (std::uint64_t mask : member_masks) {
        std::vector<VertexId> vs;
        for (VertexId v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        lat.members.emplace_back(std::move(vs));
    }
    std::sort(lat.members.begin(), lat.members.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // longest chain by DP over members ordered by size
    std::size_t m = lat.members.size();
    std::vector<std::size_t> best(m, 1), prev(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (lat.members[i].size() >= lat.members[j].size()) continue;
            if (!lat.members[i].subset_of(lat.members[j])) continue;
            if (best[i] + 1 > best[j]) { best[j] = best[i] + 1; prev[j] = i; }
        }
    }
    std::size_t at = 0;
    for (std::size_t j = 0; j < m; ++j)
        if (best[j] > best[at]) at = j;
    std::vector<VertexSet> chain;
    for (std::size_t j = at; j != m; j = prev[j]) {
        chain.push_back(lat.members[j]);
        if (prev[j] == m) break;
    }
    std::reverse(chain.begin(), chain.end());
    lat.longest_chain = std::move(chain);
    return lat;
}

/// Noetherian analysis. For a finite graph the lattice of hereditary saturated
/// subsets is finite, so every ascending chain stabilizes; the report carries
/// that lattice as evidence together with a longest chain.
struct NoetherianReport {
    bool noetherian;
    HSLattice lattice;

    std::string str(const Graph& g) const {
        std::string s = "Noetherian: ";
        s += noetherian ? "yes" : "no";
        s += "; lattice size " + std::to_string(lattice.members.size());
        s += "; longest chain " + std::to_string(lattice.longest_chain_length());
        s += "\nchain:";
        for (std::size_t i = 0; i < lattice.longest_chain.size(); ++i) {
            s += i ? " ⊂ " : " ";
            s += lattice.longest_chain[i].str(g);
        }
        s += "\n";
        return s;
    }
};

inline NoetherianReport noetherian_report(const Graph& g, std::size_t vertex_cap = 20) {
    return NoetherianReport{true, hs_lattice(g, vertex_cap)};
}

/// Replay of the closure induction: for v in the closure of S with a
/// nontrivial cycle based at v, walk the cycle backwards through the Lambda
/// levels until a member of S that reaches v is found.
inline VertexId reach_witness(const Graph& g, const VertexSet& s, VertexId v) {
    check_subset(g, s);
    if (v >= g.vertex_count()) throw graph_error("unknown vertex index");

    ClosureTrace trace = closure(g, s);
    if (!trace.closure().contains(v))
        throw domain_error("vertex '" + g.vertex_name(v) + "' is not in the closure");

    auto cycle_at = [&](VertexId base) -> Path {
        for (const Cycle& c : enumerate_cycles(g))
            if (c.base() == base) return c.path;
        throw domain_error("no nontrivial cycle based at '" + g.vertex_name(base) + "'");
    };
    Path cyc = cycle_at(v);

    auto level_of = [&](VertexId u) {
        for (std::size_t k = 0; k < trace.levels.size(); ++k)
            if (trace.levels[k].contains(u)) return k;
        throw domain_error("vertex left the closure trace");
    };

    VertexId cur = v;
    while (true) {
        if (s.contains(cur)) return cur;
        if (level_of(cur) == 0) {
            for (VertexId u : s)
                if (g.reaches(u, cur)) return u;
            throw domain_error("closure trace is inconsistent");
        }
        // cur was added by a saturation step; the next vertex on the cycle is
        // one level down and carries a rotated cycle. A self-loop at cur would
        // contradict cur being added by saturation.
        VertexId next = g.edge_dst(cyc.edges().front());
        if (next == cur) throw std::logic_error("reach_witness: closure levels inconsistent");
        std::vector<EdgeId> rotated(cyc.edges().begin() + 1, cyc.edges().end());
        rotated.push_back(cyc.edges().front());
        cyc = Path::make(g, next, rotated);
        cur = next;
    }
}

} // namespace lpa

#endif
