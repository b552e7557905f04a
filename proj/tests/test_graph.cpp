#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace lpa;

namespace {
const char* g1_text = R"({
  "vertices": ["v", "w"],
  "edges": [
    {"id": "e1", "src": "v", "dst": "v"},
    {"id": "e2", "src": "v", "dst": "w"},
    {"id": "e3", "src": "w", "dst": "w"}
  ]
})";
}

TEST_CASE("graph file parsing") {
    SECTION("the two-loop fixture") {
        Graph g = Graph::parse(g1_text);
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 3);
        CHECK(g.edge_src(g.edge("e2")) == g.vertex("v"));
        CHECK(g.edge_dst(g.edge("e2")) == g.vertex("w"));
    }

    SECTION("empty graph") {
        Graph g = Graph::parse(R"({"vertices": [], "edges": []})");
        CHECK(g.vertex_count() == 0);
        CHECK(g.edge_count() == 0);
    }

    SECTION("dangling endpoint") {
        CHECK_THROWS_WITH(
            Graph::parse(R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "q"}]})"),
            Catch::Matchers::ContainsSubstring("dangling endpoint"));
    }

    SECTION("duplicate ids") {
        CHECK_THROWS_WITH(Graph::parse(R"({"vertices": ["v", "v"], "edges": []})"),
                          Catch::Matchers::ContainsSubstring("duplicate id"));
        CHECK_THROWS_WITH(
            Graph::parse(
                R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v"}, {"id": "e", "src": "v", "dst": "v"}]})"),
            Catch::Matchers::ContainsSubstring("duplicate id"));
        // an edge may not reuse a vertex id either: expressions must be unambiguous
        CHECK_THROWS_WITH(
            Graph::parse(R"({"vertices": ["v"], "edges": [{"id": "v", "src": "v", "dst": "v"}]})"),
            Catch::Matchers::ContainsSubstring("duplicate id"));
    }

    SECTION("malformed syntax reports a location") {
        CHECK_THROWS_WITH(Graph::parse("{\"vertices\": [,]}"),
                          Catch::Matchers::ContainsSubstring("graph file"));
    }
}

TEST_CASE("reachability") {
    Graph g1 = fixtures::g1();
    CHECK(g1.reaches(g1.vertex("v"), g1.vertex("w")));
    CHECK_FALSE(g1.reaches(g1.vertex("w"), g1.vertex("v")));

    SECTION("matches the matrix-closure oracle on every fixture") {
        for (const Graph& g : testing::fixture_graphs()) {
            auto oracle = testing::reach_oracle(g);
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    CHECK(g.reaches(u, v) == oracle[u][v]);
        }
    }

    SECTION("reflexive and transitive") {
        for (const Graph& g : testing::fixture_graphs()) {
            std::size_t n = g.vertex_count();
            for (VertexId u = 0; u < n; ++u) CHECK(g.reaches(u, u));
            for (VertexId a = 0; a < n; ++a)
                for (VertexId b = 0; b < n; ++b)
                    for (VertexId c = 0; c < n; ++c)
                        if (g.reaches(a, b) && g.reaches(b, c)) CHECK(g.reaches(a, c));
        }
    }
}

TEST_CASE("cycle enumeration") {
    SECTION("two loops") {
        Graph g = fixtures::g1();
        auto cycles = enumerate_cycles(g);
        REQUIRE(cycles.size() == 2);
        CHECK(to_string(g, cycles[0].path) == "e1");
        CHECK(cycles[0].base() == g.vertex("v"));
        CHECK(to_string(g, cycles[1].path) == "e3");
        CHECK(cycles[1].base() == g.vertex("w"));
    }

    SECTION("acyclic graph") {
        CHECK(enumerate_cycles(fixtures::g6()).empty());
    }

    SECTION("a 2-cycle is reported once per base") {
        Graph g = fixtures::g8();
        auto cycles = enumerate_cycles(g);
        REQUIRE(cycles.size() == 2);
        CHECK(to_string(g, cycles[0].path) == "a b");
        CHECK(to_string(g, cycles[1].path) == "b a");
    }

    SECTION("agrees with the exhaustive oracle; all invariants hold") {
        for (const Graph& g : testing::fixture_graphs()) {
            auto cycles = enumerate_cycles(g);
            auto expected = testing::cycles_oracle(g);
            std::vector<Path> got;
            for (const Cycle& c : cycles) got.push_back(c.path);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
            for (const Cycle& c : cycles) CHECK(is_cycle(g, c.path));
            // bases of reported cycles are exactly the vertices on some cycle
            VertexSet bases;
            for (const Cycle& c : cycles) bases.insert(c.base());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                bool on_cycle = false;
                for (EdgeId e : g.out_edges(v))
                    if (g.reaches(g.edge_dst(e), v)) on_cycle = true;
                CHECK(bases.contains(v) == on_cycle);
            }
        }
    }
}

TEST_CASE("closed simple path enumeration") {
    SECTION("loop fixture") {
        Graph g = fixtures::g1();
        auto ps = csp_enumerate(g, g.vertex("v"), 3);
        REQUIRE(ps.size() == 1);
        CHECK(to_string(g, ps[0]) == "e1");
    }

    SECTION("detour fixture has CSPs of unbounded length") {
        Graph g = fixtures::g7();
        auto ps = csp_enumerate(g, g.vertex("v"), 3);
        REQUIRE(ps.size() == 2);
        CHECK(to_string(g, ps[0]) == "a b");
        CHECK(to_string(g, ps[1]) == "a l b");
        CHECK(csp_enumerate(g, g.vertex("v"), 10).size() == 9);
    }

    SECTION("acyclic graph") {
        Graph g = fixtures::g6();
        CHECK(csp_enumerate(g, g.vertex("u"), 6).empty());
    }

    SECTION("agrees with the definitional oracle") {
        for (const Graph& g : testing::fixture_graphs()) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                auto got = csp_enumerate(g, v, 4);
                auto expected = testing::csp_oracle(g, v, 4);
                std::sort(got.begin(), got.end());
                std::sort(expected.begin(), expected.end());
                CHECK(got == expected);
            }
        }
    }

    CHECK_THROWS_AS(csp_enumerate(fixtures::g1(), 0, 0), domain_error);
}

TEST_CASE("closed path factorization") {
    SECTION("power of a loop") {
        Graph g = fixtures::g1();
        EdgeId e1 = g.edge("e1");
        Path mu = Path::make(g, g.vertex("v"), {e1, e1, e1});
        auto factors = cp_factorize(g, mu);
        REQUIRE(factors.size() == 3);
        for (const Path& f : factors) CHECK(to_string(g, f) == "e1");
    }

    SECTION("rose") {
        Graph g = fixtures::g3();
        Path mu = Path::make(g, g.vertex("v"), {g.edge("f"), g.edge("g"), g.edge("f")});
        auto factors = cp_factorize(g, mu);
        REQUIRE(factors.size() == 3);
        CHECK(to_string(g, factors[0]) == "f");
        CHECK(to_string(g, factors[1]) == "g");
        CHECK(to_string(g, factors[2]) == "f");
    }

    SECTION("two-vertex cycle") {
        Graph g = fixtures::g8();
        Path mu = Path::make(g, g.vertex("u"), {g.edge("a"), g.edge("b"), g.edge("a"), g.edge("b")});
        auto factors = cp_factorize(g, mu);
        REQUIRE(factors.size() == 2);
        CHECK(to_string(g, factors[0]) == "a b");
        CHECK(to_string(g, factors[1]) == "a b");
    }

    SECTION("round trip, factor membership and uniqueness on all closed paths up to 6") {
        for (const Graph& g : testing::fixture_graphs()) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                for (const Path& mu : testing::closed_paths_up_to(g, v, 6)) {
                    auto factors = cp_factorize(g, mu);
                    REQUIRE(!factors.empty());
                    Path glued = factors[0];
                    for (std::size_t i = 1; i < factors.size(); ++i)
                        glued = glued.concat(g, factors[i]);
                    CHECK(glued == mu);
                    auto csps = csp_enumerate(g, v, std::max<std::size_t>(mu.length(), 1));
                    for (const Path& f : factors)
                        CHECK(std::find(csps.begin(), csps.end(), f) != csps.end());
                    CHECK(testing::factorization_count(g, mu) == 1);
                }
            }
        }
    }

    SECTION("rotations of a cycle factor at their own base") {
        Graph g = fixtures::g8();
        Path rot = Path::make(g, g.vertex("v"), {g.edge("b"), g.edge("a")});
        auto factors = cp_factorize(g, rot);
        REQUIRE(factors.size() == 1);
        CHECK(to_string(g, factors[0]) == "b a");
    }

    SECTION("non-closed input is rejected") {
        Graph g = fixtures::g6();
        Path open = Path::of_edge(g, g.edge("e"));
        CHECK_THROWS_AS(cp_factorize(g, open), domain_error);
    }
}

TEST_CASE("dot export") {
    Graph g = fixtures::g6();
    std::string dot = g.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"u\" -> \"v\" [label=\"e\"]") != std::string::npos);
}

TEST_CASE("shipped fixture files match the generators") {
    auto load = [](const std::string& name) {
        std::ifstream in(std::string(LPA_FIXTURE_DIR) + "/" + name);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        return Graph::parse(buf.str());
    };
    for (const auto& [name, g] : fixtures::named())
        CHECK(load(name + ".json").to_dot() == g.to_dot());
    CHECK(load("line_window_3.json").to_dot() == fixtures::line_window(3).to_dot());
    CHECK(load("clock_window_5.json").to_dot() == fixtures::clock_window(5).to_dot());
}
