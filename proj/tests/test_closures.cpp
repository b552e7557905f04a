#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace lpa;

namespace {
VertexSet vs(const Graph& g, std::initializer_list<const char*> names) {
    std::vector<VertexId> v;
    for (const char* n : names) v.push_back(g.vertex(n));
    return VertexSet(std::move(v));
}
} // namespace

TEST_CASE("hereditary and saturated predicates") {
    Graph g1 = fixtures::g1();
    CHECK_FALSE(is_hereditary(g1, vs(g1, {"v"})));
    CHECK(is_hereditary(g1, vs(g1, {"w"})));
    CHECK(is_hereditary(g1, VertexSet::full(g1)));
    CHECK(is_saturated(g1, vs(g1, {"w"})));

    Graph g6 = fixtures::g6();
    CHECK_FALSE(is_saturated(g6, vs(g6, {"v"})));
    for (const Graph& g : testing::fixture_graphs()) {
        CHECK(is_saturated(g, VertexSet()));
        CHECK(is_hereditary(g, VertexSet()));
        CHECK(is_hereditary(g, VertexSet::full(g)));
        CHECK(is_saturated(g, VertexSet::full(g)));
    }
}

TEST_CASE("closure traces") {
    Graph g1 = fixtures::g1();

    SECTION("the two worked closures on the two-loop graph") {
        CHECK(closure(g1, vs(g1, {"v"})).closure() == vs(g1, {"v", "w"}));
        CHECK(closure(g1, vs(g1, {"w"})).closure() == vs(g1, {"w"}));
        CHECK(closure(g1, VertexSet()).closure() == VertexSet());
    }

    SECTION("line window saturates backwards one level at a time") {
        Graph g = fixtures::line_window(3);
        ClosureTrace trace = closure(g, vs(g, {"v0"}));
        REQUIRE(trace.levels.size() == 5); // levels 0..3 plus the repeated fixed point
        CHECK(trace.levels[0] == vs(g, {"v0", "vp1", "vp2", "vp3"}));
        CHECK(trace.levels[1] == vs(g, {"vm1", "v0", "vp1", "vp2", "vp3"}));
        CHECK(trace.levels[2] == vs(g, {"vm2", "vm1", "v0", "vp1", "vp2", "vp3"}));
        CHECK(trace.levels[3] == VertexSet::full(g));
        CHECK(trace.closure() == VertexSet::full(g));
    }

    SECTION("trace is ascending, stabilizes, and ends hereditary saturated") {
        std::mt19937_64 rng(3);
        for (const Graph& g : testing::fixture_graphs()) {
            for (int round = 0; round < 20; ++round) {
                std::vector<VertexId> picks;
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (rng() % 3 == 0) picks.push_back(v);
                VertexSet x(picks);
                ClosureTrace t = closure(g, x);
                REQUIRE(t.levels.size() >= 2);
                CHECK(t.levels.size() <= g.vertex_count() + 2);
                for (std::size_t i = 1; i < t.levels.size(); ++i)
                    CHECK(t.levels[i - 1].subset_of(t.levels[i]));
                CHECK(t.levels[t.levels.size() - 2] == t.levels.back());
                CHECK(x.subset_of(t.closure()));
                CHECK(is_hereditary(g, t.closure()));
                CHECK(is_saturated(g, t.closure()));
                CHECK(t.closure() == testing::closure_oracle(g, x));
            }
        }
    }

    SECTION("monotone and idempotent") {
        std::mt19937_64 rng(9);
        for (const Graph& g : testing::fixture_graphs()) {
            for (int round = 0; round < 10; ++round) {
                std::vector<VertexId> xs, ys;
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    if (rng() % 3 == 0) xs.push_back(v);
                    if (rng() % 2 == 0) ys.push_back(v);
                }
                VertexSet x(xs);
                VertexSet y = x.unite(VertexSet(ys));
                CHECK(closure(g, x).closure().subset_of(closure(g, y).closure()));
                CHECK(closure(g, closure(g, x).closure()).closure() == closure(g, x).closure());
            }
        }
    }
}

TEST_CASE("hereditary saturated lattice") {
    SECTION("two-loop graph") {
        Graph g = fixtures::g1();
        HSLattice lat = hs_lattice(g);
        REQUIRE(lat.members.size() == 3);
        CHECK(lat.members[0] == VertexSet());
        CHECK(lat.members[1] == vs(g, {"w"}));
        CHECK(lat.members[2] == vs(g, {"v", "w"}));
        CHECK(lat.longest_chain_length() == 3);
    }

    SECTION("one-loop graph has only the trivial members") {
        Graph g = fixtures::g4();
        HSLattice lat = hs_lattice(g);
        REQUIRE(lat.members.size() == 2);
        CHECK(lat.members[0] == VertexSet());
        CHECK(lat.members[1] == vs(g, {"v"}));
    }

    SECTION("single edge: the target alone is not saturated, the source alone not hereditary") {
        Graph g = fixtures::g6();
        HSLattice lat = hs_lattice(g);
        REQUIRE(lat.members.size() == 2);
        CHECK(lat.members[0] == VertexSet());
        CHECK(lat.members[1] == vs(g, {"u", "v"}));
    }

    SECTION("members are exactly the closed sets; intersection-closed") {
        for (const Graph& g : testing::fixture_graphs()) {
            HSLattice lat = hs_lattice(g);
            CHECK(lat.contains(VertexSet()));
            CHECK(lat.contains(VertexSet::full(g)));
            for (const auto& m : lat.members) {
                CHECK(is_hereditary(g, m));
                CHECK(is_saturated(g, m));
            }
            for (const auto& a : lat.members)
                for (const auto& b : lat.members) CHECK(lat.contains(a.intersect(b)));
            // every closure is the least member above its input
            std::mt19937_64 rng(g.vertex_count() * 97 + 1);
            for (int round = 0; round < 10; ++round) {
                std::vector<VertexId> xs;
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (rng() % 3 == 0) xs.push_back(v);
                VertexSet x(xs);
                VertexSet cl = closure(g, x).closure();
                CHECK(lat.contains(cl));
                for (const auto& m : lat.members)
                    if (x.subset_of(m)) CHECK(cl.subset_of(m));
            }
        }
    }

    SECTION("vertex cap") {
        CHECK_THROWS_AS(hs_lattice(fixtures::clock_window(20)), domain_error);
        // raising the cap admits a 21-vertex graph (one whose lattice stays small)
        HSLattice lat = hs_lattice(fixtures::line_window(10), 25);
        CHECK(lat.members.size() == 2);
    }
}

TEST_CASE("noetherian report") {
    Graph g = fixtures::g1();
    NoetherianReport rep = noetherian_report(g);
    CHECK(rep.noetherian);
    CHECK(rep.str(g) ==
          "Noetherian: yes; lattice size 3; longest chain 3\nchain: {} ⊂ {w} ⊂ {v, w}\n");

    SECTION("clock windows grow a linear chain of closures") {
        for (int n : {3, 5, 10}) {
            Graph clock = fixtures::clock_window(n);
            VertexSet prev;
            std::vector<VertexId> acc;
            for (int i = 1; i <= n; ++i) {
                acc.push_back(clock.vertex("w" + std::to_string(i)));
                VertexSet cl = closure(clock, VertexSet(acc)).closure();
                CHECK(cl.size() == static_cast<std::size_t>(i) + 1);
                CHECK(prev.subset_of(cl));
                CHECK_FALSE(cl.subset_of(prev));
                prev = cl;
            }
        }
    }

    SECTION("every finite fixture is noetherian") {
        for (const Graph& g2 : testing::fixture_graphs())
            CHECK(noetherian_report(g2).noetherian);
    }
}

TEST_CASE("reach witness") {
    Graph g1 = fixtures::g1();
    CHECK(reach_witness(g1, vs(g1, {"v"}), g1.vertex("w")) == g1.vertex("v"));

    Graph g8 = fixtures::g8();
    CHECK(reach_witness(g8, vs(g8, {"u"}), g8.vertex("v")) == g8.vertex("u"));

    SECTION("a member with a cycle witnesses itself") {
        CHECK(reach_witness(g1, vs(g1, {"v", "w"}), g1.vertex("w")) == g1.vertex("w"));
    }

    SECTION("witness property on clock windows") {
        Graph clock = fixtures::clock_window(4);
        VertexSet s = vs(clock, {"w2"});
        VertexId w2 = clock.vertex("w2");
        VertexId u = reach_witness(clock, s, w2);
        CHECK(s.contains(u));
        CHECK(clock.reaches(u, w2));
    }

    SECTION("preconditions") {
        Graph g6 = fixtures::g6();
        // no cycle based at the target
        CHECK_THROWS_AS(reach_witness(g6, vs(g6, {"u"}), g6.vertex("v")), domain_error);
        // target outside the closure
        CHECK_THROWS_AS(reach_witness(g1, vs(g1, {"w"}), g1.vertex("v")), domain_error);
    }
}

TEST_CASE("lattice dot export is a Hasse diagram") {
    Graph g = fixtures::g1();
    std::string dot = hs_lattice(g).to_dot(g);
    CHECK(dot.find("\"{}\" -> \"{w}\"") != std::string::npos);
    CHECK(dot.find("\"{w}\" -> \"{v, w}\"") != std::string::npos);
    // no shortcut edge across the chain
    CHECK(dot.find("\"{}\" -> \"{v, w}\"") == std::string::npos);
}
