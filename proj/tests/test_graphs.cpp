#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fqlab/error.hpp"
#include "fqlab/graphs.hpp"
#include "fqlab/pp.hpp"
#include "oracles.hpp"

using namespace fqlab;

namespace {

std::set<std::uint32_t> neighbour_ids(const MonomialGraph& g, MonomialGraph::VertexId id) {
    std::set<std::uint32_t> out;
    g.for_each_neighbor(id, [&](MonomialGraph::VertexId w) { out.insert(w); });
    return out;
}

}  // namespace

TEST(Neighbors, ZeroPointOfBaseGraph) {
    const Field f = construct_field(3, 1);
    const MonomialGraph g(f, Monomial{1, 1}, Monomial{1, 2});
    const auto nbrs = g.neighbors(Side::P, Triple{f.zero(), f.zero(), f.zero()});
    ASSERT_EQ(nbrs.size(), 3u);
    for (std::uint32_t l1 = 0; l1 < 3; ++l1) {
        EXPECT_EQ(nbrs[l1], (Triple{Element{l1}, f.zero(), f.zero()}));
    }
}

TEST(Neighbors, SatisfyDefiningEquations) {
    const Field f = construct_field(5, 1);
    const MonomialGraph g(f, Monomial{2, 1}, Monomial{1, 3});
    for (std::uint32_t id = 0; id < g.vertex_count() / 2; id += 7) {
        const auto [side, point] = g.vertex_at(id);
        ASSERT_EQ(side, Side::P);
        for (const Triple& line : g.neighbors(Side::P, point)) {
            const Element fv = f.mul(f.pow(point.first, 2), f.pow(line.first, 1));
            const Element gv = f.mul(f.pow(point.first, 1), f.pow(line.first, 3));
            EXPECT_EQ(f.add(point.second, line.second), fv);
            EXPECT_EQ(f.add(point.third, line.third), gv);
        }
    }
}

TEST(Neighbors, RegularSymmetricAndEdgeCount) {
    for (std::uint64_t q : {3u, 5u, 9u}) {
        const Field f = field_of_order(q);
        const auto g = MonomialGraph::for_exponent(f, 2);
        std::uint64_t point_degrees = 0;
        for (MonomialGraph::VertexId id = 0; id < g.vertex_count(); ++id) {
            const auto nbrs = neighbour_ids(g, id);
            ASSERT_EQ(nbrs.size(), q);
            if (id < g.vertex_count() / 2) point_degrees += nbrs.size();
            for (auto w : nbrs) {
                ASSERT_NE(id < g.vertex_count() / 2, w < g.vertex_count() / 2);
                ASSERT_TRUE(neighbour_ids(g, w).contains(id));
            }
        }
        EXPECT_EQ(point_degrees, g.edge_count());
        EXPECT_EQ(g.edge_count(), q * q * q * q);
    }
}

TEST(Neighbors, VertexIdRoundTrip) {
    const Field f = construct_field(3, 2);
    const MonomialGraph g(f, Monomial{1, 1}, Monomial{1, 2});
    for (MonomialGraph::VertexId id = 0; id < g.vertex_count(); ++id) {
        const auto [side, t] = g.vertex_at(id);
        ASSERT_EQ(g.vertex_id(side, t), id);
    }
}

TEST(Girth, BaseGraphHasGirthEight) {
    for (std::uint64_t q : {3u, 5u, 7u}) {
        EXPECT_EQ(girth(MonomialGraph::for_exponent(field_of_order(q), 1)), 8u) << q;
    }
}

TEST(Girth, SmallExponentExample) {
    const Field f = construct_field(3, 1);
    const auto g = MonomialGraph::for_exponent(f, 2);
    const auto exact = oracle::girth_all_sources(f, 1, 1, 2, 4);
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(*exact, 6u);
    EXPECT_EQ(girth(g), exact);
    EXPECT_LT(*girth(g), 8u);
}

TEST(Girth, RepresentativeShortcutMatchesAllSources) {
    for (std::uint64_t q : {3u, 5u}) {
        const Field f = field_of_order(q);
        std::vector<std::array<std::uint64_t, 4>> exps;
        for (std::uint64_t k = 1; k < q; ++k) exps.push_back({1, 1, k, 2 * k});
        exps.push_back({1, 1, 2, 1});
        exps.push_back({2, 1, 1, 2});
        exps.push_back({1, 2, 0, 1});
        exps.push_back({0, 0, 0, 0});
        for (const auto& e : exps) {
            const MonomialGraph g(f, Monomial{e[0], e[1]}, Monomial{e[2], e[3]});
            const auto fast = girth(g);
            EXPECT_EQ(fast, oracle::girth_all_sources(f, e[0], e[1], e[2], e[3]))
                << q << ": " << e[0] << e[1] << e[2] << e[3];
            if (fast) EXPECT_EQ(*fast % 2, 0u);
        }
    }
}

TEST(Girth, ParallelSourcesAgree) {
    const Field f = field_of_order(7);
    for (std::uint64_t k = 1; k < 7; ++k) {
        const auto g = MonomialGraph::for_exponent(f, k);
        EXPECT_EQ(girth(g, GirthOptions{kDefaultGirthCap, 1}), girth(g, GirthOptions{kDefaultGirthCap, 3}));
    }
}

TEST(GirthAtLeast, ConsistentWithExactGirth) {
    for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
        const Field f = field_of_order(q);
        for (std::uint64_t k = 1; k < q; ++k) {
            const auto g = MonomialGraph::for_exponent(f, k);
            const auto exact = girth(g);
            for (std::uint32_t bound : {4u, 6u, 8u}) {
                EXPECT_EQ(girth_at_least(g, bound), !exact || *exact >= bound) << q << " " << k;
            }
        }
    }
    EXPECT_THROW(girth_at_least(MonomialGraph::for_exponent(field_of_order(3), 1), 5), Error);
}

TEST(GirthAtLeast, BoundFourMeansNoSharedPairs) {
    // girth >= 6 fails exactly when two vertices share two common neighbours.
    const Field f = construct_field(3, 1);
    for (std::uint64_t k = 1; k < 3; ++k) {
        for (const auto& e : std::vector<std::array<std::uint64_t, 4>>{{1, 1, k, 2 * k}, {1, 1, 0, 0}}) {
            const MonomialGraph g(f, Monomial{e[0], e[1]}, Monomial{e[2], e[3]});
            bool shared_pair = false;
            for (MonomialGraph::VertexId u = 0; u < g.vertex_count() && !shared_pair; ++u) {
                const auto nu = neighbour_ids(g, u);
                for (MonomialGraph::VertexId v = u + 1; v < g.vertex_count(); ++v) {
                    const auto nv = neighbour_ids(g, v);
                    std::vector<std::uint32_t> common;
                    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                          std::back_inserter(common));
                    if (common.size() >= 2) {
                        shared_pair = true;
                        break;
                    }
                }
            }
            EXPECT_TRUE(girth_at_least(g, 4));  // simple bipartite graph
            EXPECT_EQ(girth_at_least(g, 6), !shared_pair);
        }
    }
}

TEST(GirthAtLeast, FrobeniusExponentOverNine) {
    EXPECT_TRUE(girth_at_least(MonomialGraph::for_exponent(construct_field(3, 2), 3), 8));
}

TEST(Girth, CapExceeded) {
    const auto g = MonomialGraph::for_exponent(field_of_order(19), 1);
    try {
        girth(g);
        FAIL() << "expected CapExceeded";
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::CapExceeded);
    }
    EXPECT_THROW(conjecture1_scan(field_of_order(19)), Error);
    EXPECT_THROW(girth_at_least(MonomialGraph::for_exponent(field_of_order(7), 1), 8, GirthOptions{5, 1}), Error);
}

TEST(Conjecture1Scan, Examples) {
    const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> expected = {
        {3, {1}}, {5, {1}}, {9, {1, 3}}};
    for (const auto& [q, passing] : expected) {
        const auto report = conjecture1_scan(field_of_order(q), GirthOptions{kDefaultGirthCap, 2});
        EXPECT_EQ(report.passing, passing) << q;
        EXPECT_TRUE(report.implication_holds);
        EXPECT_TRUE(report.pass());
        EXPECT_EQ(report.rows.size(), q - 1);
    }
}

TEST(Conjecture1Scan, GirthImpliesBothPP) {
    for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
        const Field f = field_of_order(q);
        for (std::uint64_t k = 1; k < q; ++k) {
            if (girth_at_least(MonomialGraph::for_exponent(f, k), 8)) {
                EXPECT_TRUE(is_pp(f, Family::Both, k)) << q << " " << k;
            }
        }
    }
}
