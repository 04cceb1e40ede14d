#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "hypermin/edge_set.hpp"
#include "hypermin/prng.hpp"
#include "hypermin/sampler.hpp"

using namespace hypermin;

namespace {

EdgeSet edge(std::uint32_t n, std::vector<std::uint32_t> vs) {
    return EdgeSet::from_vertices(n, vs);
}

}  // namespace

TEST_CASE("subset relation") {
    const auto empty = edge(4, {});
    const auto e13 = edge(4, {1, 3});
    const auto e2 = edge(4, {2});
    const auto e124 = edge(4, {1, 2, 4});

    CHECK(empty.is_subset_of(e13));
    CHECK_FALSE(e13.is_proper_subset_of(e13));
    CHECK(e13.is_subset_of(e13));
    CHECK(e2.is_proper_subset_of(e124));
    CHECK_FALSE(e124.is_subset_of(e2));

    CHECK_THROWS_AS(edge(4, {1}).is_subset_of(edge(5, {1})), std::invalid_argument);
}

TEST_CASE("subset relation is a partial order") {
    // Random edges over two universes, one crossing the word boundary.
    for (std::uint32_t n : {12u, 90u}) {
        std::vector<EdgeSet> es;
        auto stream = rng::stream(7, n);
        for (int i = 0; i < 40; ++i) es.push_back(sample_edge(n, 0.4, stream));
        for (const auto& a : es) CHECK(a.is_subset_of(a));
        for (const auto& a : es)
            for (const auto& b : es) {
                if (a.is_subset_of(b) && b.is_subset_of(a)) CHECK(a == b);
                for (const auto& c : es)
                    if (a.is_subset_of(b) && b.is_subset_of(c)) CHECK(a.is_subset_of(c));
            }
    }
}

TEST_CASE("cardinality, complement, vertices") {
    const auto e = edge(70, {1, 64, 65, 70});
    CHECK(e.cardinality() == 4);
    CHECK(e.vertices() == std::vector<std::uint32_t>{1, 64, 65, 70});
    const auto c = e.complement();
    CHECK(c.cardinality() == 66);
    CHECK_FALSE(c.contains(64));
    CHECK(c.contains(2));
    CHECK(c.complement() == e);
}

TEST_CASE("canonical text form") {
    CHECK(edge(5, {}).to_text() == "-");
    CHECK(edge(5, {3, 1, 5}).to_text() == "1 3 5");
    CHECK(EdgeSet::parse(5, "1 3 5") == edge(5, {1, 3, 5}));
    CHECK(EdgeSet::parse(5, "-") == edge(5, {}));

    CHECK_THROWS_AS(EdgeSet::parse(5, "3 1"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeSet::parse(5, "1 1"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeSet::parse(5, "0 2"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeSet::parse(5, "6"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeSet::parse(5, "- 1"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeSet::parse(5, "x"), std::invalid_argument);
}

TEST_CASE("count_distinct") {
    MultiHypergraph h(3);
    CHECK(h.count_distinct() == 0);
    h.add(edge(3, {1}));
    h.add(edge(3, {1}));
    h.add(edge(3, {2}));
    CHECK(h.size() == 3);
    CHECK(h.count_distinct() == 2);
}

TEST_CASE("count_distinct against sort-and-unique oracle") {
    ModelParams params{4, 1000, 0.5, 99};
    const auto h = sample_hypergraph(params);
    auto keys = std::vector<std::vector<std::uint64_t>>{};
    for (const auto& e : h.edges())
        keys.emplace_back(e.words().begin(), e.words().end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    CHECK(h.count_distinct() == keys.size());
}

TEST_CASE("hypergraph text round trip") {
    MultiHypergraph h(6);
    h.add(edge(6, {}));
    h.add(edge(6, {2, 4, 6}));
    h.add(edge(6, {2, 4, 6}));
    h.add(edge(6, {1}));

    std::stringstream buf;
    h.write(buf);
    const auto back = MultiHypergraph::read(buf);
    CHECK(back.universe_size() == 6);
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(back[i] == h[i]);

    std::stringstream bad1("m 6\n1 2\n");
    CHECK_THROWS_AS(MultiHypergraph::read(bad1), std::invalid_argument);
    std::stringstream bad2("n 6\n7\n");
    CHECK_THROWS_AS(MultiHypergraph::read(bad2), std::invalid_argument);
    std::stringstream bad3("");
    CHECK_THROWS_AS(MultiHypergraph::read(bad3), std::invalid_argument);
}
