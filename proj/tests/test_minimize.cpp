#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hypermin/minimize.hpp"
#include "hypermin/sampler.hpp"

using namespace hypermin;

namespace {

EdgeSet edge(std::uint32_t n, std::vector<std::uint32_t> vs) {
    return EdgeSet::from_vertices(n, vs);
}

MultiHypergraph graph(std::uint32_t n, std::vector<std::vector<std::uint32_t>> edges) {
    MultiHypergraph h(n);
    for (auto& vs : edges) h.add(edge(n, vs));
    return h;
}

bool is_antichain(const Antichain& a) {
    const auto& ms = a.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (i != j && ms[i].is_subset_of(ms[j])) return false;
    return true;
}

MultiHypergraph random_instance(std::uint64_t seed, std::uint32_t max_n = 64,
                                std::uint64_t max_m = 200) {
    auto s = rng::stream(seed, 0);
    const std::uint32_t n = 1 + s.next() % max_n;
    const std::uint64_t m = 1 + s.next() % max_m;
    const double p = 0.1 * double(1 + s.next() % 9);
    return sample_hypergraph({n, m, p, s.next()});
}

}  // namespace

TEST_CASE("minimization basics") {
    struct Case {
        MultiHypergraph input;
        std::vector<std::vector<std::uint32_t>> expect;
    };
    const Case cases[] = {
        {graph(3, {{}, {1}, {1, 2}}), {{}}},
        {graph(3, {{1}, {1}, {2}}), {{1}, {2}}},
        {graph(3, {{1, 2}, {2, 3}, {1, 3}}), {{1, 2}, {1, 3}, {2, 3}}},
    };
    for (const auto& c : cases) {
        std::vector<EdgeSet> expect;
        for (auto vs : c.expect) expect.push_back(edge(3, vs));
        const auto want = Antichain::from_members(3, expect);
        CHECK(minimize_naive(c.input) == want);
        CHECK(minimize_sorted(c.input) == want);
        CHECK(minimize_stream(c.input) == want);
    }
}

TEST_CASE("streaming insert") {
    const auto one = Antichain::from_members(3, {edge(3, {1})});
    CHECK(streaming_insert(one, edge(3, {1, 2})) == one);  // dominated: no-op
    CHECK(streaming_insert(one, edge(3, {1})) == one);     // duplicate: no-op

    const auto two = Antichain::from_members(3, {edge(3, {1, 2}), edge(3, {1, 3})});
    const auto evicted = streaming_insert(two, edge(3, {1}));
    CHECK(evicted == Antichain::from_members(3, {edge(3, {1})}));
}

TEST_CASE("fold order does not matter") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_instance(seed, 16, 30);
        const auto want = minimize_naive(h);
        auto edges = h.edges();
        auto s = rng::stream(seed, 1);
        for (int rounds = 0; rounds < 4; ++rounds) {
            for (std::size_t i = edges.size(); i > 1; --i)
                std::swap(edges[i - 1], edges[s.next() % i]);
            StreamingMinimizer sm(h.universe_size());
            for (const auto& e : edges) sm.insert(e);
            CHECK(sm.snapshot() == want);
        }
    }
}

TEST_CASE("algorithms agree on random instances") {
    for (std::uint64_t seed = 100; seed < 200; ++seed) {
        const auto h = random_instance(seed);
        const auto a = minimize_naive(h);
        const auto b = minimize_sorted(h);
        const auto c = minimize_stream(h);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(is_antichain(a));
        CHECK(a.size() >= 1);
        CHECK(a.size() <= h.count_distinct());
        CHECK(h.count_distinct() <= h.size());
    }
}

TEST_CASE("multi-word universes") {
    for (std::uint64_t seed = 300; seed < 310; ++seed) {
        auto s = rng::stream(seed, 0);
        const std::uint32_t n = 65 + s.next() % 130;
        const auto h = sample_hypergraph({n, 150, 0.35, s.next()});
        CHECK(minimize_sorted(h) == minimize_naive(h));
    }
}

TEST_CASE("minimization is idempotent") {
    for (std::uint64_t seed = 400; seed < 410; ++seed) {
        const auto first = minimize_sorted(random_instance(seed));
        MultiHypergraph again(first.universe_size());
        for (const auto& e : first.members()) again.add(e);
        CHECK(minimize_sorted(again) == first);
    }
}

TEST_CASE("antichain validation") {
    CHECK_THROWS_AS(Antichain::from_members(3, {edge(3, {1}), edge(3, {1})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Antichain::from_members(3, {edge(3, {1}), edge(3, {1, 2})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Antichain::from_members(3, {edge(4, {1})}), std::invalid_argument);
}
