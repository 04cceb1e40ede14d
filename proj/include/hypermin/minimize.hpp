#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hypermin/edge_set.hpp"

namespace hypermin {

/// A set of edges none of which properly contains another. This is the
/// output type of every minimization path; members are kept in canonical
/// (cardinality, bit pattern) order so results compare deterministically.
class Antichain {
public:
    explicit Antichain(std::uint32_t universe_size) : n_(universe_size) {}

    /// Validating constructor for externally assembled member lists.
    static Antichain from_members(std::uint32_t universe_size, std::vector<EdgeSet> members) {
        for (const auto& e : members)
            if (e.universe_size() != universe_size)
                throw std::invalid_argument("antichain: member universe size mismatch");
        std::sort(members.begin(), members.end(), EdgeSet::canonical_less);
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            if (members[i] == members[i + 1])
                throw std::invalid_argument("antichain: duplicate member");
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (members[j].is_proper_subset_of(members[i]))
                    throw std::invalid_argument("antichain: member contains another");
        Antichain a(universe_size);
        a.members_ = std::move(members);
        return a;
    }

    std::uint32_t universe_size() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<EdgeSet>& members() const { return members_; }

    bool operator==(const Antichain& other) const {
        return n_ == other.n_ && members_ == other.members_;
    }

private:
    friend class StreamingMinimizer;
    friend Antichain minimize_naive(const MultiHypergraph&);
    friend Antichain minimize_sorted(const MultiHypergraph&);

    // Trusted path for the algorithms in this header; sorts, does not reverify.
    static Antichain from_verified(std::uint32_t universe_size, std::vector<EdgeSet> members) {
        std::sort(members.begin(), members.end(), EdgeSet::canonical_less);
        Antichain a(universe_size);
        a.members_ = std::move(members);
        return a;
    }

    std::uint32_t n_;
    std::vector<EdgeSet> members_;
};

/// Reference algorithm: deduplicate, then keep every edge that has no proper
/// subset in the support. Quadratic; serves as the oracle for the others.
inline Antichain minimize_naive(const MultiHypergraph& h) {
    std::unordered_set<EdgeSet> support(h.edges().begin(), h.edges().end());
    std::vector<EdgeSet> minimal;
    for (const auto& e : support) {
        bool dominated = false;
        for (const auto& o : support) {
            if (o.is_proper_subset_of(e)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(e);
    }
    return Antichain::from_verified(h.universe_size(), std::move(minimal));
}

namespace detail {

// Flat edge matrix: candidate words stored row-major, plus a separate copy of
// word 0 for the prefilter scan. With random edges a dominating subset is
// rare, so (word0 & ~cand0) != 0 rejects almost every pair in one load.
struct FlatMinimizer {
    std::size_t words_per_edge;
    std::vector<std::uint64_t> accepted_words;
    std::vector<std::uint64_t> accepted_word0;

    explicit FlatMinimizer(std::size_t w) : words_per_edge(w) {}

    void accept(const std::uint64_t* edge) {
        accepted_words.insert(accepted_words.end(), edge, edge + words_per_edge);
        accepted_word0.push_back(edge[0]);
    }

    // True iff some accepted edge with index < limit is a subset of cand.
    bool dominated(const std::uint64_t* cand, std::size_t limit) const {
        const std::uint64_t not0 = ~cand[0];
        const std::uint64_t* a0 = accepted_word0.data();
        std::size_t i = 0;
        for (; i + 16 <= limit; i += 16) {
            std::uint32_t hits = 0;
            for (int k = 0; k < 16; ++k)
                hits |= static_cast<std::uint32_t>((a0[i + k] & not0) == 0) << k;
            while (hits) {
                const int k = std::countr_zero(hits);
                hits &= hits - 1;
                if (subset_tail(i + k, cand)) return true;
            }
        }
        for (; i < limit; ++i)
            if ((a0[i] & not0) == 0 && subset_tail(i, cand)) return true;
        return false;
    }

private:
    bool subset_tail(std::size_t idx, const std::uint64_t* cand) const {
        const std::uint64_t* row = accepted_words.data() + idx * words_per_edge;
        for (std::size_t w = 1; w < words_per_edge; ++w)
            if (row[w] & ~cand[w]) return false;
        return true;
    }
};

}  // namespace detail

/// Cardinality-bucketed minimization: deduplicate, process candidates in
/// order of increasing cardinality, and test each one only against already
/// accepted minimal edges of strictly smaller cardinality. Runs in
/// O(m n + m n |min(H)| / wordsize) and equals minimize_naive on every input.
inline Antichain minimize_sorted(const MultiHypergraph& h) {
    const std::uint32_t n = h.universe_size();
    const std::size_t words = (n + 63) / 64;

    std::unordered_set<EdgeSet> seen;
    seen.reserve(h.size() * 2);
    std::vector<const EdgeSet*> distinct;
    distinct.reserve(h.size());
    for (const auto& e : h.edges()) {
        auto [it, inserted] = seen.insert(e);
        if (inserted) distinct.push_back(&*it);
    }

    // Counting sort by cardinality, first occurrence first within a bucket.
    std::vector<std::uint32_t> cards(distinct.size());
    std::vector<std::size_t> bucket_start(n + 2, 0);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        cards[i] = distinct[i]->cardinality();
        ++bucket_start[cards[i] + 1];
    }
    std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
    std::vector<std::size_t> order(distinct.size());
    {
        auto cursor = bucket_start;
        for (std::size_t i = 0; i < distinct.size(); ++i) order[cursor[cards[i]]++] = i;
    }

    detail::FlatMinimizer flat(words);
    std::vector<std::uint64_t> cand(words);
    std::vector<const EdgeSet*> minimal;
    std::size_t pos = 0;
    for (std::uint32_t card = 0; card <= n && pos < order.size(); ++card) {
        const std::size_t smaller_count = flat.accepted_word0.size();
        for (; pos < bucket_start[card + 1]; ++pos) {
            const EdgeSet* e = distinct[order[pos]];
            auto ws = e->words();
            std::copy(ws.begin(), ws.end(), cand.begin());
            if (!flat.dominated(cand.data(), smaller_count)) {
                flat.accept(cand.data());
                minimal.push_back(e);
            }
        }
    }

    std::vector<EdgeSet> out;
    out.reserve(minimal.size());
    for (const auto* e : minimal) out.push_back(*e);
    return Antichain::from_verified(n, std::move(out));
}

/// Online filter over an edge stream. Inserting e leaves the state unchanged
/// if some member is contained in e; otherwise e enters and every proper
/// superset of e is evicted. Single writer; snapshots are safe to share.
class StreamingMinimizer {
public:
    explicit StreamingMinimizer(std::uint32_t universe_size)
        : n_(universe_size), buckets_(universe_size + 1) {}

    static StreamingMinimizer from(const Antichain& state) {
        StreamingMinimizer s(state.universe_size());
        for (const auto& e : state.members()) {
            s.buckets_[e.cardinality()].push_back(e);
            ++s.size_;
        }
        return s;
    }

    /// Returns true iff e entered the antichain.
    bool insert(const EdgeSet& e) {
        if (e.universe_size() != n_)
            throw std::invalid_argument("streaming insert: universe size mismatch");
        const std::uint32_t c = e.cardinality();
        for (std::uint32_t card = 0; card <= c; ++card)
            for (const auto& member : buckets_[card])
                if (member.is_subset_of(e)) return false;
        for (std::uint32_t card = c + 1; card <= n_; ++card) {
            auto& bucket = buckets_[card];
            auto kept = std::remove_if(bucket.begin(), bucket.end(),
                                       [&](const EdgeSet& s) { return e.is_subset_of(s); });
            size_ -= static_cast<std::size_t>(bucket.end() - kept);
            bucket.erase(kept, bucket.end());
        }
        buckets_[c].push_back(e);
        ++size_;
        return true;
    }

    std::size_t size() const { return size_; }

    Antichain snapshot() const {
        std::vector<EdgeSet> members;
        members.reserve(size_);
        for (const auto& bucket : buckets_)
            members.insert(members.end(), bucket.begin(), bucket.end());
        return Antichain::from_verified(n_, std::move(members));
    }

private:
    std::uint32_t n_;
    std::vector<std::vector<EdgeSet>> buckets_;
    std::size_t size_ = 0;
};

/// Functional form of one streaming step: min(members(state) + {e}).
inline Antichain streaming_insert(const Antichain& state, const EdgeSet& e) {
    auto s = StreamingMinimizer::from(state);
    s.insert(e);
    return s.snapshot();
}

inline Antichain minimize_stream(const MultiHypergraph& h) {
    StreamingMinimizer s(h.universe_size());
    for (const auto& e : h.edges()) s.insert(e);
    return s.snapshot();
}

}  // namespace hypermin
