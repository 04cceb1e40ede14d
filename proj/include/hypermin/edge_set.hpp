#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace hypermin {

/// One hyperedge: a subset of the universe [n] = {1, ..., n}, stored as a
/// bit vector in 64-bit blocks. Vertex ids are 1-based everywhere in the
/// public interface; no bit above the universe size is ever set.
class EdgeSet {
public:
    EdgeSet() = default;

    explicit EdgeSet(std::uint32_t universe_size)
        : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

    static EdgeSet from_vertices(std::uint32_t universe_size,
                                 const std::vector<std::uint32_t>& vertices) {
        EdgeSet e(universe_size);
        for (auto v : vertices) e.add(v);
        return e;
    }

    std::uint32_t universe_size() const { return n_; }

    std::uint32_t cardinality() const {
        std::uint32_t c = 0;
        for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    bool contains(std::uint32_t v) const {
        check_vertex(v);
        return (words_[(v - 1) / 64] >> ((v - 1) % 64)) & 1u;
    }

    void add(std::uint32_t v) {
        check_vertex(v);
        words_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    }

    void remove(std::uint32_t v) {
        check_vertex(v);
        words_[(v - 1) / 64] &= ~(std::uint64_t{1} << ((v - 1) % 64));
    }

    /// Set difference [n] \ e; used to transfer minimization results to the
    /// maximization setting.
    EdgeSet complement() const {
        EdgeSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    bool is_subset_of(const EdgeSet& other) const {
        check_same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool is_proper_subset_of(const EdgeSet& other) const {
        return is_subset_of(other) && *this != other;
    }

    bool operator==(const EdgeSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }
    bool operator!=(const EdgeSet& other) const { return !(*this == other); }

    std::span<const std::uint64_t> words() const { return words_; }

    std::vector<std::uint32_t> vertices() const {
        std::vector<std::uint32_t> out;
        out.reserve(cardinality());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)) + 1);
                w &= w - 1;
            }
        }
        return out;
    }

    /// Canonical text form: strictly increasing 1-based ids, space separated;
    /// the empty edge is the single token "-".
    std::string to_text() const {
        auto vs = vertices();
        if (vs.empty()) return "-";
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(vs[i]);
        }
        return s;
    }

    static EdgeSet parse(std::uint32_t universe_size, const std::string& line) {
        EdgeSet e(universe_size);
        std::istringstream in(line);
        std::string tok;
        long prev = 0;
        bool any = false;
        while (in >> tok) {
            if (tok == "-") {
                if (any || (in >> tok))
                    throw std::invalid_argument("edge line: '-' must stand alone");
                return e;
            }
            long v;
            try {
                v = std::stol(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("edge line: bad vertex token '" + tok + "'");
            }
            if (v < 1 || v > static_cast<long>(universe_size))
                throw std::invalid_argument("edge line: vertex " + tok + " out of range [1," +
                                            std::to_string(universe_size) + "]");
            if (v <= prev)
                throw std::invalid_argument("edge line: indices must be strictly increasing");
            e.add(static_cast<std::uint32_t>(v));
            prev = v;
            any = true;
        }
        if (!any) throw std::invalid_argument("edge line: empty (use '-' for the empty edge)");
        return e;
    }

    /// Strict weak order by (cardinality, bit pattern); gives deterministic
    /// listings of antichains and minimization output.
    static bool canonical_less(const EdgeSet& a, const EdgeSet& b) {
        auto ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb) return ca < cb;
        return a.words_ < b.words_;
    }

private:
    void check_vertex(std::uint32_t v) const {
        if (v < 1 || v > n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " outside [1," +
                                        std::to_string(n_) + "]");
    }
    void check_same_universe(const EdgeSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("universe size mismatch: " + std::to_string(n_) +
                                        " vs " + std::to_string(other.n_));
    }
    void mask_tail() {
        if (n_ % 64) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hash_words(std::uint64_t seed, std::span<const std::uint64_t> words) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (auto w : words) {
        h ^= w;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace hypermin

template <>
struct std::hash<hypermin::EdgeSet> {
    std::size_t operator()(const hypermin::EdgeSet& e) const {
        return hypermin::hash_words(e.universe_size(), e.words());
    }
};

namespace hypermin {

/// Ordered multiset of edges over a common universe; the position of an edge
/// is its trial index. Duplicates are permitted.
class MultiHypergraph {
public:
    explicit MultiHypergraph(std::uint32_t universe_size) : n_(universe_size) {}

    std::uint32_t universe_size() const { return n_; }

    void add(EdgeSet e) {
        if (e.universe_size() != n_)
            throw std::invalid_argument("edge universe size mismatch");
        edges_.push_back(std::move(e));
    }

    /// |H|: total number of edges counting multiplicities.
    std::size_t size() const { return edges_.size(); }

    const std::vector<EdgeSet>& edges() const { return edges_; }
    const EdgeSet& operator[](std::size_t i) const { return edges_[i]; }

    /// ||H||: cardinality of the support.
    std::size_t count_distinct() const {
        std::unordered_set<EdgeSet> support(edges_.begin(), edges_.end());
        return support.size();
    }

    void write(std::ostream& out) const {
        out << "n " << n_ << '\n';
        for (const auto& e : edges_) out << e.to_text() << '\n';
    }

    static MultiHypergraph read(std::istream& in) {
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("hypergraph file: missing header line");
        std::istringstream header(line);
        std::string tag;
        long n = -1;
        if (!(header >> tag >> n) || tag != "n" || n < 1)
            throw std::invalid_argument("hypergraph file: header must be 'n <universe_size>'");
        std::string extra;
        if (header >> extra)
            throw std::invalid_argument("hypergraph file: trailing tokens after header");
        MultiHypergraph h(static_cast<std::uint32_t>(n));
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            h.add(EdgeSet::parse(h.universe_size(), line));
        }
        return h;
    }

private:
    std::uint32_t n_;
    std::vector<EdgeSet> edges_;
};

}  // namespace hypermin
