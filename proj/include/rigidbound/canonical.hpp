#ifndef RIGIDBOUND_CANONICAL_HPP
#define RIGIDBOUND_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rigidbound/graph.hpp"

namespace rigidbound {

// Isomorphism-class key: one byte for n, then the upper-triangular
// adjacency bits of the canonically labeled graph, row-major, packed
// MSB-first and zero-padded to whole bytes. 16 bytes cover n = 16.
class CanonicalCode {
public:
    CanonicalCode() : size_(0), bytes_{} {}

    CanonicalCode(const uint8_t* data, int size) : size_(uint8_t(size)), bytes_{} {
        for (int i = 0; i < size; ++i) bytes_[size_t(i)] = data[i];
    }

    int size() const { return size_; }
    const uint8_t* data() const { return bytes_.data(); }
    int vertex_count() const { return size_ ? int(bytes_[0]) : 0; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        for (int i = 0; i < size_; ++i) {
            s.push_back(digits[bytes_[size_t(i)] >> 4]);
            s.push_back(digits[bytes_[size_t(i)] & 0xf]);
        }
        return s;
    }

    static CanonicalCode from_hex(const std::string& s) {
        if (s.size() % 2 || s.size() / 2 > 16)
            throw std::invalid_argument("CanonicalCode: bad hex string");
        auto val = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw std::invalid_argument("CanonicalCode: bad hex digit");
        };
        std::array<uint8_t, 16> b{};
        for (size_t i = 0; i < s.size() / 2; ++i)
            b[i] = uint8_t(val(s[2 * i]) * 16 + val(s[2 * i + 1]));
        return CanonicalCode(b.data(), int(s.size() / 2));
    }

    auto operator<=>(const CanonicalCode&) const = default;

    struct Hash {
        size_t operator()(const CanonicalCode& c) const {
            uint64_t h = 1469598103934665603ull;
            for (int i = 0; i < c.size(); ++i) {
                h ^= c.data()[i];
                h *= 1099511628211ull;
            }
            return size_t(h);
        }
    };

private:
    uint8_t size_;
    std::array<uint8_t, 16> bytes_;
};

namespace detail {

// Iterated neighborhood refinement. Returns per-vertex color ids; ids are
// ordered by the lexicographic rank of the color signatures, which makes
// them invariant under relabeling.
inline std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) color[size_t(v)] = g.degree(v);
    // normalize initial ids
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[size_t(v)]);
            uint16_t row = g.neighbors(v);
            for (int u = 0; u < n; ++u)
                if ((row >> u) & 1u) s.push_back(color[size_t(u)]);
            std::sort(s.begin() + 1, s.end());
            sig[size_t(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> order;
        for (auto& [s, v] : sig) order[s] = 0;
        int next = 0;
        for (auto& [s, id] : order) id = next++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (auto& [s, v] : sig) fresh[size_t(v)] = order[s];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

// State for the minimum-adjacency-string search over permutations that
// respect the refinement classes.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> classes;   // vertices per color, ascending
    std::vector<int> class_of_pos;           // color handled at each position
    std::vector<int> assigned;               // position -> original vertex
    std::vector<uint32_t> used_in_class;     // per class, mask of used members
    std::vector<uint32_t> best_cols;         // per position, packed column bits
    std::vector<uint32_t> cur_cols;
    std::vector<int> best_perm_inv;          // position -> original vertex
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    void run() {
        std::vector<int> color = refine_colors(g);
        int nclasses = 0;
        for (int c : color) nclasses = std::max(nclasses, c + 1);
        classes.assign(static_cast<size_t>(nclasses), {});
        for (int v = 0; v < n; ++v) classes[size_t(color[size_t(v)])].push_back(v);
        for (int c = 0; c < nclasses; ++c)
            for (size_t i = 0; i < classes[size_t(c)].size(); ++i) class_of_pos.push_back(c);
        assigned.assign(static_cast<size_t>(n), -1);
        used_in_class.assign(static_cast<size_t>(nclasses), 0);
        cur_cols.assign(static_cast<size_t>(n), 0);
        extend(0, true);
    }

    // Column bits for position p against already-assigned positions, packed
    // so that position 0 is the most significant bit (numeric order ==
    // lexicographic order over q = 0..p-1).
    uint32_t column_bits(int p, int v) const {
        uint32_t bits = 0;
        for (int q = 0; q < p; ++q)
            bits = (bits << 1) | uint32_t(g.has_edge(assigned[size_t(q)], v) ? 1 : 0);
        return bits;
    }

    void extend(int p, bool tight) {
        if (p == n) {
            // `tight` may be stale once best has moved; compare in full
            if (!have_best || cur_cols < best_cols) {
                best_cols = cur_cols;
                best_perm_inv = assigned;
                have_best = true;
            }
            return;
        }
        int c = class_of_pos[size_t(p)];
        for (size_t i = 0; i < classes[size_t(c)].size(); ++i) {
            if ((used_in_class[size_t(c)] >> i) & 1u) continue;
            int v = classes[size_t(c)][i];
            uint32_t bits = column_bits(p, v);
            bool next_tight = tight;
            if (have_best && tight) {
                if (bits > best_cols[size_t(p)]) continue;  // prefix already worse
                next_tight = (bits == best_cols[size_t(p)]);
            }
            assigned[size_t(p)] = v;
            cur_cols[size_t(p)] = bits;
            used_in_class[size_t(c)] |= 1u << i;
            extend(p + 1, next_tight);
            used_in_class[size_t(c)] &= ~(1u << i);
            assigned[size_t(p)] = -1;
        }
    }
};

}  // namespace detail

// Canonical labeling: neighborhood refinement followed by exhaustive
// search over the residual class-respecting permutations, minimizing the
// packed adjacency string. Identical codes iff isomorphic.
inline CanonicalCode canonical_form(const Graph& g) {
    int n = g.vertex_count();
    std::array<uint8_t, 16> out{};
    out[0] = uint8_t(n);
    if (n <= 1) return CanonicalCode(out.data(), 1 + 0);

    detail::CanonSearch search(g);
    search.run();
    const std::vector<int>& pos_to_old = search.best_perm_inv;

    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(pos_to_old[size_t(i)], pos_to_old[size_t(j)]))
                out[size_t(1 + bit / 8)] |= uint8_t(0x80u >> (bit % 8));
            ++bit;
        }
    }
    int nbytes = 1 + (n * (n - 1) / 2 + 7) / 8;
    return CanonicalCode(out.data(), nbytes);
}

// The canonical relabeling itself (old vertex -> canonical position),
// for callers that need a concrete witness permutation.
inline std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return std::vector<int>(static_cast<size_t>(n), 0);
    detail::CanonSearch search(g);
    search.run();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) perm[size_t(search.best_perm_inv[size_t(p)])] = p;
    return perm;
}

}  // namespace rigidbound

#endif
