#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arboreal {

// A vertex of the binary tree. bits holds s1..s_level with s1 as the most
// significant bit; the root has level 0.
struct NodeLabel {
    unsigned level = 0;
    std::uint64_t bits = 0;

    static NodeLabel root() { return {}; }
    static NodeLabel parse(std::string_view word);  // "", "0", "101", ...

    NodeLabel child(unsigned s) const { return {level + 1, (bits << 1) | (s & 1u)}; }
    // Breadth-first position: 2^level - 1 + bits.
    std::uint64_t index() const { return ((std::uint64_t{1} << level) - 1) + bits; }
    std::string str() const;

    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

class Sign {
public:
    constexpr Sign() = default;
    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }
    static constexpr Sign from_parity(bool odd) { return Sign(odd); }

    constexpr bool negative() const { return neg_; }
    constexpr int value() const { return neg_ ? -1 : 1; }
    constexpr Sign operator*(Sign o) const { return Sign(neg_ != o.neg_); }
    constexpr Sign operator-() const { return Sign(!neg_); }
    friend constexpr bool operator==(Sign, Sign) = default;

private:
    constexpr explicit Sign(bool neg) : neg_(neg) {}
    bool neg_ = false;
};

using ParityVector = std::vector<Sign>;

ParityVector operator*(const ParityVector& a, const ParityVector& b);

// Automorphism of T_n stored as a portrait: one swap bit per vertex of level < n,
// indexed by the pre-image vertex, packed breadth-first into 64-bit words.
class TreeAut {
public:
    static constexpr unsigned max_depth = 30;

    explicit TreeAut(unsigned depth);  // identity

    unsigned depth() const { return depth_; }
    std::uint64_t size_bits() const { return (std::uint64_t{1} << depth_) - 1; }

    bool bit(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
    bool bit(const NodeLabel& w) const { return bit(w.index()); }
    void set_bit(std::uint64_t index, bool v);
    void set_bit(const NodeLabel& w, bool v) { set_bit(w.index(), v); }
    void flip(const NodeLabel& w) { set_bit(w, !bit(w)); }

    // Number of set bits among breadth-first indices [first, first + count).
    std::uint64_t popcount_range(std::uint64_t first, std::uint64_t count) const;

    bool is_identity() const;

    // Canonical text form "n:hex": bits in breadth-first order, first bit most
    // significant, zero padded to a whole number of hex digits.
    std::string to_hex() const;
    static TreeAut from_hex(std::string_view text);

    // Byte string used as a set key.
    std::string key() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const TreeAut&, const TreeAut&) = default;
    friend std::strong_ordering operator<=>(const TreeAut& a, const TreeAut& b);

private:
    unsigned depth_;
    std::vector<std::uint64_t> words_;
};

TreeAut identity(unsigned n);
TreeAut compose(const TreeAut& sigma, const TreeAut& tau);  // sigma after tau
TreeAut invert(const TreeAut& sigma);
NodeLabel apply(const TreeAut& sigma, const NodeLabel& y);

// Images of every vertex at each level: result[k][v] = bits of sigma(v) for v at level k.
std::vector<std::vector<std::uint64_t>> level_images(const TreeAut& sigma);

// sgn_m(sigma, y).
Sign sgn(const TreeAut& sigma, const NodeLabel& y, unsigned m);

struct Membership {
    bool in_mtilde = false;
    Sign common;  // meaningful only when in_mtilde

    bool in_m() const { return in_mtilde && common == Sign::plus(); }
    friend bool operator==(const Membership&, const Membership&) = default;
};

Membership in_group(const TreeAut& sigma, unsigned ell);

// Common value of sgn_{l-1}(sigma, w0) and sgn_{l-1}(sigma, w1).
Sign acts_sign_above(const TreeAut& sigma, const NodeLabel& w, unsigned ell);

enum class Parity { Even, Odd };

Parity cousins_parity(const TreeAut& sigma, const NodeLabel& x, unsigned ell, unsigned n);

ParityVector abelianize(const TreeAut& sigma, unsigned ell);

// log2 |M_{l,n}|, and the same for Aut(T_n) (ell > n).
std::uint64_t log2_order_M(unsigned ell, unsigned n);

struct Guards {
    unsigned max_log2_enumeration = 24;
    std::uint64_t max_closure = std::uint64_t{1} << 20;
};

// Visits every element of M_{l,n} exactly once, in a fixed order.
class MEnumerator {
public:
    MEnumerator(unsigned ell, unsigned n, const Guards& guards = {});

    std::optional<TreeAut> next();
    std::uint64_t count() const { return std::uint64_t{1} << free_.size(); }

private:
    struct Block {
        std::uint64_t parity_index;
        std::uint64_t first;
        std::uint64_t len;
    };
    unsigned n_;
    std::vector<std::uint64_t> free_;
    std::vector<Block> blocks_;
    std::uint64_t counter_ = 0;
    bool done_ = false;
};

std::vector<TreeAut> enumerate_M(unsigned ell, unsigned n, const Guards& guards = {});
std::vector<TreeAut> enumerate_aut(unsigned n, const Guards& guards = {});

// Subgroup generated by gens, sorted ascending.
std::vector<TreeAut> closure(const std::vector<TreeAut>& gens, const Guards& guards = {});

// Restriction of sigma to T_m (m <= depth), and the trivial extension to T_n.
TreeAut restrict_to(const TreeAut& sigma, unsigned m);
TreeAut extend_to(const TreeAut& sigma, unsigned n);

}  // namespace arboreal

template <>
struct std::hash<arboreal::TreeAut> {
    std::size_t operator()(const arboreal::TreeAut& t) const noexcept;
};
