#include "arboreal/tree_group.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

std::uint64_t level_start(unsigned k) { return (std::uint64_t{1} << k) - 1; }

void require_same_depth(const TreeAut& a, const TreeAut& b) {
    if (a.depth() != b.depth()) throw DomainError("tree automorphisms of different depth");
}

// Parity of the level-(level(y)+m-1) bits inside the subtree of y.
bool sign_block_odd(const TreeAut& s, unsigned ylevel, std::uint64_t ybits, unsigned m) {
    const unsigned lvl = ylevel + m - 1;
    const std::uint64_t len = std::uint64_t{1} << (m - 1);
    return s.popcount_range(level_start(lvl) + (ybits << (m - 1)), len) & 1u;
}

void check_membership_m(const TreeAut& sigma, unsigned ell) {
    if (!in_group(sigma, ell).in_m()) throw DomainError("automorphism is not in M_l");
}

Parity cousins_parity_unchecked(const TreeAut& sigma, const NodeLabel& x, unsigned ell,
                                unsigned n) {
    const unsigned up = n - ell;
    const std::uint64_t count = std::uint64_t{1} << up;
    unsigned negatives = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const NodeLabel w{x.level + up, (x.bits << up) | i};
        if (acts_sign_above(sigma, w, ell).negative()) ++negatives;
    }
    return (negatives & 1u) ? Parity::Odd : Parity::Even;
}

}  // namespace

NodeLabel NodeLabel::parse(std::string_view word) {
    if (word.size() > 63) throw ParseError("node label too long");
    NodeLabel y;
    for (char c : word) {
        if (c != '0' && c != '1') throw ParseError("node label must be a 0/1 word");
        y = y.child(c == '1' ? 1u : 0u);
    }
    return y;
}

std::string NodeLabel::str() const {
    std::string s;
    for (unsigned k = 0; k < level; ++k) s.push_back(((bits >> (level - 1 - k)) & 1u) ? '1' : '0');
    return s;
}

ParityVector operator*(const ParityVector& a, const ParityVector& b) {
    if (a.size() != b.size()) throw DomainError("parity vectors of different length");
    ParityVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

TreeAut::TreeAut(unsigned depth) : depth_(depth) {
    if (depth == 0) throw DomainError("tree depth must be positive");
    if (depth > max_depth) throw GuardExceeded("tree depth exceeds " + std::to_string(max_depth));
    words_.assign((size_bits() + 63) / 64, 0);
}

void TreeAut::set_bit(std::uint64_t index, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (index & 63);
    if (v)
        words_[index >> 6] |= mask;
    else
        words_[index >> 6] &= ~mask;
}

std::uint64_t TreeAut::popcount_range(std::uint64_t first, std::uint64_t count) const {
    std::uint64_t total = 0;
    std::uint64_t i = first;
    const std::uint64_t end = first + count;
    while (i < end) {
        const std::uint64_t off = i & 63;
        const std::uint64_t take = std::min<std::uint64_t>(64 - off, end - i);
        std::uint64_t w = words_[i >> 6] >> off;
        if (take < 64) w &= (std::uint64_t{1} << take) - 1;
        total += static_cast<std::uint64_t>(std::popcount(w));
        i += take;
    }
    return total;
}

bool TreeAut::is_identity() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string TreeAut::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::uint64_t nbits = size_bits();
    const std::uint64_t ndig = (nbits + 3) / 4;
    std::string out = std::to_string(depth_) + ":";
    out.reserve(out.size() + ndig);
    for (std::uint64_t d = 0; d < ndig; ++d) {
        unsigned v = 0;
        for (unsigned j = 0; j < 4; ++j) {
            const std::uint64_t i = 4 * d + j;
            v = (v << 1) | ((i < nbits && bit(i)) ? 1u : 0u);
        }
        out.push_back(digits[v]);
    }
    return out;
}

TreeAut TreeAut::from_hex(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) throw ParseError("expected n:hex portrait");
    unsigned n = 0;
    for (char c : text.substr(0, colon)) {
        if (c < '0' || c > '9') throw ParseError("bad portrait depth");
        n = n * 10 + static_cast<unsigned>(c - '0');
        if (n > max_depth) throw GuardExceeded("portrait depth too large");
    }
    TreeAut t(n);
    const std::string_view hex = text.substr(colon + 1);
    const std::uint64_t nbits = t.size_bits();
    if (hex.size() != (nbits + 3) / 4) throw ParseError("portrait hex length does not match depth");
    for (std::uint64_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v = static_cast<unsigned>(c - 'A' + 10);
        else
            throw ParseError("bad hex digit in portrait");
        for (unsigned j = 0; j < 4; ++j) {
            const bool b = (v >> (3 - j)) & 1u;
            const std::uint64_t i = 4 * d + j;
            if (i < nbits)
                t.set_bit(i, b);
            else if (b)
                throw ParseError("nonzero padding bits in portrait");
        }
    }
    return t;
}

std::string TreeAut::key() const {
    std::string k(words_.size() * 8 + 1, '\0');
    k[0] = static_cast<char>(depth_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (unsigned b = 0; b < 8; ++b)
            k[1 + 8 * i + b] = static_cast<char>((words_[i] >> (8 * b)) & 0xff);
    return k;
}

std::strong_ordering operator<=>(const TreeAut& a, const TreeAut& b) {
    if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
    return a.words_ <=> b.words_;
}

TreeAut identity(unsigned n) { return TreeAut(n); }

std::vector<std::vector<std::uint64_t>> level_images(const TreeAut& sigma) {
    const unsigned n = sigma.depth();
    std::vector<std::vector<std::uint64_t>> img(n + 1);
    img[0] = {0};
    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t width = std::uint64_t{1} << k;
        img[k + 1].resize(2 * width);
        for (std::uint64_t v = 0; v < width; ++v) {
            const std::uint64_t b = sigma.bit(level_start(k) + v) ? 1 : 0;
            img[k + 1][2 * v] = 2 * img[k][v] + b;
            img[k + 1][2 * v + 1] = 2 * img[k][v] + (1 ^ b);
        }
    }
    return img;
}

TreeAut compose(const TreeAut& sigma, const TreeAut& tau) {
    require_same_depth(sigma, tau);
    const unsigned n = tau.depth();
    const auto img = level_images(tau);
    TreeAut out(n);
    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t width = std::uint64_t{1} << k;
        for (std::uint64_t v = 0; v < width; ++v) {
            const bool b = tau.bit(level_start(k) + v) != sigma.bit(level_start(k) + img[k][v]);
            if (b) out.set_bit(level_start(k) + v, true);
        }
    }
    return out;
}

TreeAut invert(const TreeAut& sigma) {
    const unsigned n = sigma.depth();
    const auto img = level_images(sigma);
    TreeAut out(n);
    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t width = std::uint64_t{1} << k;
        for (std::uint64_t v = 0; v < width; ++v)
            if (sigma.bit(level_start(k) + v)) out.set_bit(level_start(k) + img[k][v], true);
    }
    return out;
}

NodeLabel apply(const TreeAut& sigma, const NodeLabel& y) {
    if (y.level > sigma.depth()) throw DomainError("label deeper than the tree");
    NodeLabel out;
    for (unsigned k = 0; k < y.level; ++k) {
        const std::uint64_t prefix = y.level == 0 ? 0 : (y.bits >> (y.level - k));
        const unsigned s = static_cast<unsigned>((y.bits >> (y.level - 1 - k)) & 1u);
        const unsigned b = sigma.bit(level_start(k) + prefix) ? 1u : 0u;
        out = out.child(s ^ b);
    }
    return out;
}

Sign sgn(const TreeAut& sigma, const NodeLabel& y, unsigned m) {
    if (m == 0 || y.level + m > sigma.depth()) throw DomainError("sign index out of range");
    return Sign::from_parity(sign_block_odd(sigma, y.level, y.bits, m));
}

Membership in_group(const TreeAut& sigma, unsigned ell) {
    if (ell < 2) throw DomainError("l must be at least 2");
    const unsigned n = sigma.depth();
    if (n < ell) return {true, Sign::plus()};
    const bool root_odd = sign_block_odd(sigma, 0, 0, ell);
    for (unsigned k = 0; k <= n - ell; ++k) {
        const std::uint64_t width = std::uint64_t{1} << k;
        for (std::uint64_t v = 0; v < width; ++v)
            if (sign_block_odd(sigma, k, v, ell) != root_odd) return {false, Sign::plus()};
    }
    return {true, Sign::from_parity(root_odd)};
}

Sign acts_sign_above(const TreeAut& sigma, const NodeLabel& w, unsigned ell) {
    if (ell < 2) throw DomainError("l must be at least 2");
    if (w.level + ell > sigma.depth()) throw DomainError("node too deep for acts_sign_above");
    const Sign s0 = sgn(sigma, w.child(0), ell - 1);
    const Sign s1 = sgn(sigma, w.child(1), ell - 1);
    if (s0 != s1) throw DomainError("signs above " + w.str() + " disagree; automorphism not in M_l");
    return s0;
}

Parity cousins_parity(const TreeAut& sigma, const NodeLabel& x, unsigned ell, unsigned n) {
    if (ell < 2 || n < ell) throw DomainError("cousins parity needs n >= l >= 2");
    if (x.level + n > sigma.depth()) throw DomainError("node too deep for cousins parity");
    check_membership_m(sigma, ell);
    return cousins_parity_unchecked(sigma, x, ell, n);
}

ParityVector abelianize(const TreeAut& sigma, unsigned ell) {
    check_membership_m(sigma, ell);
    const unsigned n = sigma.depth();
    ParityVector e(n);
    for (unsigned i = 1; i <= n; ++i) {
        if (i < ell)
            e[i - 1] = sgn(sigma, NodeLabel::root(), i);
        else
            e[i - 1] = Sign::from_parity(cousins_parity_unchecked(sigma, NodeLabel::root(), ell, i) ==
                                         Parity::Odd);
    }
    return e;
}

std::uint64_t log2_order_M(unsigned ell, unsigned n) {
    if (n >= 63) throw GuardExceeded("depth too large for an order formula");
    const std::uint64_t full = std::uint64_t{1} << n;
    if (n < ell) return full - 1;
    return full - (std::uint64_t{1} << (n - ell + 1));
}

MEnumerator::MEnumerator(unsigned ell, unsigned n, const Guards& guards) : n_(n) {
    if (ell < 2) throw DomainError("l must be at least 2");
    if (n == 0 || n > TreeAut::max_depth) throw DomainError("bad depth for enumeration");
    if (log2_order_M(ell, n) > guards.max_log2_enumeration)
        throw GuardExceeded("enumeration of 2^" + std::to_string(log2_order_M(ell, n)) +
                            " elements exceeds the guard");
    for (unsigned k = 0; k < n; ++k) {
        const std::uint64_t width = std::uint64_t{1} << k;
        if (k + 1 < ell) {
            for (std::uint64_t v = 0; v < width; ++v) free_.push_back(level_start(k) + v);
            continue;
        }
        const std::uint64_t len = std::uint64_t{1} << (ell - 1);
        for (std::uint64_t first = 0; first < width; first += len) {
            const std::uint64_t base = level_start(k) + first;
            for (std::uint64_t j = 0; j + 1 < len; ++j) free_.push_back(base + j);
            blocks_.push_back({base + len - 1, base, len - 1});
        }
    }
}

std::optional<TreeAut> MEnumerator::next() {
    if (done_) return std::nullopt;
    TreeAut t(n_);
    for (std::size_t i = 0; i < free_.size(); ++i)
        if ((counter_ >> i) & 1u) t.set_bit(free_[i], true);
    for (const auto& b : blocks_)
        if (t.popcount_range(b.first, b.len) & 1u) t.set_bit(b.parity_index, true);
    if (++counter_ == count()) done_ = true;
    return t;
}

std::vector<TreeAut> enumerate_M(unsigned ell, unsigned n, const Guards& guards) {
    MEnumerator e(ell, n, guards);
    std::vector<TreeAut> out;
    out.reserve(e.count());
    while (auto t = e.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<TreeAut> enumerate_aut(unsigned n, const Guards& guards) {
    return enumerate_M(n + 1, n, guards);
}

std::vector<TreeAut> closure(const std::vector<TreeAut>& gens, const Guards& guards) {
    if (gens.empty()) throw DomainError("closure needs at least one generator");
    const unsigned n = gens.front().depth();
    for (const auto& g : gens) require_same_depth(g, gens.front());
    std::unordered_set<TreeAut> seen;
    std::vector<TreeAut> order{identity(n)};
    seen.insert(order.front());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& g : gens) {
            TreeAut h = compose(g, order[i]);
            if (seen.insert(h).second) {
                if (order.size() >= guards.max_closure)
                    throw GuardExceeded("closure exceeds " + std::to_string(guards.max_closure) +
                                        " elements");
                order.push_back(std::move(h));
            }
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

TreeAut restrict_to(const TreeAut& sigma, unsigned m) {
    if (m > sigma.depth()) throw DomainError("cannot restrict to a deeper tree");
    TreeAut out(m);
    for (std::uint64_t i = 0; i < out.size_bits(); ++i)
        if (sigma.bit(i)) out.set_bit(i, true);
    return out;
}

TreeAut extend_to(const TreeAut& sigma, unsigned n) {
    if (n < sigma.depth()) throw DomainError("cannot extend to a shallower tree");
    TreeAut out(n);
    for (std::uint64_t i = 0; i < sigma.size_bits(); ++i)
        if (sigma.bit(i)) out.set_bit(i, true);
    return out;
}

}  // namespace arboreal

std::size_t std::hash<arboreal::TreeAut>::operator()(const arboreal::TreeAut& t) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ t.depth();
    for (std::uint64_t w : t.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}
