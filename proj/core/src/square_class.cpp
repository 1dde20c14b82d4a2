#include "arboreal/square_class.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>

namespace arboreal {

namespace {

// Replace a multiset of integers > 1 by a pairwise coprime one generating the
// same multiplicative monoid content.
std::vector<Int> coprime_base(std::vector<Int> s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < s.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < s.size() && !changed; ++j) {
                Int g = gcd(s[i], s[j]);
                if (g == 1) continue;
                changed = true;
                if (s[i] == s[j]) {
                    s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
                    break;
                }
                Int a = s[i] / g;
                Int b = s[j] / g;
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                for (Int* v : {&a, &b, &g})
                    if (*v != 1) s.push_back(*v);
            }
        }
    }
    for (Int& v : s)
        while (mpz_perfect_square_p(v.get_mpz_t())) mpz_sqrt(v.get_mpz_t(), v.get_mpz_t());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool test_bit(const F2Vec& v, std::size_t i) { return i / 64 < v.size() && ((v[i / 64] >> (i % 64)) & 1u); }

void set_bit(F2Vec& v, std::size_t i) {
    if (v.size() <= i / 64) v.resize(i / 64 + 1, 0);
    v[i / 64] ^= std::uint64_t{1} << (i % 64);
}

void xor_into(F2Vec& a, const F2Vec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
}

bool all_zero(const F2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> lowest_bit(const F2Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
    return std::nullopt;
}

std::optional<std::size_t> highest_bit(const F2Vec& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[i]));
    return std::nullopt;
}

// Echelon basis keyed by pivot (lowest set bit).
class Span {
public:
    // Reduces v in place; returns true when v lies in the span.
    bool reduce(F2Vec& v) const {
        while (auto p = lowest_bit(v)) {
            auto it = rows_.find(*p);
            if (it == rows_.end()) return false;
            xor_into(v, it->second);
        }
        return true;
    }
    bool contains(F2Vec v) const { return reduce(v); }
    void insert(F2Vec v) {
        if (!reduce(v)) rows_.emplace(*lowest_bit(v), std::move(v));
    }

private:
    std::map<std::size_t, F2Vec> rows_;
};

}  // namespace

SquareClassVec operator^(const SquareClassVec& x, const SquareClassVec& y) {
    SquareClassVec r;
    r.negative = x.negative != y.negative;
    std::set_symmetric_difference(x.odd.begin(), x.odd.end(), y.odd.begin(), y.odd.end(),
                                  std::back_inserter(r.odd));
    return r;
}

std::vector<SquareClassVec> square_classes(const std::vector<Rat>& xs, const FactorBudget& budget) {
    std::vector<Int> primes;
    std::vector<Int> stubborn;
    for (const Rat& x : xs) {
        if (sgn(x) == 0) throw DomainError("square class of zero");
        for (const Int& part : {Int(abs(x.get_num())), Int(x.get_den())}) {
            if (part == 1) continue;
            auto f = factor(part, budget);
            for (auto& [p, e] : f.primes) primes.push_back(p);
            for (auto& u : f.unresolved) stubborn.push_back(u);
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Int> rest;
    for (Int u : stubborn) {
        for (const Int& p : primes) mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        if (u != 1) rest.push_back(u);
    }
    std::vector<Int> support = primes;
    for (Int& c : coprime_base(std::move(rest))) support.push_back(std::move(c));
    std::sort(support.begin(), support.end());

    std::vector<SquareClassVec> out;
    out.reserve(xs.size());
    for (const Rat& x : xs) {
        SquareClassVec v;
        v.negative = sgn(x) < 0;
        Int num = abs(x.get_num());
        Int den = x.get_den();
        for (const Int& g : support) {
            const unsigned long e = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t()) +
                                    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
            if (e & 1u) v.odd.push_back(g);
        }
        if (num != 1 || den != 1) throw InternalError("square class support does not cover " + x.get_str());
        out.push_back(std::move(v));
    }
    return out;
}

SquareClassVec square_class(const Rat& x, const FactorBudget& budget) {
    return square_classes({x}, budget).front();
}

std::vector<F2Vec> to_f2(const std::vector<SquareClassVec>& vs) {
    std::vector<Int> cols;
    for (const auto& v : vs) cols.insert(cols.end(), v.odd.begin(), v.odd.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<F2Vec> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
        F2Vec row((cols.size() + 1 + 63) / 64, 0);
        if (v.negative) set_bit(row, 0);
        for (const Int& p : v.odd) {
            auto it = std::lower_bound(cols.begin(), cols.end(), p);
            set_bit(row, 1 + static_cast<std::size_t>(it - cols.begin()));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<std::vector<std::size_t>> dependent_subset(const std::vector<F2Vec>& vs) {
    const std::size_t n = vs.size();
    // suffix[j] spans vs[j..n-1]
    std::vector<Span> suffix(n + 1);
    for (std::size_t j = n; j-- > 0;) {
        suffix[j] = suffix[j + 1];
        suffix[j].insert(vs[j]);
    }
    std::vector<std::size_t> chosen;
    F2Vec sum;
    std::size_t start = 0;
    while (chosen.empty() || !all_zero(sum)) {
        bool found = false;
        for (std::size_t j = start; j < n; ++j) {
            F2Vec t = sum;
            xor_into(t, vs[j]);
            if (suffix[j + 1].contains(t)) {
                chosen.push_back(j);
                sum = std::move(t);
                start = j + 1;
                found = true;
                break;
            }
        }
        if (!found) {
            if (!chosen.empty()) throw InternalError("dependent subset search lost its invariant");
            return std::nullopt;
        }
    }
    return chosen;
}

std::optional<std::vector<std::size_t>> dependent_subset(const std::vector<SquareClassVec>& vs) {
    return dependent_subset(to_f2(vs));
}

std::vector<F2Vec> kernel_basis(const std::vector<F2Vec>& vs) {
    struct Row {
        F2Vec v;
        F2Vec mask;
    };
    std::map<std::size_t, Row> pivots;
    std::vector<F2Vec> kernel;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Row r{vs[i], {}};
        set_bit(r.mask, i);
        while (auto p = lowest_bit(r.v)) {
            auto it = pivots.find(*p);
            if (it == pivots.end()) break;
            xor_into(r.v, it->second.v);
            xor_into(r.mask, it->second.mask);
        }
        if (auto p = lowest_bit(r.v))
            pivots.emplace(*p, std::move(r));
        else
            kernel.push_back(std::move(r.mask));
    }
    return kernel;
}

bool mask_less(const F2Vec& a, const F2Vec& b) {
    F2Vec diff = a;
    xor_into(diff, b);
    const auto i = lowest_bit(diff);
    if (!i) return false;
    auto has_above = [&](const F2Vec& v) {
        auto h = highest_bit(v);
        return h && *h > *i;
    };
    if (test_bit(a, *i)) return has_above(b);
    return !has_above(a);
}

std::vector<std::size_t> mask_indices(const F2Vec& mask) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < mask.size(); ++w)
        for (std::uint64_t x = mask[w]; x; x &= x - 1)
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    return out;
}

}  // namespace arboreal
