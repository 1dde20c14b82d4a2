#include "arboreal/factor.hpp"

#include <algorithm>
#include <map>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long cap = 1000000;
        std::vector<bool> composite(cap + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= cap; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= cap; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Int rho(const Int& n, unsigned long c, std::uint64_t max_iter) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int y = 2, x, ys, q = 1, g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1, spent = 0;
    auto step = [&](Int& v) {
        v = v * v + c;
        v %= n;
    };
    do {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        do {
            ys = y;
            const std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                step(y);
                Int diff = x - y;
                q = (q * abs(diff)) % n;
            }
            g = gcd(q, n);
            k += lim;
            spent += lim;
        } while (k < r && g == 1 && spent < max_iter);
        r *= 2;
    } while (g == 1 && spent < max_iter);
    if (g == 1) return 0;
    if (g == n) {
        do {
            step(ys);
            Int diff = x - ys;
            g = gcd(abs(diff), n);
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void split(const Int& n, const FactorBudget& budget, std::map<Int, unsigned>& primes,
           std::vector<Int>& unresolved, unsigned mult) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes[n] += mult;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, budget, primes, unresolved, 2 * mult);
        return;
    }
    for (unsigned a = 0; a < budget.rho_attempts; ++a) {
        Int g = rho(n, 1 + 2 * a, budget.rho_iterations);
        if (g != 0) {
            Int h = n / g;
            split(g, budget, primes, unresolved, mult);
            split(h, budget, primes, unresolved, mult);
            return;
        }
    }
    for (unsigned i = 0; i < mult; ++i) unresolved.push_back(n);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

PartialFactorization factor(const Int& n0, const FactorBudget& budget) {
    if (n0 == 0) throw DomainError("cannot factor zero");
    Int n = abs(n0);
    std::map<Int, unsigned> found;
    for (unsigned long p : small_primes()) {
        if (p > budget.trial_limit) break;
        if (Int(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            found[Int(p)] += e;
        }
    }
    std::vector<Int> unresolved;
    split(n, budget, found, unresolved, 1);
    // A resisting cofactor may still be divisible by a prime found elsewhere.
    std::vector<Int> rest;
    for (Int u : unresolved) {
        for (auto& [p, e] : found) {
            unsigned long k = mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
            e += static_cast<unsigned>(k);
        }
        if (u != 1) rest.push_back(u);
    }
    std::sort(rest.begin(), rest.end());
    PartialFactorization out;
    for (auto& [p, e] : found) out.primes.emplace_back(p, e);
    out.unresolved = std::move(rest);
    return out;
}

Int squarefree_part(const Int& n, const FactorBudget& budget) {
    auto f = factor(n, budget);
    if (!f.complete()) throw GuardExceeded("could not factor " + n.get_str() + " within budget");
    Int s = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : f.primes)
        if (e & 1u) s *= p;
    return s;
}

}  // namespace arboreal
