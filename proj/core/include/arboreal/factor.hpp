#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace arboreal {

using Int = mpz_class;

struct FactorBudget {
    unsigned long trial_limit = 1000000;
    std::uint64_t rho_iterations = 1u << 18;  // per rho attempt
    unsigned rho_attempts = 4;
};

// Prime powers found, plus composite cofactors that resisted the budget.
struct PartialFactorization {
    std::vector<std::pair<Int, unsigned>> primes;  // ascending, distinct
    std::vector<Int> unresolved;                   // each > 1, composite, not a perfect square

    bool complete() const { return unresolved.empty(); }
};

bool is_probable_prime(const Int& n);

// Factor |n| (n != 0). Reentrant; no shared state.
PartialFactorization factor(const Int& n, const FactorBudget& budget = {});

// Squarefree s with n = s * k^2; requires a complete factorization of n.
Int squarefree_part(const Int& n, const FactorBudget& budget = {});

}  // namespace arboreal
