#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arboreal/exact_field.hpp"

namespace arboreal {

// Image of a nonzero rational in Q^x / (Q^x)^2: a sign bit and the support
// elements (primes, or pairwise coprime composites that resisted factoring)
// occurring to an odd power. Sorted ascending.
struct SquareClassVec {
    bool negative = false;
    std::vector<Int> odd;

    bool is_zero() const { return !negative && odd.empty(); }
    friend bool operator==(const SquareClassVec&, const SquareClassVec&) = default;
};

SquareClassVec operator^(const SquareClassVec& x, const SquareClassVec& y);

SquareClassVec square_class(const Rat& x, const FactorBudget& budget = {});

// Classes over one shared coprime support, valid even when some values do not
// factor completely within the budget.
std::vector<SquareClassVec> square_classes(const std::vector<Rat>& xs,
                                           const FactorBudget& budget = {});

// Dense F2 vectors over the union of supports; bit 0 is the sign.
using F2Vec = std::vector<std::uint64_t>;
std::vector<F2Vec> to_f2(const std::vector<SquareClassVec>& vs);

// Lexicographically smallest nonempty index set (ascending, 0-based) whose
// vectors sum to zero, or nullopt when the vectors are independent.
std::optional<std::vector<std::size_t>> dependent_subset(const std::vector<F2Vec>& vs);
std::optional<std::vector<std::size_t>> dependent_subset(const std::vector<SquareClassVec>& vs);

// Basis of the null space of the map e -> sum e_i v_i, each as a subset mask
// over the input indices (bit i of mask word i/64).
std::vector<F2Vec> kernel_basis(const std::vector<F2Vec>& vs);

// Lexicographic order on index subsets encoded as masks: a < b.
bool mask_less(const F2Vec& a, const F2Vec& b);
std::vector<std::size_t> mask_indices(const F2Vec& mask);

}  // namespace arboreal
