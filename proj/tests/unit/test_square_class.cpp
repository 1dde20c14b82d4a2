#include <gtest/gtest.h>

#include <random>

#include "arboreal/square_class.hpp"

using namespace arboreal;

namespace {

// Lexicographically first square subset by brute force over all subsets.
std::optional<std::vector<std::size_t>> brute_force(const std::vector<Rat>& xs) {
    std::optional<std::vector<std::size_t>> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << xs.size()); ++mask) {
        Rat prod = 1;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if ((mask >> i) & 1u) {
                prod *= xs[i];
                idx.push_back(i);
            }
        if (is_square_Q(prod) && (!best || idx < *best)) best = idx;
    }
    return best;
}

}  // namespace

TEST(SquareClass, ClassesOfSmallValues) {
    const auto c = square_class(Rat(-50, 3));
    EXPECT_TRUE(c.negative);
    EXPECT_EQ(c.odd, (std::vector<Int>{2, 3}));
    EXPECT_TRUE(square_class(Rat(49, 25)).is_zero());
    EXPECT_EQ(square_class(Rat(6)) ^ square_class(Rat(10)), square_class(Rat(15)));
}

TEST(SquareClass, SharedSupportWithoutFullFactoring) {
    FactorBudget tiny;
    tiny.trial_limit = 50;
    tiny.rho_iterations = 2;
    tiny.rho_attempts = 1;
    const Int p("1000000000000000003");
    const Int q("1000000000000000009");
    const std::vector<Rat> xs{Rat(p * q), Rat(p * 7), Rat(q * 7)};
    const auto cls = square_classes(xs, tiny);
    EXPECT_EQ(cls[0] ^ cls[1] ^ cls[2], SquareClassVec{});
    const auto dep = dependent_subset(cls);
    ASSERT_TRUE(dep);
    EXPECT_EQ(*dep, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SquareClass, DependentSubsetMatchesBruteForce) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> pick(-40, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> xs;
        const std::size_t n = 1 + rng() % 7;
        while (xs.size() < n) {
            const long v = pick(rng);
            if (v != 0) xs.emplace_back(v, 1 + static_cast<long>(rng() % 5));
        }
        for (auto& x : xs) x.canonicalize();
        EXPECT_EQ(dependent_subset(square_classes(xs)), brute_force(xs));
    }
}

TEST(SquareClass, KernelBasisSpansRelations) {
    const std::vector<Rat> xs{2, 3, 6, 5, 30};
    const auto vs = to_f2(square_classes(xs));
    const auto ker = kernel_basis(vs);
    EXPECT_EQ(ker.size(), 2u);
    for (const auto& mask : ker) {
        Rat prod = 1;
        for (std::size_t i : mask_indices(mask)) prod *= xs[i];
        EXPECT_TRUE(is_square_Q(prod));
    }
}

TEST(SquareClass, MaskOrderIsLexicographic) {
    const F2Vec a{0b011};  // {0,1}
    const F2Vec b{0b101};  // {0,2}
    const F2Vec c{0b100};  // {2}
    EXPECT_TRUE(mask_less(a, b));
    EXPECT_TRUE(mask_less(b, c));
    EXPECT_FALSE(mask_less(c, a));
}
