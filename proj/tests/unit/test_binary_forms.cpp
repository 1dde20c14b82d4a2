#include <gtest/gtest.h>

#include <random>

#include "arboreal/binary_forms.hpp"

using namespace arboreal;

namespace {

// A root [alpha : beta] stands for the linear factor beta X - alpha Y.
struct Root {
    long alpha, beta;
};

BForm<Rat> from_roots(const std::vector<Root>& roots, long scale = 1) {
    BForm<Rat> p = BForm<Rat>::constant(Rat(scale));
    for (const Root& r : roots) p = p * BForm<Rat>::linear(Rat(r.beta), Rat(-r.alpha));
    return p;
}

Rat oracle_resultant(const std::vector<Root>& p, const std::vector<Root>& q) {
    Rat r = 1;
    for (const Root& a : p)
        for (const Root& b : q) r *= Rat(a.alpha * b.beta - a.beta * b.alpha);
    return r;
}

Rat oracle_discriminant(const std::vector<Root>& p) {
    Rat r = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Rat d(p[i].alpha * p[j].beta - p[j].alpha * p[i].beta);
            r *= d * d;
        }
    return r;
}

std::vector<Root> random_roots(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pick(-6, 6);
    std::vector<Root> out;
    while (out.size() < n) {
        Root r{pick(rng), pick(rng)};
        if (rng() % 6 == 0) r = {1 + static_cast<long>(rng() % 3), 0};  // at infinity
        if (r.alpha != 0 || r.beta != 0) out.push_back(r);
    }
    return out;
}

BForm<Rat> random_form(unsigned m, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pick(-9, 9);
    std::vector<Rat> c;
    for (unsigned i = 0; i <= m; ++i) c.emplace_back(pick(rng));
    return BForm<Rat>(c);
}

}  // namespace

TEST(BinaryForms, ResultantMatchesRootProducts) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_roots(1 + rng() % 4, rng);
        const auto b = random_roots(1 + rng() % 4, rng);
        EXPECT_EQ(resultant(from_roots(a), from_roots(b)), oracle_resultant(a, b));
    }
}

TEST(BinaryForms, DiscriminantMatchesRootProducts) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_roots(2 + rng() % 4, rng);
        EXPECT_EQ(discriminant(from_roots(a)), oracle_discriminant(a));
    }
}

TEST(BinaryForms, ScalingLaws) {
    // Res(cP, Q) = c^{deg Q} Res(P, Q); Delta(cP) = c^{2m-2} Delta(P).
    const std::vector<Root> a{{1, 2}, {3, -1}, {1, 0}};
    const std::vector<Root> b{{0, 1}, {5, 1}};
    EXPECT_EQ(resultant(from_roots(a, 3), from_roots(b)), 9 * oracle_resultant(a, b));
    EXPECT_EQ(discriminant(from_roots(a, 3)), 81 * oracle_discriminant(a));
    EXPECT_EQ(resultant(BForm<Rat>::constant(2), from_roots(b)), Rat(4));
}

TEST(BinaryForms, DifferentialOfSquaring) {
    const FormPair<Rat> sq{BForm<Rat>({1, 0, 0}), BForm<Rat>({0, 0, 1})};
    EXPECT_EQ(homog_differential(sq), BForm<Rat>({0, 2, 0}));  // 2XY
    EXPECT_TRUE(check_DPQ(sq));
}

TEST(BinaryForms, IdentitiesOnRandomPairs) {
    std::mt19937_64 rng(47);
    int tested = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const BForm<Rat> p = random_form(2, rng);
        const BForm<Rat> q = random_form(2, rng);
        if (sgn(resultant(p, q)) == 0) continue;
        const FormPair<Rat> pair{p, q};
        ++tested;
        EXPECT_TRUE(check_DPQ(pair));
        EXPECT_TRUE(check_compres(pair, Rat(2), Rat(-3), Rat(1), Rat(5)));
        EXPECT_TRUE(check_compdisc(random_form(3, rng), pair));
        try {
            EXPECT_TRUE(check_iterdisc(pair, Rat(1), Rat(2), 3));
        } catch (const DegenerateMap&) {
            // repeated critical point; the identity does not apply
        }
    }
    EXPECT_GT(tested, 60);
}

TEST(BinaryForms, PolynomialIterates) {
    EXPECT_TRUE(check_polyiter({Rat(1), Rat(0), Rat(-2)}, Rat(3), 4));
    EXPECT_TRUE(check_polyiter({Rat(2), Rat(1), Rat(0), Rat(-1)}, Rat(1, 2), 2));
}

TEST(BinaryForms, IteratesCompose) {
    const FormPair<Rat> pair{BForm<Rat>({2, 0, -6}), BForm<Rat>({1, 0, 3})};
    const auto [p2, q2] = iterate_pair(pair, 2);
    const auto [p1, q1] = iterate_pair(pair, 1);
    EXPECT_EQ(p1, pair.P());
    EXPECT_EQ(p2, substitute(pair.P(), p1, q1));
    EXPECT_EQ(q2.degree(), 4u);
    IterGuard tight;
    tight.max_degree = 8;
    EXPECT_THROW(iterate_pair(pair, 4, tight), GuardExceeded);
}

TEST(BinaryForms, DegenerateInputs) {
    EXPECT_THROW(FormPair<Rat>(BForm<Rat>({1, -1, 0}), BForm<Rat>({1, 0, -1})), DegenerateMap);
    EXPECT_THROW(FormPair<Rat>(BForm<Rat>({1, 0}), BForm<Rat>({1, 0, 1})), DomainError);
    EXPECT_THROW(discriminant(BForm<Rat>::constant(3)), DomainError);
    EXPECT_THROW(critical_lifts(FormPair<Rat>(BForm<Rat>({1, 0, 0, 0}), BForm<Rat>({0, 0, 0, 1}))),
                 DomainError);
    // Delta(D) = 4 Res(P,Q), so a nondegenerate quadratic never has a repeated critical point.
    const FormPair<Rat> z2{BForm<Rat>({1, 0, 0}), BForm<Rat>({1, 0, 1})};
    const CriticalLifts lifts = critical_lifts(z2);
    EXPECT_FALSE(same_point(lifts.xi1, lifts.xi2));
}

TEST(BinaryForms, ParseAndFormat) {
    const BForm<Rat> p = parse_form("2 1 -3/2 0");
    EXPECT_EQ(p, BForm<Rat>({Rat(1), Rat(-3, 2), Rat(0)}));
    EXPECT_EQ(format_form(p), "2 1 -3/2 0");
    EXPECT_THROW(parse_form("2 1 0"), ParseError);
    EXPECT_THROW(parse_form("x"), ParseError);
}
