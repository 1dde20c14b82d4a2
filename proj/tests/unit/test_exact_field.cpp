#include <gtest/gtest.h>

#include <random>

#include "arboreal/bareiss.hpp"
#include "arboreal/exact_field.hpp"
#include "arboreal/factor.hpp"

using namespace arboreal;

namespace {

// Elements of Q(sqrt d) as 2x2 rational matrices [[a, d b], [b, a]]; the
// field operations become matrix operations.
struct Mat2 {
    Rat m00, m01, m10, m11;
};

Mat2 as_matrix(const QuadElem& x, const Int& d) { return {x.a(), Rat(d) * x.b(), x.b(), x.a()}; }

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11, x.m10 * y.m00 + x.m11 * y.m10,
            x.m10 * y.m01 + x.m11 * y.m11};
}

bool same(const Mat2& x, const Mat2& y) { return x.m00 == y.m00 && x.m01 == y.m01 && x.m10 == y.m10 && x.m11 == y.m11; }

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Rat laplace(const Matrix<Rat>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Rat> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        const Rat term = m[0][j] * laplace(minor);
        total += (j % 2 == 0) ? term : Rat(-term);
    }
    return total;
}

}  // namespace

TEST(ExactField, ArithmeticMatchesMatrixModel) {
    std::mt19937_64 rng(3);
    for (long d : {2L, 3L, -1L, 13L, -7L}) {
        for (int trial = 0; trial < 60; ++trial) {
            const QuadElem x(random_rat(rng), random_rat(rng), Int(d));
            const QuadElem y(random_rat(rng), random_rat(rng), Int(d));
            EXPECT_TRUE(same(as_matrix(x * y, d), mul(as_matrix(x, d), as_matrix(y, d))));
            EXPECT_EQ((x + y) - y, x);
            if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
            EXPECT_EQ((x * x.conj()).a(), x.norm());
            EXPECT_TRUE((x * x.conj()).is_rational());
        }
    }
}

TEST(ExactField, TagsMergeAndConflict) {
    const QuadElem r2 = QuadElem::sqrt_of(2);
    EXPECT_EQ(r2 * r2, QuadElem(2));
    EXPECT_EQ((QuadElem(3) + r2).d(), Int(2));
    EXPECT_THROW(r2 + QuadElem::sqrt_of(3), DomainError);
    EXPECT_THROW(QuadElem(0).inverse(), DomainError);
}

TEST(ExactField, SquaresInQuadraticField) {
    const QuadElem r2 = QuadElem::sqrt_of(2);
    EXPECT_TRUE(is_square_quad(QuadElem(3) + QuadElem(2) * r2));  // (1 + sqrt 2)^2
    EXPECT_FALSE(is_square_quad(QuadElem(1) + r2));
    EXPECT_TRUE(is_square_quad(QuadElem(2).with_tag(2)));
    EXPECT_FALSE(is_square_quad(QuadElem(3).with_tag(2)));
    EXPECT_TRUE(is_square_quad(QuadElem(-13).with_tag(-13)));
}

TEST(ExactField, RationalSquares) {
    EXPECT_TRUE(is_square_Q(Rat(49, 4)));
    EXPECT_FALSE(is_square_Q(Rat(-4)));
    EXPECT_EQ(*sqrt_Q(Rat(9, 16)), Rat(3, 4));
    EXPECT_EQ(squarefree_kernel(Rat(-12, 5)), Int(-15));
    EXPECT_EQ(squarefree_kernel(Rat(18)), Int(2));
    EXPECT_THROW(squarefree_kernel(Rat(0)), DomainError);
}

TEST(ExactField, CrossRatio) {
    const auto p = [](long s) { return make_point(Rat(s), Rat(1)); };
    const auto inf = infinity_point<Rat>();
    // (a-b)(c-d)/((a-c)(b-d)) with a,b,c,d = 2,5,7,11.
    EXPECT_EQ(cross_ratio(p(2), p(5), p(7), p(11)).value, Rat(12) / Rat(30));
    // c at infinity: -(a-b)/(b-d).
    EXPECT_EQ(cross_ratio(p(2), p(5), inf, p(11)).value, Rat(3) / Rat(-6));
    // d at infinity: (a-b)/(a-c).
    EXPECT_EQ(cross_ratio(p(2), p(5), p(7), inf).value, Rat(-3) / Rat(-5));
    EXPECT_TRUE(cross_ratio(p(2), p(5), p(2), p(11)).infinite);
    EXPECT_THROW(cross_ratio(p(2), p(2), p(2), p(11)), Indeterminate);
    EXPECT_THROW(make_point(Rat(0), Rat(0)), DomainError);
}

TEST(ExactField, NormalizePoints) {
    const auto a = normalize(ProjPoint<Rat>{Rat(-4, 3), Rat(-2)});
    EXPECT_EQ(a.s, Rat(2));
    EXPECT_EQ(a.t, Rat(3));
    const auto inf = normalize(ProjPoint<Rat>{Rat(-5), Rat(0)});
    EXPECT_EQ(inf.s, Rat(1));
    EXPECT_TRUE(inf.is_infinity());
}

TEST(ExactField, ParseAndFormat) {
    EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
    EXPECT_EQ(parse_rat(" 7 "), Rat(7));
    EXPECT_THROW(parse_rat("1/0"), ParseError);
    EXPECT_THROW(parse_rat("x"), ParseError);
    EXPECT_THROW(parse_rat("1.5"), ParseError);
    for (const char* s : {"1-1/10*sqrt(2)", "227/387+616/5031*sqrt(13)", "3", "-5/7*sqrt(-3)", "2*sqrt(5)"}) {
        EXPECT_EQ(format_quad(parse_quad(s)), s);
    }
    EXPECT_THROW(parse_quad("1+sqrt(0)"), ParseError);
    EXPECT_THROW(parse_quad("1 2"), ParseError);
    EXPECT_THROW(parse_quad(""), ParseError);
}

TEST(Bareiss, AgreesWithLaplaceExpansion) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            Matrix<Rat> m(n, std::vector<Rat>(n));
            for (auto& row : m)
                for (auto& x : row) x = random_rat(rng);
            EXPECT_EQ(determinant(m), laplace(m));
            Matrix<Int> z(n, std::vector<Int>(n));
            Matrix<Rat> zq(n, std::vector<Rat>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    z[i][j] = Int(static_cast<long>(rng() % 41) - 20);
                    zq[i][j] = Rat(z[i][j]);
                }
            EXPECT_EQ(Rat(bareiss_det(z)), laplace(zq));
        }
}

TEST(Bareiss, SingularAndQuadratic) {
    EXPECT_EQ(determinant(Matrix<Rat>{{1, 2}, {2, 4}}), Rat(0));
    const QuadElem r = QuadElem::sqrt_of(5);
    const Matrix<QuadElem> m{{r, QuadElem(1)}, {QuadElem(1), r}};
    EXPECT_EQ(determinant(m), QuadElem(4));
    EXPECT_THROW(determinant(Matrix<Rat>{{1, 2}}), DomainError);
}

TEST(Factor, ProductsReassemble) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Int n = 1;
        for (int k = 0; k < 4; ++k) n *= Int(static_cast<unsigned long>(rng() % 100000 + 2));
        if (trial % 2) n = -n;
        const auto f = factor(n);
        ASSERT_TRUE(f.complete());
        Int back = 1;
        for (const auto& [p, e] : f.primes) {
            EXPECT_TRUE(is_probable_prime(p));
            for (unsigned i = 0; i < e; ++i) back *= p;
        }
        EXPECT_EQ(back, abs(n));
    }
}

TEST(Factor, LargeSemiprimeWithinBudget) {
    const Int p("1000000007");
    const Int q("998244353");
    const auto f = factor(p * q);
    ASSERT_TRUE(f.complete());
    ASSERT_EQ(f.primes.size(), 2u);
    EXPECT_EQ(f.primes[0].first, q);
    EXPECT_EQ(squarefree_part(Int(-72)), Int(-2));
}

TEST(Factor, BudgetLeavesUnresolvedCofactor) {
    FactorBudget tiny;
    tiny.trial_limit = 100;
    tiny.rho_iterations = 4;
    tiny.rho_attempts = 1;
    const Int p("1000000000000000003");
    const Int q("1000000000000000009");
    const auto f = factor(p * q * 6, tiny);
    EXPECT_FALSE(f.complete());
    ASSERT_EQ(f.unresolved.size(), 1u);
    EXPECT_EQ(f.unresolved[0], p * q);
}
