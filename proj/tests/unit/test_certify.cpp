#include <gtest/gtest.h>

#include "arboreal/certify.hpp"
#include "arboreal/map_io.hpp"

using namespace arboreal;

namespace {

ProjPoint<Rat> pt(long s, long t = 1) { return {Rat(s), Rat(t)}; }

QuadMap map_of(std::vector<Rat> p, std::vector<Rat> q) { return build_map(p, q); }

}  // namespace

TEST(Subsets, RationalWitness) {
    const auto r = subset_square_search(std::vector<Rat>{2, 3, 6});
    EXPECT_EQ(r.analysis, Analysis::Witness);
    EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(subset_square_search(std::vector<Rat>{2, 3, 5}).analysis, Analysis::Independent);
    EXPECT_EQ(subset_square_search(std::vector<Rat>{-1, 9}).witness, (std::vector<std::size_t>{1}));
}

TEST(Subsets, QuadraticWitness) {
    const QuadElem r2 = QuadElem::sqrt_of(2);
    const auto r = subset_square_search({QuadElem(3) + QuadElem(2) * r2, QuadElem(5).with_tag(2)}, 2);
    EXPECT_EQ(r.analysis, Analysis::Witness);
    EXPECT_EQ(r.witness, (std::vector<std::size_t>{0}));
    // 1 + sqrt 2 has norm -1: not a square, and neither is its product with 3.
    const auto none = subset_square_search({QuadElem(1) + r2, QuadElem(3).with_tag(2)}, 2);
    EXPECT_EQ(none.analysis, Analysis::Independent);
    // (1 + sqrt 2) * (1 + sqrt 2) is a square even though neither factor is.
    const auto pair = subset_square_search({QuadElem(1) + r2, QuadElem(7).with_tag(2), QuadElem(1) + r2}, 2);
    EXPECT_EQ(pair.witness, (std::vector<std::size_t>{0, 2}));
}

TEST(Subsets, LimitGivesInconclusive) {
    SearchLimits tight;
    tight.max_log2_candidates = 1;
    std::vector<QuadElem> xs{QuadElem(2).with_tag(2), QuadElem(3).with_tag(2), QuadElem(6).with_tag(2),
                             QuadElem(5).with_tag(2), QuadElem(10).with_tag(2)};
    // Norm classes are all squares, so the kernel has dimension 5.
    EXPECT_EQ(subset_square_search(xs, 2, tight).analysis, Analysis::Inconclusive);
}

TEST(Certify, FrozenVerdicts) {
    const auto full = certify_max(map_of({2, 0, -6}, {1, 0, 3}), pt(3), 6);
    EXPECT_EQ(full.verdict, Verdict::FullM);
    EXPECT_EQ(exit_code(full.verdict), 0);
    const auto split = certify_max(map_of({2, 0, -6}, {1, 0, 3}), pt(1), 6);
    EXPECT_EQ(split.verdict, Verdict::NotFull);
    EXPECT_EQ(split.witness, (std::vector<std::size_t>{1}));
    EXPECT_TRUE(witness_is_square(split));
    const auto l3 = certify_max(map_of({0, 0, 4}, {1, 0, -2}), pt(1), 5);
    EXPECT_EQ(l3.verdict, Verdict::NotFull);
    EXPECT_EQ(l3.witness, (std::vector<std::size_t>{4}));
    EXPECT_EQ(certify_max(map_of({-2, -2, -1}, {-2, 0, -1}), pt(2), 5).verdict, Verdict::FullMtilde);
    const auto ns2 = certify_max(map_of({-2, -2, -1}, {-2, 0, -1}), pt(3), 5);
    EXPECT_EQ(ns2.verdict, Verdict::NotFull);
    EXPECT_TRUE(witness_is_square(ns2));
    EXPECT_EQ(certify_max(map_of({-2, -2, -2}, {1, -2, 2}), pt(1), 5).verdict, Verdict::FullMtilde);
}

TEST(Certify, CriticalHitAndShortTowers) {
    const QuadMap f = map_of({2, 0, -6}, {1, 0, 3});
    const auto hit = certify_max(f, pt(2), 4);
    EXPECT_EQ(hit.verdict, Verdict::DegenerateCriticalHit);
    EXPECT_EQ(hit.analysis, Analysis::Degenerate);
    EXPECT_EQ(exit_code(hit.verdict), 4);
    // Below the collision level only discriminants enter.
    EXPECT_EQ(certify_max(f, pt(3), 1).verdict, Verdict::FullM);
    EXPECT_THROW(certify_max(map_of({1, 0, 0}, {0, 0, 1}), pt(3), 3), DomainError);
}

TEST(Certify, SerializationRoundTrip) {
    for (long x0 : {1L, 3L}) {
        const auto c = certify_max(map_of({-2, -2, -1}, {-2, 0, -1}), pt(x0), 5);
        const std::string text = serialize(c);
        EXPECT_EQ(serialize(parse_certificate(text)), text);
    }
    const std::string text = serialize(certify_max(map_of({2, 0, -6}, {1, 0, 3}), pt(1), 4));
    EXPECT_NE(text.find("verdict: NotFull"), std::string::npos);
    EXPECT_THROW(parse_certificate("nonsense"), ParseError);
    EXPECT_THROW(parse_certificate(text + "verdict: FullM\n"), ParseError);
}

TEST(MapIo, ParseAndFormat) {
    const MapSpec spec = parse_map_spec("# comment\nP: 2 0 -6\n\nQ: 1 0 3\nx0: 3 1\n");
    EXPECT_EQ(spec.P, BForm<Rat>({2, 0, -6}));
    ASSERT_TRUE(spec.x0);
    EXPECT_EQ(spec.x0->s, Rat(3));
    EXPECT_EQ(parse_map_spec(format_map_spec(spec)).Q, spec.Q);
    EXPECT_THROW(parse_map_spec("P: 1 0 0\n"), ParseError);
    EXPECT_THROW(parse_map_spec("P: 1 0 0\nQ: 0 0 1\nR: 1\n"), ParseError);
    EXPECT_THROW(parse_map_spec("P: 1 0\nQ: 0 0 1\n"), ParseError);
}
