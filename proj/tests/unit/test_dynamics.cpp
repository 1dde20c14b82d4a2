#include <gtest/gtest.h>

#include "arboreal/dynamics.hpp"

using namespace arboreal;

namespace {

ProjPoint<Rat> pt(long s, long t = 1) { return {Rat(s), Rat(t)}; }

QuadMap map_of(std::vector<Rat> p, std::vector<Rat> q) { return build_map(p, q); }

std::vector<std::string> kappa_strings(const QuadMap& f0, const ProjPoint<Rat>& x0, unsigned N) {
    QuadMap f = f0;
    const auto coll = detect_collision(f);
    EXPECT_TRUE(coll.has_value());
    std::vector<std::string> out;
    for (const auto& k : kappa_list(f, *coll, x0, N).kappa) out.push_back(format_quad(k.value));
    return out;
}

// f^n(p) through the forms of the n-th iterate.
ProjPoint<Rat> iterate_point(const FormPair<Rat>& pair, const ProjPoint<Rat>& p, unsigned n) {
    const auto [pn, qn] = iterate_pair(pair, n);
    return normalize(ProjPoint<Rat>{pn.eval(p.s, p.t), qn.eval(p.s, p.t)});
}

// Product over the 2^{n-1} sign pairs of preimages of w, squared, from the
// coefficients of P_n - w Q_n, then solved for q_n.
Rat oracle_q(const Rat& A, const Rat& B, const Rat& C, unsigned n, const Rat& w) {
    const FormPair<Rat> pair{BForm<Rat>({A, 0, B}), BForm<Rat>({1, 0, C})};
    const auto [pn, qn] = iterate_pair(pair, n);
    const BForm<Rat> h = pn - w * qn;
    Rat prod = h.coeffs().back() / h.coeffs().front();
    if (n == 1) prod = -prod;
    const auto f0 = iterate_point(pair, pt(0), n);
    const auto finf = iterate_point(pair, pt(1, 0), n);
    const auto gap = [&](const ProjPoint<Rat>& x) { return Rat(w - affine(x)); };
    return prod * gap(finf) / gap(f0);
}

}  // namespace

TEST(Dynamics, OrbitOfSquaring) {
    const QuadMap f = map_of({1, 0, 0}, {0, 0, 1});
    const auto orbit = forward_orbit(f, pt(2), 3);
    ASSERT_EQ(orbit.size(), 4u);
    EXPECT_EQ(orbit[3].s, Rat(256));
    EXPECT_EQ(orbit[1].s, Rat(4));
    QuadMap g = f;
    EXPECT_FALSE(detect_collision(g).has_value());
    EXPECT_THROW(normal_form(f), DegenerateMap);
}

TEST(Dynamics, OrbitGuard) {
    const QuadMap f = map_of({1, 0, 0}, {0, 0, 1});
    OrbitGuard small;
    small.max_bits = 64;
    EXPECT_THROW(forward_orbit(f, pt(3), 10, small), GuardExceeded);
}

TEST(Dynamics, DegenerateMaps) {
    EXPECT_THROW(map_of({1, 0, -1}, {1, 1, 0}), DegenerateMap);
    EXPECT_THROW(map_of({1, 0, 0, 1}, {0, 0, 0, 1}), DomainError);
}

TEST(Dynamics, CriticalPointOrder) {
    // Critical points of (2z^2 - 6)/(z^2 + 3) are 0 and infinity: finite first.
    const QuadMap f = map_of({2, 0, -6}, {1, 0, 3});
    EXPECT_FALSE(f.crit.xi1.is_infinity());
    EXPECT_TRUE(f.crit.xi2.is_infinity());
    EXPECT_TRUE(f.delta_square());
    const QuadMap g = map_of({-2, -2, -2}, {1, -2, 2});
    EXPECT_EQ(g.crit.delta, Int(13));
    EXPECT_EQ(g.crit.xi1.s.conj(), g.crit.xi2.s);
    EXPECT_LT(g.crit.xi1.s.b(), g.crit.xi2.s.b());
}

TEST(Dynamics, CollisionLevels) {
    QuadMap g1 = map_of({2, 0, -6}, {1, 0, 3});
    EXPECT_EQ(detect_collision(g1)->ell, 2u);
    QuadMap l3 = map_of({0, 0, 4}, {1, 0, -2});
    EXPECT_EQ(detect_collision(l3)->ell, 3u);
    QuadMap ns3 = map_of({-2, -2, -2}, {1, -2, 2});
    EXPECT_EQ(detect_collision(ns3)->ell, 3u);
    EXPECT_THROW(detect_collision(g1, 0), DomainError);
}

TEST(Dynamics, NormalForm) {
    const QuadMap f = map_of({2, 0, -6}, {1, 0, 3});
    const NormalForm nf = normal_form(f);
    EXPECT_EQ(nf.A, Rat(2));
    EXPECT_EQ(nf.B, Rat(-6));
    EXPECT_EQ(nf.C, Rat(3));
    // h = mu f mu^{-1}, then nu^{-1} h nu is the normal form of h.
    const std::array<Rat, 4> mu{Rat(1), Rat(1), Rat(-1), Rat(2)};
    const QuadMap h = conjugate(f, mu);
    const NormalForm nh = normal_form(h);
    const std::array<Rat, 4> nu{Rat(nh.nu[0]), Rat(nh.nu[1]), Rat(nh.nu[2]), Rat(nh.nu[3])};
    const QuadMap n = normal_form_map(nh.A, nh.B, nh.C);
    for (long z : {-3L, 0L, 1L, 4L}) {
        EXPECT_TRUE(same_point(apply_map(h, apply_mobius(mu, pt(z))), apply_mobius(mu, apply_map(f, pt(z)))));
        EXPECT_TRUE(same_point(apply_mobius(nu, apply_map(n, pt(z))), apply_map(h, apply_mobius(nu, pt(z)))));
        EXPECT_TRUE(same_point(to_normal_coords(nh, apply_mobius(nu, pt(z))), pt(z)));
    }
}

TEST(Dynamics, IteratedDiscriminantRecursion) {
    const QuadMap f = map_of({2, 0, -6}, {1, 0, 3});
    for (unsigned n = 1; n <= 4; ++n) {
        const auto [pn, qn] = iterate_pair(f.pair, n);
        EXPECT_EQ(iterated_discriminant(f, pt(3), n), discriminant(pn - Rat(3) * qn)) << n;
    }
}

TEST(Dynamics, FrozenKappaValues) {
    EXPECT_EQ(kappa_strings(map_of({2, 0, -6}, {1, 0, 3}), pt(3), 6),
              (std::vector<std::string>{"-60", "-180/19", "931/739", "16849939/20766739",
                                        "9561065800039411/7732128824474611",
                                        "1586410561826201019702510126194611/1987674108634701631050092787621811"}));
    EXPECT_EQ(kappa_strings(map_of({1, 0, -2}, {1, 0, 2}), pt(3), 6),
              (std::vector<std::string>{"-64", "-32/5", "45/37", "13357/15597", "1771335693/1543626253",
                                        "1638231582105516481/1837461003497777601"}));
    EXPECT_EQ(kappa_strings(map_of({0, 0, 4}, {1, 0, -2}), pt(1), 5),
              (std::vector<std::string>{"24", "113246208", "-3", "1", "1"}));
    EXPECT_EQ(kappa_strings(map_of({-2, -2, -1}, {-2, 0, -1}), pt(2), 4),
              (std::vector<std::string>{"-4", "131072", "1-1/10*sqrt(2)", "3201/3185+16/637*sqrt(2)"}));
    EXPECT_EQ(kappa_strings(map_of({-2, -2, -2}, {1, -2, 2}), pt(1), 5),
              (std::vector<std::string>{"-48", "79046443008",
                                        "1406613452166660609436717809028325631529524073070592",
                                        "227/387+616/5031*sqrt(13)", "274/247-108/3211*sqrt(13)"}));
}

TEST(Dynamics, KappaKindsAndFlags) {
    QuadMap f = map_of({2, 0, -6}, {1, 0, 3});
    const auto coll = *detect_collision(f);
    const auto k = kappa_list(f, coll, pt(3), 4).kappa;
    EXPECT_EQ(k[0].kind, KappaKind::Discriminant);
    EXPECT_EQ(k[1].kind, KappaKind::EllDiffDiscriminant);
    EXPECT_EQ(k[2].kind, KappaKind::CrossRatio);
    // x0 = 2 = f(infinity) lies in a critical orbit.
    const auto hit = kappa_list(f, coll, pt(2), 4);
    EXPECT_TRUE(hit.x0_in_critical_orbit);
    EXPECT_EQ(hit.kappa[0].flag, KappaFlag::Zero);
    EXPECT_EQ(to_string(KappaFlag::InfinityRule), "infinity");
    QuadMap l3 = map_of({0, 0, 4}, {1, 0, -2});
    const auto c3 = *detect_collision(l3);
    EXPECT_EQ(kappa_list(l3, c3, pt(1), 3).kappa[2].kind, KappaKind::EllCrossRatios);
}

TEST(Dynamics, CoordinateChangeScalesKappaBySquares) {
    struct Case {
        std::vector<Rat> p, q;
        long x0;
        unsigned N;
    };
    const std::vector<Case> cases{{{2, 0, -6}, {1, 0, 3}, 3, 5},
                                  {{0, 0, 4}, {1, 0, -2}, 1, 5},
                                  {{-2, -2, -2}, {1, -2, 2}, 1, 5}};
    // z -> 3z/2 keeps the critical-point order, so entries correspond one to one.
    const std::array<Rat, 4> nu{Rat(3), Rat(0), Rat(0), Rat(2)};
    for (const auto& c : cases) {
        QuadMap f = build_map(c.p, c.q);
        const auto cf = *detect_collision(f);
        const auto base = kappa_list(f, cf, pt(c.x0), c.N).kappa;
        QuadMap g = conjugate(f, nu);
        const auto cg = *detect_collision(g);
        const auto moved = kappa_list(g, cg, apply_mobius(nu, pt(c.x0)), c.N).kappa;
        // Scaling the lift of f changes H_n but not its square class.
        std::vector<Rat> p5, q5;
        for (const auto& x : c.p) p5.push_back(5 * x);
        for (const auto& x : c.q) q5.push_back(5 * x);
        QuadMap s = build_map(p5, q5);
        const auto cs = *detect_collision(s);
        const auto scaled = kappa_list(s, cs, pt(c.x0), c.N).kappa;
        for (unsigned i = 0; i < c.N; ++i) {
            const QuadElem r = moved[i].value / base[i].value;
            ASSERT_TRUE(r.is_rational()) << i;
            EXPECT_TRUE(is_square_Q(r.a())) << "kappa_" << i + 1 << " ratio " << format_quad(r);
            const QuadElem t = scaled[i].value / base[i].value;
            ASSERT_TRUE(t.is_rational());
            EXPECT_TRUE(is_square_Q(t.a())) << "kappa_" << i + 1;
        }
    }
}

TEST(Dynamics, QnMatchesPreimageProducts) {
    const std::vector<std::array<Rat, 3>> forms{{2, -6, 3}, {1, -2, 2}, {0, 4, -2}, {Rat(1, 2), 3, -5}};
    for (const auto& [A, B, C] : forms)
        for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(q_n(A, B, C, n), oracle_q(A, B, C, n, Rat(7, 3))) << n;
}

TEST(Dynamics, QAndRValuesNeedCollision) {
    EXPECT_EQ(q_value(2, -6, 3, 2), q_n(2, -6, 3, 1));
    EXPECT_EQ(q_n(2, -6, 3, 1), Rat(-3));
    EXPECT_THROW(q_value(1, 1, 5, 2), DomainError);
    EXPECT_THROW(r_value(2, -6, 3, 2, 2), DomainError);
    EXPECT_NO_THROW(r_value(2, -6, 3, 4, 2));
}
