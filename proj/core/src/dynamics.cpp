#include "arboreal/dynamics.hpp"

#include <algorithm>
#include <utility>

namespace arboreal {

namespace {

std::size_t bits(const Rat& x) {
    return std::max(mpz_sizeinbase(x.get_num_mpz_t(), 2), mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

void guard_point(const ProjPoint<Rat>& p, const OrbitGuard& g) {
    if (std::max(bits(p.s), bits(p.t)) > g.max_bits) throw GuardExceeded("orbit height exceeds the guard");
}

void guard_point(const ProjPoint<QuadElem>& p, const OrbitGuard& g) {
    if (std::max({bits(p.s.a()), bits(p.s.b()), bits(p.t.a()), bits(p.t.b())}) > g.max_bits)
        throw GuardExceeded("orbit height exceeds the guard");
}

Rat rational_part(const QuadElem& x) {
    if (!x.is_rational()) throw DomainError("expected a rational value, got " + format_quad(x));
    return x.a();
}

ProjPoint<Rat> rational_point(const ProjPoint<QuadElem>& p) {
    return normalize(ProjPoint<Rat>{rational_part(p.s), rational_part(p.t)});
}

void order_critical_points(CriticalLifts& c) {
    bool swap = false;
    if (c.delta != 1) {
        const Rat b1 = normalize(c.xi1).s.b();
        const Rat b2 = normalize(c.xi2).s.b();
        swap = b2 < b1;
    } else if (c.xi1.is_infinity()) {
        swap = true;
    } else if (!c.xi2.is_infinity()) {
        swap = affine(c.xi2).a() < affine(c.xi1).a();
    }
    if (swap) std::swap(c.xi1, c.xi2);
}

// p = q up to a nonzero scalar?
template <class F>
bool in_orbit_prefix(const std::vector<ProjPoint<F>>& orbit, const ProjPoint<F>& q) {
    for (std::size_t k = 1; k < orbit.size(); ++k)
        if (same_point(orbit[k], q)) return true;
    return false;
}

Rat finite_value(const ProjPoint<Rat>& p) {
    if (p.is_infinity()) throw InternalError("critical orbit reaches infinity");
    return p.s / p.t;
}

struct NormalOrbits {
    std::vector<Rat> zero;  // f^i(0)
    std::vector<Rat> inf;   // f^i(inf), index 0 unused
};

NormalOrbits normal_orbits(const Rat& A, const Rat& B, const Rat& C, unsigned n) {
    const QuadMap f = normal_form_map(A, B, C);
    const auto o0 = forward_orbit(f, ProjPoint<Rat>{Rat(0), Rat(1)}, n);
    const auto oi = forward_orbit(f, ProjPoint<Rat>{Rat(1), Rat(0)}, n);
    NormalOrbits out;
    for (unsigned i = 0; i <= n; ++i) {
        out.zero.push_back(finite_value(o0[i]));
        out.inf.push_back(i == 0 ? Rat(0) : finite_value(oi[i]));
    }
    return out;
}

void require_normal_collision(const Rat& A, const Rat& B, const Rat& C, unsigned ell) {
    if (ell < 2) throw DomainError("collision level must be at least 2");
    const QuadMap f = normal_form_map(A, B, C);
    const auto o0 = forward_orbit(f, ProjPoint<Rat>{Rat(0), Rat(1)}, ell);
    const auto oi = forward_orbit(f, ProjPoint<Rat>{Rat(1), Rat(0)}, ell);
    if (!same_point(o0[ell], oi[ell]) || same_point(o0[ell - 1], oi[ell - 1]))
        throw DomainError("0 and infinity do not collide at iterate " + std::to_string(ell));
}

Rat ratio(const Rat& num, const Rat& den) {
    if (sgn(den) == 0) throw InternalError("vanishing denominator in an orbit ratio");
    return num / den;
}

struct CrValue {
    QuadElem value;
    bool infinite = false;
    bool indeterminate = false;
};

CrValue cr(const ProjPoint<QuadElem>& a, const ProjPoint<QuadElem>& b, const ProjPoint<QuadElem>& c,
           const ProjPoint<QuadElem>& e) {
    try {
        auto r = cross_ratio(a, b, c, e);
        return {r.value, r.infinite, false};
    } catch (const Indeterminate&) {
        return {QuadElem(0), false, true};
    }
}

KappaEntry entry_from(const CrValue& v, const QuadElem& factor, KappaKind kind) {
    KappaEntry e;
    e.kind = kind;
    if (v.indeterminate) {
        e.flag = KappaFlag::Indeterminate;
    } else if (v.infinite) {
        e.flag = factor.is_zero() ? KappaFlag::Indeterminate : KappaFlag::InfinityRule;
    } else {
        e.value = v.value * factor;
        if (e.value.is_zero()) e.flag = KappaFlag::Zero;
    }
    return e;
}

}  // namespace

QuadMap build_map(const BForm<Rat>& p, const BForm<Rat>& q) {
    if (p.degree() != 2 || q.degree() != 2) throw DomainError("a quadratic map needs two degree-2 forms");
    FormPair<Rat> pair(p, q);
    CriticalLifts crit = critical_lifts(pair);
    order_critical_points(crit);
    return QuadMap{std::move(pair), std::move(crit)};
}

QuadMap build_map(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    return build_map(BForm<Rat>(p), BForm<Rat>(q));
}

std::vector<ProjPoint<Rat>> forward_orbit(const QuadMap& f, const ProjPoint<Rat>& p, unsigned n,
                                          const OrbitGuard& guard) {
    if (n > 64) throw GuardExceeded("orbit length is capped at 64");
    std::vector<ProjPoint<Rat>> out{normalize(p)};
    for (unsigned i = 0; i < n; ++i) {
        out.push_back(apply_map(f, out.back()));
        guard_point(out.back(), guard);
    }
    return out;
}

std::vector<ProjPoint<QuadElem>> forward_orbit(const QuadMap& f, const ProjPoint<QuadElem>& p, unsigned n,
                                               const OrbitGuard& guard) {
    if (n > 64) throw GuardExceeded("orbit length is capped at 64");
    std::vector<ProjPoint<QuadElem>> out{normalize(p)};
    for (unsigned i = 0; i < n; ++i) {
        out.push_back(apply_map(f, out.back()));
        guard_point(out.back(), guard);
    }
    return out;
}

std::optional<CollisionData> detect_collision(QuadMap& f, unsigned max_iter, const OrbitGuard& guard) {
    if (max_iter == 0 || max_iter > max_collision_iter)
        throw DomainError("max_iter must be in 1.." + std::to_string(max_collision_iter));
    const auto o1 = forward_orbit(f, f.crit.xi1, max_iter, guard);
    const auto o2 = forward_orbit(f, f.crit.xi2, max_iter, guard);
    unsigned ell = 0;
    for (unsigned k = 1; k <= max_iter && ell == 0; ++k)
        if (same_point(o1[k], o2[k])) ell = k;
    if (ell == 0) return std::nullopt;
    if (ell == 1) throw InternalError("critical values of a degree-2 map coincide");
    // If xi2 = f^k(xi1) then f^ell(xi1) is periodic and xi2 already shows up
    // among the first ell + period iterates.
    const unsigned span = std::min(ell + max_iter, 64u);
    const auto long1 = forward_orbit(f, f.crit.xi1, span, guard);
    const auto long2 = forward_orbit(f, f.crit.xi2, span, guard);
    const bool two_in_one = in_orbit_prefix(long1, f.crit.xi2);
    const bool one_in_two = in_orbit_prefix(long2, f.crit.xi1);
    if (two_in_one && one_in_two) throw InternalError("both critical points are periodic");
    CollisionData out{ell, false};
    if (two_in_one) {
        std::swap(f.crit.xi1, f.crit.xi2);
        out.swapped = true;
    }
    return out;
}

NormalForm normal_form(const QuadMap& f) {
    if (!f.delta_square()) throw DomainError("normal form needs rational critical points");
    const ProjPoint<Rat> x1 = rational_point(f.crit.xi1);
    const ProjPoint<Rat> x2 = rational_point(f.crit.xi2);
    const Int a1 = x1.s.get_num(), b1 = x1.t.get_num();
    const Int a2 = x2.s.get_num(), b2 = x2.t.get_num();
    const BForm<Rat> n1 = BForm<Rat>::linear(Rat(a2), Rat(a1));
    const BForm<Rat> n2 = BForm<Rat>::linear(Rat(b2), Rat(b1));
    const BForm<Rat> pn = substitute(f.P(), n1, n2);
    const BForm<Rat> qn = substitute(f.Q(), n1, n2);
    const BForm<Rat> gp = Rat(b1) * pn - Rat(a1) * qn;
    const BForm<Rat> gq = Rat(a2) * qn - Rat(b2) * pn;
    if (sgn(gp[1]) != 0 || sgn(gq[1]) != 0) throw InternalError("conjugate is not a function of z^2");
    const Rat gamma = gq[0];
    if (sgn(gamma) == 0) throw DegenerateMap("map conjugates to a polynomial");
    NormalForm nf{gp[0] / gamma, gp[2] / gamma, gq[2] / gamma, {a2, a1, b2, b1}};
    if (sgn(Rat(nf.A * nf.C - nf.B)) == 0) throw InternalError("normal form has AC - B = 0");
    return nf;
}

QuadMap normal_form_map(const Rat& A, const Rat& B, const Rat& C) {
    return build_map(std::vector<Rat>{A, Rat(0), B}, std::vector<Rat>{Rat(1), Rat(0), C});
}

ProjPoint<Rat> to_normal_coords(const NormalForm& nf, const ProjPoint<Rat>& x) {
    const Rat a2(nf.nu[0]), a1(nf.nu[1]), b2(nf.nu[2]), b1(nf.nu[3]);
    return normalize(ProjPoint<Rat>{b1 * x.s - a1 * x.t, a2 * x.t - b2 * x.s});
}

ProjPoint<Rat> apply_mobius(const std::array<Rat, 4>& nu, const ProjPoint<Rat>& x) {
    return normalize(ProjPoint<Rat>{nu[0] * x.s + nu[1] * x.t, nu[2] * x.s + nu[3] * x.t});
}

QuadMap conjugate(const QuadMap& f, const std::array<Rat, 4>& nu) {
    const auto& [a, b, c, d] = nu;
    if (sgn(Rat(a * d - b * c)) == 0) throw DomainError("singular coordinate change");
    const BForm<Rat> i1 = BForm<Rat>::linear(d, Rat(-b));
    const BForm<Rat> i2 = BForm<Rat>::linear(Rat(-c), a);
    const BForm<Rat> pi = substitute(f.P(), i1, i2);
    const BForm<Rat> qi = substitute(f.Q(), i1, i2);
    return build_map(a * pi + b * qi, c * pi + d * qi);
}

Rat iterated_discriminant(const QuadMap& f, const ProjPoint<Rat>& x0, unsigned n) {
    Rat delta = 1;
    for (unsigned k = 1; k <= n; ++k) {
        const long half = 1L << (k - 1);
        Rat next = power(f.crit.c, static_cast<unsigned long>(2 * half)) * delta * delta *
                   signed_power(f.pair.res(), half * (half - 2)) *
                   critical_product(f.pair, f.crit, x0.s, x0.t, k);
        if (half & 1) next = -next;
        delta = std::move(next);
    }
    return delta;
}

KappaList kappa_list(const QuadMap& f, const CollisionData& coll, const ProjPoint<Rat>& x0, unsigned N,
                     const KappaOptions& opts) {
    if (N == 0) throw DomainError("N must be positive");
    if (N > opts.max_N) throw GuardExceeded("N exceeds " + std::to_string(opts.max_N));
    const unsigned ell = coll.ell;
    if (ell < 2) throw DomainError("kappa needs a collision level l >= 2");
    KappaList out;
    out.x0 = normalize(x0);
    out.N = N;
    out.ell = ell;
    out.delta = f.crit.delta;
    const unsigned len = std::max(N, ell) + 1;
    const auto o1 = forward_orbit(f, f.crit.xi1, len, opts.orbit);
    const auto o2 = forward_orbit(f, f.crit.xi2, len, opts.orbit);
    const ProjPoint<QuadElem> X0 = lift(out.x0);
    for (unsigned k = 1; k <= N; ++k)
        if (same_point(o1[k], X0) || same_point(o2[k], X0)) out.x0_in_critical_orbit = true;

    for (unsigned n = 1; n <= N; ++n) {
        KappaEntry e;
        if (n < ell || (n == ell && !f.delta_square())) {
            e.kind = KappaKind::Discriminant;
            e.value = QuadElem(iterated_discriminant(f, out.x0, n));
            if (e.value.is_zero()) e.flag = KappaFlag::Zero;
        } else if (n == ell && ell >= 3) {
            const CrValue ratio = cr(o2[1], o2[ell - 1], o1[ell - 1], o2[0]);
            const CrValue main = cr(X0, o1[1], o2[ell], o2[1]);
            if (ratio.indeterminate || ratio.infinite)
                throw InternalError("orbit ratio in kappa_l is not finite");
            e = entry_from(main, ratio.value, KappaKind::EllCrossRatios);
        } else if (n == ell) {
            const Rat eta = rational_part(f.crit.xi2.s);
            const Rat theta = rational_part(f.crit.xi2.t);
            const Rat disc = discriminant(theta * f.P() - eta * f.Q());
            e = entry_from(cr(X0, o1[1], o2[2], o2[1]), QuadElem(disc), KappaKind::EllDiffDiscriminant);
        } else {
            e = entry_from(cr(X0, o1[n - ell + 1], o2[n], o2[1]), QuadElem(1), KappaKind::CrossRatio);
        }
        if (!f.delta_square() && !e.value.is_zero()) e.value = e.value.with_tag(f.crit.delta);
        out.kappa.push_back(std::move(e));
    }
    return out;
}

Rat q_n(const Rat& A, const Rat& B, const Rat& C, unsigned n) {
    if (n == 0) throw DomainError("q_n is defined for n >= 1");
    const NormalOrbits o = normal_orbits(A, B, C, n);
    Rat q = power(Rat(-C), 1UL << (n - 1));
    for (unsigned i = 2; i <= n; ++i)
        q *= power(ratio(A - o.inf[i], A - o.zero[i]), 1UL << (n - i));
    if (sgn(q) == 0) throw InternalError("q_n vanished");
    return q;
}

Rat q_value(const Rat& A, const Rat& B, const Rat& C, unsigned ell) {
    require_normal_collision(A, B, C, ell);
    return q_n(A, B, C, ell - 1);
}

Rat r_value(const Rat& A, const Rat& B, const Rat& C, unsigned n, unsigned ell) {
    if (n < ell + 1) throw DomainError("r_n is defined for n >= l + 1");
    require_normal_collision(A, B, C, ell);
    const NormalOrbits o = normal_orbits(A, B, C, n);
    Rat r = power(Rat(4 * q_n(A, B, C, ell - 1)), 1UL << (n - ell - 1));
    for (unsigned i = 1; i <= n - ell; ++i)
        r *= power(ratio(o.inf[ell + i - 1] - A, o.zero[i] - A), 1UL << (n - ell - i));
    return r;
}

std::string to_string(KappaKind k) {
    switch (k) {
        case KappaKind::Discriminant: return "discriminant";
        case KappaKind::CrossRatio: return "cross-ratio";
        case KappaKind::EllCrossRatios: return "orbit-ratio*cross-ratio";
        case KappaKind::EllDiffDiscriminant: return "lift-discriminant*cross-ratio";
    }
    return "?";
}

std::string to_string(KappaFlag f) {
    switch (f) {
        case KappaFlag::None: return "none";
        case KappaFlag::Zero: return "zero";
        case KappaFlag::InfinityRule: return "infinity";
        case KappaFlag::Indeterminate: return "indeterminate";
    }
    return "?";
}

}  // namespace arboreal
