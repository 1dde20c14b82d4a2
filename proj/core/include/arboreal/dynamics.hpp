#pragma once

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "arboreal/binary_forms.hpp"

namespace arboreal {

// Degree-2 rational map f = P/Q over Q with its critical data.
struct QuadMap {
    FormPair<Rat> pair;
    CriticalLifts crit;  // xi1, xi2 in canonical order (see build_map)

    const BForm<Rat>& P() const { return pair.P(); }
    const BForm<Rat>& Q() const { return pair.Q(); }
    bool delta_square() const { return crit.delta == 1; }
};

// Critical points are ordered: conjugate pair -> smaller sqrt(delta)
// coefficient first; rational -> finite before infinity, then ascending.
QuadMap build_map(const BForm<Rat>& p, const BForm<Rat>& q);
QuadMap build_map(const std::vector<Rat>& p, const std::vector<Rat>& q);

template <class F>
ProjPoint<F> apply_raw(const FormPair<Rat>& pair, const ProjPoint<F>& x) {
    if constexpr (std::is_same_v<F, Rat>) {
        return {pair.P().eval(x.s, x.t), pair.Q().eval(x.s, x.t)};
    } else {
        return {lift(pair.P()).eval(x.s, x.t), lift(pair.Q()).eval(x.s, x.t)};
    }
}

template <class F>
ProjPoint<F> apply_map(const QuadMap& f, const ProjPoint<F>& x) {
    return normalize(apply_raw(f.pair, x));
}

struct OrbitGuard {
    std::size_t max_bits = std::size_t{1} << 22;  // per coordinate
};

// [p, f(p), ..., f^n(p)], each normalized.
std::vector<ProjPoint<Rat>> forward_orbit(const QuadMap& f, const ProjPoint<Rat>& p, unsigned n,
                                          const OrbitGuard& guard = {});
std::vector<ProjPoint<QuadElem>> forward_orbit(const QuadMap& f, const ProjPoint<QuadElem>& p, unsigned n,
                                               const OrbitGuard& guard = {});

struct CollisionData {
    unsigned ell = 0;
    bool swapped = false;  // xi1 and xi2 of build_map were exchanged
};

inline constexpr unsigned max_collision_iter = 20;

// Reorders f.crit when xi2 lies in the forward orbit of xi1.
std::optional<CollisionData> detect_collision(QuadMap& f, unsigned max_iter = 12, const OrbitGuard& guard = {});

struct NormalForm {
    Rat A, B, C;
    // nu(z) = (nu[0] z + nu[1]) / (nu[2] z + nu[3]) with nu(0) = xi1, nu(inf) = xi2.
    std::array<Int, 4> nu;
};

NormalForm normal_form(const QuadMap& f);

QuadMap normal_form_map(const Rat& A, const Rat& B, const Rat& C);

// nu^{-1}(x), i.e. x in the normal-form coordinates.
ProjPoint<Rat> to_normal_coords(const NormalForm& nf, const ProjPoint<Rat>& x);

// g = nu o f o nu^{-1} with nu(z) = (a z + b)/(c z + d), and nu(x).
QuadMap conjugate(const QuadMap& f, const std::array<Rat, 4>& nu);
ProjPoint<Rat> apply_mobius(const std::array<Rat, 4>& nu, const ProjPoint<Rat>& x);

enum class KappaKind { Discriminant, CrossRatio, EllCrossRatios, EllDiffDiscriminant };
enum class KappaFlag { None, Zero, InfinityRule, Indeterminate };

struct KappaEntry {
    QuadElem value;
    KappaKind kind = KappaKind::Discriminant;
    KappaFlag flag = KappaFlag::None;
};

struct KappaList {
    ProjPoint<Rat> x0;
    unsigned N = 0;
    unsigned ell = 0;
    Int delta{1};
    std::vector<KappaEntry> kappa;  // kappa[0] is kappa_1
    bool x0_in_critical_orbit = false;
};

struct KappaOptions {
    unsigned max_N = 20;
    OrbitGuard orbit;
};

KappaList kappa_list(const QuadMap& f, const CollisionData& coll, const ProjPoint<Rat>& x0, unsigned N,
                     const KappaOptions& opts = {});

// Delta(t0 P_n - s0 Q_n) by the iterated discriminant recursion.
Rat iterated_discriminant(const QuadMap& f, const ProjPoint<Rat>& x0, unsigned n);

// q_n for the normal form (A z^2 + B)/(z^2 + C); q_value(ell) is q_{ell-1}.
Rat q_n(const Rat& A, const Rat& B, const Rat& C, unsigned n);
Rat q_value(const Rat& A, const Rat& B, const Rat& C, unsigned ell);
Rat r_value(const Rat& A, const Rat& B, const Rat& C, unsigned n, unsigned ell);

std::string to_string(KappaKind k);
std::string to_string(KappaFlag f);

}  // namespace arboreal
