#include "suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "arboreal/binary_forms.hpp"

namespace arboreal::suites {

namespace {

using Rng = std::mt19937_64;

constexpr std::size_t max_reported = 5;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rat random_rat(Rng& rng, long range, long max_den) {
    Rat r(uniform(rng, -range, range), uniform(rng, 1, max_den));
    r.canonicalize();
    return r;
}

Rat random_nonzero(Rng& rng, long range, long max_den) {
    for (;;) {
        Rat r = random_rat(rng, range, max_den);
        if (sgn(r) != 0) return r;
    }
}

BForm<Rat> random_form(Rng& rng, unsigned m, long range, long max_den) {
    std::vector<Rat> c;
    for (unsigned i = 0; i <= m; ++i) c.push_back(random_rat(rng, range, max_den));
    return BForm<Rat>(std::move(c));
}

FormPair<Rat> random_pair(Rng& rng, unsigned m, long range = 5, long max_den = 3) {
    for (;;) {
        try {
            return FormPair<Rat>(random_form(rng, m, range, max_den), random_form(rng, m, range, max_den));
        } catch (const DegenerateMap&) {
        }
    }
}

std::string describe(const BForm<Rat>& p) { return "[" + format_form(p) + "]"; }
std::string describe(const FormPair<Rat>& f) { return "P=" + describe(f.P()) + " Q=" + describe(f.Q()); }

// Records one check; exceptions count as failures.
void check(Result& r, const std::function<bool()>& body, const std::function<std::string()>& what) {
    ++r.total;
    std::string err;
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = std::string(" (") + e.what() + ")";
    }
    if (ok) {
        ++r.passed;
    } else if (r.failures.size() < max_reported) {
        r.failures.push_back(what() + err);
    }
}

// ---------------------------------------------------------------- groups

std::uint64_t expected_log2_order(unsigned ell, unsigned n) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (n + 1 <= ell) return all;
    return (std::uint64_t{1} << n) - (std::uint64_t{1} << (n - ell + 1));
}

Result group_orders(const Config&) {
    Result r{"group-orders"};
    const std::vector<std::pair<unsigned, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
    std::map<unsigned, std::vector<TreeAut>> aut;
    for (auto [ell, n] : cases) {
        check(
            r,
            [&, ell = ell, n = n] {
                const auto m = enumerate_M(ell, n);
                const std::set<TreeAut> distinct(m.begin(), m.end());
                if (distinct.size() != m.size()) return false;
                if (m.size() != (std::uint64_t{1} << expected_log2_order(ell, n))) return false;
                for (const auto& s : m)
                    if (!in_group(s, ell).in_m()) return false;
                // brute force: filter every automorphism of T_n
                if (!aut.count(n)) aut[n] = enumerate_aut(n);
                std::size_t members = 0;
                for (const auto& s : aut[n]) members += in_group(s, ell).in_m();
                return members == m.size();
            },
            [ell = ell, n = n] { return "|M_{" + std::to_string(ell) + "," + std::to_string(n) + "}| mismatch"; });
    }
    return r;
}

ParityVector psi(const TreeAut& s, unsigned ell) { return abelianize(s, ell); }

Result abelianization(const Config&) {
    Result r{"abelianization"};
    for (auto [ell, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 3}}) {
        const auto m = enumerate_M(ell, n);
        const std::string tag = "(" + std::to_string(ell) + "," + std::to_string(n) + ")";
        check(
            r,
            [&] {
                for (const auto& a : m)
                    for (const auto& b : m)
                        if (psi(compose(a, b), ell) != psi(a, ell) * psi(b, ell)) return false;
                return true;
            },
            [&] { return "psi is not a homomorphism on M" + tag; });
        check(
            r,
            [&] {
                std::set<std::vector<int>> image;
                for (const auto& a : m) {
                    std::vector<int> v;
                    for (Sign s : psi(a, ell)) v.push_back(s.value());
                    if (v.size() != n) return false;
                    image.insert(v);
                }
                return image.size() == (std::size_t{1} << n);
            },
            [&] { return "psi is not onto {+-1}^n on M" + tag; });
        check(
            r,
            [&] {
                std::vector<TreeAut> comms;
                for (const auto& a : m)
                    for (const auto& b : m) comms.push_back(compose(compose(a, b), compose(invert(a), invert(b))));
                const auto derived = closure(comms);
                std::vector<TreeAut> kernel;
                for (const auto& a : m) {
                    const auto v = psi(a, ell);
                    if (std::all_of(v.begin(), v.end(), [](Sign s) { return s == Sign::plus(); })) kernel.push_back(a);
                }
                std::sort(kernel.begin(), kernel.end());
                return derived == kernel;
            },
            [&] { return "ker psi differs from the commutator subgroup on M" + tag; });
    }
    return r;
}

TreeAut random_bottom(Rng& rng, TreeAut s, unsigned n, std::optional<bool> odd = {}) {
    const std::uint64_t first = (std::uint64_t{1} << (n - 1)) - 1;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (;;) {
        for (std::uint64_t i = 0; i < count; ++i) s.set_bit(first + i, uniform(rng, 0, 1) == 1);
        if (!odd || (s.popcount_range(first, count) % 2 == 1) == *odd) return s;
    }
}

std::vector<TreeAut> restricted(const std::vector<TreeAut>& gens, unsigned m) {
    std::vector<TreeAut> out;
    for (const auto& g : gens) out.push_back(restrict_to(g, m));
    return out;
}

// Random generators from `pool` whose restrictions to depth n-1 generate a
// group of order `target`.
std::vector<TreeAut> random_generators(Rng& rng, const std::vector<TreeAut>& pool, unsigned n, std::size_t target) {
    for (;;) {
        std::vector<TreeAut> gens;
        const long k = uniform(rng, 1, 3);
        for (long i = 0; i < k; ++i) gens.push_back(pool[uniform(rng, 0, static_cast<long>(pool.size()) - 1)]);
        if (closure(restricted(gens, n - 1)).size() == target) return gens;
    }
}

Result generation_aut(const Config& cfg) {
    Result r{"generation-aut"};
    Rng rng(cfg.seed ^ 0x51);
    for (unsigned trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 2;
        check(
            r,
            [&] {
                const auto prev = enumerate_aut(n - 1);
                std::vector<TreeAut> lifts;
                for (const auto& g : prev) lifts.push_back(random_bottom(rng, extend_to(g, n), n));
                auto gens = random_generators(rng, lifts, n, prev.size());
                const TreeAut sigma = random_bottom(rng, identity(n), n, true);
                if (!(restrict_to(sigma, n - 1) == identity(n - 1)) || sgn(sigma, NodeLabel::root(), n) != Sign::minus())
                    return false;
                gens.push_back(sigma);
                return closure(gens) == enumerate_aut(n);
            },
            [&] { return "generated group is not Aut(T_" + std::to_string(n) + ") at trial " + std::to_string(trial); });
    }
    return r;
}

Result generation_m(const Config& cfg) {
    Result r{"generation-m"};
    Rng rng(cfg.seed ^ 0x52);
    const unsigned ell = 2;
    for (unsigned trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 2;
        check(
            r,
            [&] {
                const auto full = enumerate_M(ell, n);
                const auto prev = enumerate_M(ell, n - 1);
                auto gens = random_generators(rng, full, n, prev.size());
                std::vector<TreeAut> odd;
                for (const auto& s : full)
                    if (restrict_to(s, n - 1) == identity(n - 1) &&
                        cousins_parity(s, NodeLabel::root(), ell, n) == Parity::Odd)
                        odd.push_back(s);
                if (odd.empty()) return false;
                gens.push_back(odd[uniform(rng, 0, static_cast<long>(odd.size()) - 1)]);
                return closure(gens) == full;
            },
            [&] { return "generated group is not M_{2," + std::to_string(n) + "} at trial " + std::to_string(trial); });
    }
    return r;
}

// ------------------------------------------------------------ identities

Result compres(const Config& cfg) {
    Result r{"compres"};
    Rng rng(cfg.seed ^ 0x61);
    for (int i = 0; i < 200; ++i) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 1, 3));
        const auto f = random_pair(rng, m);
        const Rat a = random_nonzero(rng, 5, 3), b = random_rat(rng, 5, 3);
        const Rat at = random_rat(rng, 5, 3), bt = random_nonzero(rng, 5, 3);
        check(r, [&] { return check_compres(f, a, b, at, bt); },
              [&] { return describe(f) + " alpha=" + format_rat(a) + " beta=" + format_rat(b); });
    }
    return r;
}

Result compdisc(const Config& cfg) {
    Result r{"compdisc"};
    Rng rng(cfg.seed ^ 0x62);
    for (int i = 0; i < 200; ++i) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 1, 3));
        const unsigned n = static_cast<unsigned>(uniform(rng, 1, 3));
        const auto f = random_pair(rng, m);
        const auto j = random_form(rng, n, 5, 2);
        check(r, [&] { return j.is_zero() || check_compdisc(j, f); },
              [&] { return describe(f) + " J=" + describe(j); });
    }
    return r;
}

Result iterdisc(const Config& cfg) {
    Result r{"iterdisc"};
    Rng rng(cfg.seed ^ 0x63);
    for (int i = 0; i < 200; ++i) {
        const unsigned n = 1 + static_cast<unsigned>(i % 4);
        const auto f = random_pair(rng, 2, 4, 2);
        Rat s0 = random_rat(rng, 5, 3), t0 = random_rat(rng, 5, 3);
        if (sgn(s0) == 0 && sgn(t0) == 0) t0 = 1;
        check(r, [&] { return check_iterdisc(f, s0, t0, n); },
              [&] { return describe(f) + " x0=[" + format_rat(s0) + ":" + format_rat(t0) + "] n=" + std::to_string(n); });
    }
    return r;
}

Result dpq(const Config& cfg) {
    Result r{"dpq"};
    Rng rng(cfg.seed ^ 0x64);
    for (int i = 0; i < 500; ++i) {
        const auto f = random_pair(rng, 2, 9, 4);
        check(r, [&] { return check_DPQ(f); }, [&] { return describe(f); });
    }
    return r;
}

Result polyiter(const Config& cfg) {
    Result r{"polyiter"};
    Rng rng(cfg.seed ^ 0x65);
    for (int i = 0; i < 200; ++i) {
        const unsigned d = 2 + static_cast<unsigned>(uniform(rng, 0, 1));
        const unsigned n = 1 + static_cast<unsigned>(uniform(rng, 0, 1));
        std::vector<Rat> f{random_nonzero(rng, 4, 2)};
        for (unsigned k = 0; k < d; ++k) f.push_back(random_rat(rng, 4, 2));
        const Rat x0 = random_rat(rng, 4, 3);
        check(r, [&] { return check_polyiter(f, x0, n); },
              [&] { return "f=" + describe(BForm<Rat>(f)) + " x0=" + format_rat(x0) + " n=" + std::to_string(n); });
    }
    return r;
}

// ------------------------------------------------------ colliding maps

std::array<Rat, 4> random_mobius(Rng& rng) {
    for (;;) {
        std::array<Rat, 4> nu{Rat(uniform(rng, -3, 3)), Rat(uniform(rng, -3, 3)), Rat(uniform(rng, -3, 3)),
                              Rat(uniform(rng, -3, 3))};
        if (sgn(Rat(nu[0] * nu[3] - nu[1] * nu[2])) != 0) return nu;
    }
}

std::string describe(const std::array<Rat, 4>& nu) {
    return "nu=(" + format_rat(nu[0]) + "," + format_rat(nu[1]) + "," + format_rat(nu[2]) + "," + format_rat(nu[3]) + ")";
}

QuadMap rescaled(const QuadMap& f, const Rat& lambda) { return build_map(lambda * f.P(), lambda * f.Q()); }

Result discsquare(const Config& cfg) {
    Result r{"discsquare"};
    Rng rng(cfg.seed ^ 0x71);
    std::set<std::string> seen;
    for (const auto& g : goldens()) {
        if (!seen.insert(format_form(BForm<Rat>(g.P)) + format_form(BForm<Rat>(g.Q))).second) continue;
        for (int trial = 0; trial < 3; ++trial) {
            QuadMap f = g.map();
            std::string how = g.name;
            if (trial > 0) {
                const auto nu = random_mobius(rng);
                f = conjugate(f, nu);
                how += " " + describe(nu);
            }
            const Rat s0 = random_rat(rng, 7, 3);
            const Rat t0 = random_nonzero(rng, 7, 3);
            check(
                r,
                [&] {
                    QuadMap h = f;
                    const auto c = detect_collision(h);
                    return c && c->ell == g.ell && check_discsquare(h.pair, s0, t0, c->ell);
                },
                [&] { return how + " x0=[" + format_rat(s0) + ":" + format_rat(t0) + "]"; });
        }
    }
    return r;
}

// --------------------------------------------------------------- lemmas

bool numeric_ok(const NumericReport& rep, mpfr_prec_t prec) {
    return rep.matched && rep.log2_error < -static_cast<double>(prec) / 2;
}

Result lemma_qn(const Config& cfg) {
    Result r{"lemma-qn"};
    Rng rng(cfg.seed ^ 0x81);
    for (const auto& g : goldens()) {
        if (!g.normal) continue;
        const NormalCoeffs& k = *g.normal;
        std::vector<ProjPoint<Rat>> xs{g.x0, ProjPoint<Rat>{random_rat(rng, 9, 5), Rat(1)}};
        for (const auto& x : xs) {
            check(r, [&] { return numeric_ok(verify_lemma_Qn(k, g.ell, x, cfg.precision), cfg.precision); },
                  [&] { return g.name + " x=" + format(x) + ": " + verify_lemma_Qn(k, g.ell, x, cfg.precision).summary(); });
        }
        // x = f(0): the right side vanishes and exactly one sign choice gives 0
        const ProjPoint<Rat> f0 = normalize(ProjPoint<Rat>{k.B, k.C});
        const auto orbit = forward_orbit(normal_form_map(k.A, k.B, k.C), ProjPoint<Rat>{k.A, Rat(1)}, 2 * g.ell);
        const bool excluded = std::any_of(orbit.begin(), orbit.end(), [&](const auto& p) { return same_point(p, f0); });
        if (!excluded) {
            check(
                r,
                [&] {
                    const auto rep = verify_lemma_Qn(k, g.ell, f0, cfg.precision);
                    return rep.matched && !rep.both_signs_match && rep.right.is_zero();
                },
                [&] { return g.name + " x=f(0): " + verify_lemma_Qn(k, g.ell, f0, cfg.precision).summary(); });
        }
        for (unsigned n = 1; n <= g.ell; ++n) {
            const ProjPoint<Rat> w{random_rat(rng, 9, 5), Rat(1)};
            check(r, [&] { return numeric_ok(verify_preimage_product(k, w, n, cfg.precision), cfg.precision); },
                  [&] { return g.name + " preimage product w=" + format(w) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

Result lemma_rn(const Config& cfg) {
    Result r{"lemma-rn"};
    for (const auto& g : goldens()) {
        if (!g.normal) continue;
        for (unsigned n = g.ell + 1; n <= g.ell + 3; ++n) {
            check(r, [&] { return numeric_ok(verify_lemma_Rn(*g.normal, g.ell, g.x0, n, cfg.precision), cfg.precision); },
                  [&] {
                      return g.name + ": " + verify_lemma_Rn(*g.normal, g.ell, g.x0, n, cfg.precision).summary();
                  });
        }
    }
    return r;
}

// -------------------------------------------------------------- certify

Result certify_invariance(const Config& cfg) {
    Result r{"certify-invariance"};
    Rng rng(cfg.seed ^ 0x91);
    for (const auto& g : goldens()) {
        check(r, [&] { return certify_max(g.map(), g.x0, g.N).verdict == g.verdict; },
              [&] { return g.name + ": frozen verdict changed"; });
        for (int trial = 0; trial < 50; ++trial) {
            const auto nu = random_mobius(rng);
            const Rat lambda = random_nonzero(rng, 6, 5);
            check(
                r,
                [&] {
                    const QuadMap h = conjugate(rescaled(g.map(), lambda), nu);
                    const auto c = certify_max(h, apply_mobius(nu, g.x0), g.N);
                    return c.verdict == g.verdict && (c.verdict != Verdict::NotFull || witness_is_square(c));
                },
                [&] { return g.name + " " + describe(nu) + " lambda=" + format_rat(lambda); });
        }
    }
    return r;
}

// -------------------------------------------------------------- subsets

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class T, class Square>
std::optional<std::vector<std::size_t>> exhaustive(const std::vector<T>& values, T one, Square is_sq) {
    const std::size_t n = values.size();
    if (n > 24) throw GuardExceeded("exhaustive scan is limited to 24 values");
    std::optional<std::vector<std::size_t>> best;
    std::uint64_t mask = 0;
    T prod = one;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g) {
        const auto i = static_cast<std::size_t>(std::countr_zero(g));
        mask ^= std::uint64_t{1} << i;
        prod = (mask >> i) & 1u ? T(prod * values[i]) : T(prod / values[i]);
        if (!is_sq(prod)) continue;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if ((mask >> k) & 1u) idx.push_back(k);
        if (!best || lex_less(idx, *best)) best = std::move(idx);
    }
    return best;
}

Rat random_class_value(Rng& rng, const std::vector<long>& primes) {
    Rat v = uniform(rng, 0, 1) ? 1 : -1;
    for (long p : primes)
        if (uniform(rng, 0, 2) == 0) v *= p;
    const Rat s = random_nonzero(rng, 6, 6);
    return v * s * s;
}

QuadElem random_quad(Rng& rng, const Int& d) {
    for (;;) {
        QuadElem x(random_rat(rng, 4, 2), random_rat(rng, 4, 2), d);
        if (!x.is_zero()) return x;
    }
}

std::string describe(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

std::string describe(const std::optional<std::vector<std::size_t>>& s) { return s ? describe(*s) : "none"; }

Result subset_oracle(const Config& cfg) {
    Result r{"subset-oracle"};
    Rng rng(cfg.seed ^ 0xa1);
    const std::vector<long> small{2, 3, 5, 7, 11, 13};
    const std::vector<long> wide{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 12));
        const auto& primes = trial % 2 ? small : wide;
        std::vector<Rat> vals;
        for (std::size_t i = 0; i < n; ++i) vals.push_back(random_class_value(rng, primes));
        const auto want = exhaustive(vals, Rat(1), [](const Rat& x) { return is_square_Q(x); });
        const auto got = subset_square_search(vals);
        check(
            r,
            [&] {
                if (!want) return got.analysis == Analysis::Independent;
                return got.analysis == Analysis::Witness && got.witness == *want;
            },
            [&] { return "Q trial " + std::to_string(trial) + ": exhaustive " + describe(want) + " vs " + describe(got.witness); });
    }
    const std::vector<long> deltas{2, 3, 5, -1, -3, 13};
    for (int trial = 0; trial < 100; ++trial) {
        const Int d = deltas[static_cast<std::size_t>(trial) % deltas.size()];
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 12));
        std::vector<QuadElem> pool;
        for (int k = 0; k < 3; ++k) pool.push_back(random_quad(rng, d));
        std::vector<QuadElem> vals;
        for (std::size_t i = 0; i < n; ++i) {
            QuadElem v = QuadElem(random_class_value(rng, {2, 3})).with_tag(d);
            for (const auto& p : pool)
                if (uniform(rng, 0, 1)) v = v * p;
            const QuadElem s = random_quad(rng, d);
            vals.push_back(v * s * s);
        }
        const auto want = exhaustive(vals, QuadElem(1).with_tag(d), [](const QuadElem& x) { return is_square_quad(x); });
        const auto got = subset_square_search(vals, d);
        check(
            r,
            [&] {
                if (!want) return got.analysis == Analysis::Independent;
                return got.analysis == Analysis::Witness && got.witness == *want;
            },
            [&] {
                return "L(sqrt " + d.get_str() + ") trial " + std::to_string(trial) + ": exhaustive " + describe(want) +
                       " vs " + describe(got.witness);
            });
    }
    return r;
}

using SuiteFn = Result (*)(const Config&);

struct Entry {
    const char* name;
    const char* family;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r{
        {"group-orders", "groups", group_orders},
        {"abelianization", "groups", abelianization},
        {"generation-aut", "groups", generation_aut},
        {"generation-m", "groups", generation_m},
        {"compres", "identities", compres},
        {"compdisc", "identities", compdisc},
        {"iterdisc", "identities", iterdisc},
        {"dpq", "identities", dpq},
        {"polyiter", "identities", polyiter},
        {"discsquare", "discsquare", discsquare},
        {"lemma-qn", "lemmas", lemma_qn},
        {"lemma-rn", "lemmas", lemma_rn},
        {"certify-invariance", "certify", certify_invariance},
        {"subset-oracle", "subsets", subset_oracle},
    };
    return r;
}

}  // namespace

const std::vector<Golden>& goldens() {
    static const std::vector<Golden> g{
        {"g1", {2, 0, -6}, {1, 0, 3}, {3, 1}, 6, 2, 1, Verdict::FullM, NormalCoeffs{2, -6, 3}},
        {"g1-split", {2, 0, -6}, {1, 0, 3}, {1, 1}, 6, 2, 1, Verdict::NotFull, NormalCoeffs{2, -6, 3}},
        {"g2", {1, 0, -2}, {1, 0, 2}, {3, 1}, 6, 2, 1, Verdict::FullM, NormalCoeffs{1, -2, 2}},
        {"l3", {0, 0, 4}, {1, 0, -2}, {1, 1}, 5, 3, 1, Verdict::NotFull, NormalCoeffs{0, 4, -2}},
        {"ns2", {-2, -2, -1}, {-2, 0, -1}, {2, 1}, 5, 2, 2, Verdict::FullMtilde, std::nullopt},
        {"ns2-split", {-2, -2, -1}, {-2, 0, -1}, {3, 1}, 5, 2, 2, Verdict::NotFull, std::nullopt},
        {"ns3", {-2, -2, -2}, {1, -2, 2}, {1, 1}, 5, 3, 13, Verdict::FullMtilde, std::nullopt},
    };
    return g;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
}

std::vector<std::string> family(const std::string& name) {
    std::vector<std::string> out;
    for (const auto& e : registry())
        if (name == "all" || name == e.name || name == e.family) out.emplace_back(e.name);
    return out;
}

Result run_one(const std::string& name, const Config& config) {
    for (const auto& e : registry()) {
        if (name != e.name) continue;
        const auto start = std::chrono::steady_clock::now();
        Result r = e.fn(config);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw DomainError("unknown suite '" + name + "'");
}

std::vector<Result> run(const std::string& filter, const Config& config) {
    const auto names = family(filter);
    if (names.empty()) throw DomainError("unknown suite or family '" + filter + "'");
    std::vector<Result> out;
    for (const auto& n : names) out.push_back(run_one(n, config));
    return out;
}

std::optional<std::vector<std::size_t>> exhaustive_square_subset(const std::vector<Rat>& values) {
    return exhaustive(values, Rat(1), [](const Rat& x) { return is_square_Q(x); });
}

std::optional<std::vector<std::size_t>> exhaustive_square_subset(const std::vector<QuadElem>& values, const Int& delta) {
    std::vector<QuadElem> tagged;
    for (const auto& v : values) tagged.push_back(v.with_tag(delta));
    return exhaustive(tagged, QuadElem(1).with_tag(delta), [](const QuadElem& x) { return is_square_quad(x); });
}

}  // namespace arboreal::suites
