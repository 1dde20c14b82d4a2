#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arboreal/dynamics.hpp"
#include "arboreal/square_class.hpp"

namespace arboreal {

enum class Verdict { FullM, FullMtilde, NotFull, DegenerateCriticalHit, Inconclusive };
enum class Analysis { Independent, Witness, Inconclusive, Degenerate };

std::string to_string(Verdict v);
std::string to_string(Analysis a);

struct SubsetResult {
    Analysis analysis = Analysis::Independent;
    std::vector<std::size_t> witness;  // 0-based, ascending
};

struct SearchLimits {
    unsigned max_log2_candidates = 24;
    FactorBudget budget{};
};

// Smallest (lexicographic) nonempty subset with square product in Q.
SubsetResult subset_square_search(const std::vector<Rat>& values, const SearchLimits& limits = {});

// Same over Q(sqrt(delta)). Norms give a necessary condition; every candidate
// in the kernel of the norm classes is then tested exactly.
SubsetResult subset_square_search(const std::vector<QuadElem>& values, const Int& delta,
                                  const SearchLimits& limits = {});

struct Certificate {
    std::vector<Rat> P, Q;
    ProjPoint<Rat> x0;
    unsigned ell = 0;
    unsigned N = 0;
    Int delta = 1;
    bool swapped = false;
    std::vector<KappaEntry> kappa;
    Analysis analysis = Analysis::Independent;
    std::vector<std::size_t> witness;  // 1-based kappa indices
    Verdict verdict = Verdict::Inconclusive;

    bool delta_square() const { return delta == 1; }
};

struct CertifyOptions {
    unsigned max_iter = 12;
    KappaOptions kappa{};
    SearchLimits search{};
};

// Throws DomainError when the critical points do not collide within max_iter.
Certificate certify_max(const QuadMap& f, const ProjPoint<Rat>& x0, unsigned N, const CertifyOptions& opts = {});

// Product of the witness entries is a square in the relevant field.
bool witness_is_square(const Certificate& c);

// Process exit status for a verdict: 0 full, 1 not full, 4 degenerate, 5 inconclusive.
int exit_code(Verdict v);

std::string serialize(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace arboreal
