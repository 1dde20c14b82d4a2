#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arboreal/certify.hpp"
#include "arboreal/numeric.hpp"
#include "arboreal/tree_group.hpp"

namespace arboreal::suites {

struct Config {
    std::uint64_t seed = 20240601;
    mpfr_prec_t precision = 256;
};

struct Result {
    explicit Result(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;  // first few counterexamples
    double seconds = 0;

    bool ok() const { return total > 0 && passed == total; }
};

struct Golden {
    std::string name;
    std::vector<Rat> P, Q;
    ProjPoint<Rat> x0;
    unsigned N = 0;
    unsigned ell = 0;
    Int delta{1};
    Verdict verdict = Verdict::Inconclusive;
    std::optional<NormalCoeffs> normal;

    QuadMap map() const { return build_map(P, Q); }
};

const std::vector<Golden>& goldens();

// Suite names grouped by family: groups, identities, discsquare, lemmas,
// certify, subsets.
std::vector<std::string> suite_names();
std::vector<std::string> family(const std::string& name);

// Runs every suite whose name or family matches `filter` ("all" runs all).
// Throws DomainError for an unknown filter.
std::vector<Result> run(const std::string& filter, const Config& config);
Result run_one(const std::string& name, const Config& config);

// Exhaustive lexicographically smallest square subset, 0-based.
std::optional<std::vector<std::size_t>> exhaustive_square_subset(const std::vector<Rat>& values);
std::optional<std::vector<std::size_t>> exhaustive_square_subset(const std::vector<QuadElem>& values,
                                                                 const Int& delta);

}  // namespace arboreal::suites
