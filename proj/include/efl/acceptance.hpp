#pragma once

// The acceptance suite AC1..AC12, shared by the acceptance test binary and the
// `selftest` command. Each criterion reports one pass/fail record.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "efl/lefschetz.hpp"
#include "efl/moments.hpp"

namespace efl {

struct CriterionResult {
    std::string id;
    bool passed = false;
    double measured = 0;
    double threshold = 0;
    std::string detail;
    double seconds = 0;

    std::string line() const;
    nlohmann::json to_json() const;
};

CriterionResult ac1_explicit_formula_zeta();
CriterionResult ac2_explicit_formula_chi4();
CriterionResult ac3_explicit_formula_gaussian_field();
CriterionResult ac4_artin_consistency();
CriterionResult ac5_functional_equation();
CriterionResult ac6_gauss_sums();
CriterionResult ac7_splitting();
CriterionResult ac8_ramified_trace_formula(std::uint64_t seed);
CriterionResult ac9_averaging_identities();
CriterionResult ac10_zero_certification();
CriterionResult ac11_moments(std::uint64_t seed);
CriterionResult ac12_invariant_trace(std::uint64_t seed);

struct NamedCriterion {
    std::string id;
    std::function<CriterionResult(std::uint64_t)> run;
};
std::vector<NamedCriterion> acceptance_suite();

// Random instance generators (also used by the unit tests).
struct RandomTraceInstance {
    OrbitModel model;
    FiniteRep rho;
    TestFunction alpha;
};
RandomTraceInstance random_trace_instance(std::mt19937_64& rng);

struct RandomInvariantInstance {
    FiniteRep action;
    Matrix theta;
    cplx z;
    double t;
    int expected_dim;
};
RandomInvariantInstance random_invariant_instance(std::mt19937_64& rng, bool force_no_invariants = false);

/// Random multiset in [0,1] x [-2,2] with pairwise separation >= 0.1 and total
/// multiplicity <= max_card.
StripMultiset random_strip_multiset(std::mt19937_64& rng, int max_card = 6);
/// A multiset distinct from `a`, built by one of several perturbations.
StripMultiset perturbed_multiset(std::mt19937_64& rng, const StripMultiset& a, int max_card = 6);

}  // namespace efl
