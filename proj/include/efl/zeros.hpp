#pragma once

// Zeros of completed L-functions in the critical strip: argument-principle
// box counts and sign-change location on the critical line.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "efl/lseries.hpp"
#include "efl/parallel.hpp"

namespace efl {

struct Box {
    double re_lo, re_hi, im_lo, im_hi;
};

struct BoxCount {
    int zeros = 0;          // winding + poles inside
    int winding = 0;
    int poles_inside = 0;
    Box box{};              // the box actually used (after perturbation)
    int perturbations = 0;
    double min_modulus = 0; // smallest |L| (Dirichlet part) seen on the boundary
    double turn_error = 0;  // distance of the accumulated winding from an integer, in turns
    std::size_t evaluations = 0;
};

/// Argument principle along the boundary with adaptive subdivision. If the
/// boundary passes within 1e-6 (in |L|) of a zero the top and bottom edges are
/// nudged; after 5 failed attempts, or below 1e-12, a boundary error is raised.
BoxCount count_zeros_in_box(const CompletedLFunction& L, Box box, Exec exec = Exec::Parallel);

/// W^{-1/2} e^{i arg gamma-conductor factor} L(1/2 + it) for a single-factor source;
/// real for every primitive character.
cplx rotated_central_value(const CompletedLFunction& L, double t);

struct Zero {
    cplx location;
    int multiplicity = 1;
};

struct ZeroList {
    std::vector<Zero> entries;   // sorted by Im, conjugates included where they are zeros
    double height = 0;           // |Im| bound actually certified
    std::string source;
    int verified_count = 0;      // argument-principle count over [-0.1,1.1] x [-height, height]
    int located_count = 0;       // sum of multiplicities
    double max_real_deviation = 0;  // max |Re rho - 1/2| after Newton refinement
    int scan_refinements = 0;    // number of grid-step halvings that were needed
    double scan_step = 0;

    std::size_t size() const { return entries.size(); }
};

struct ZeroSearchOptions {
    double bisection_tol = 1e-12;
    int max_refinements = 4;
    bool certify_multiplicity = true;
    Exec exec = Exec::Parallel;
};

/// All zeros with |Im| <= T. Multi-factor sources (Dedekind zeta) are the union
/// of their factors' zero lists, certified against a box count of the product.
ZeroList find_zeros(const CompletedLFunction& L, double T, const ZeroSearchOptions& opt = {});

/// Union with multiplicities added where locations agree to 1e-9.
ZeroList merge_zero_lists(const std::vector<ZeroList>& parts, const std::string& source);

std::string zeros_csv(const ZeroList& z);
nlohmann::json certification_summary(const ZeroList& z);

}  // namespace efl
