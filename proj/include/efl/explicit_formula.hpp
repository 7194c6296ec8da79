#pragma once

// Both sides of the explicit formulas for zeta-hat, Lambda(chi, .), the
// completed Dedekind zeta of Q(zeta_m) and abelian Artin L-functions, and the
// moment vectors of finite strip multisets.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "efl/characters.hpp"
#include "efl/parallel.hpp"
#include "efl/test_function.hpp"
#include "efl/zeros.hpp"

namespace efl {

enum class FormulaId { EF, EFCHI, EFK, ARTIN };
std::string to_string(FormulaId f);

struct FormulaReport {
    FormulaId formula = FormulaId::EF;
    cplx spectral;
    cplx geometric;
    double residual = 0;
    double T = 0;
    std::int64_t prime_bound = 0;
    double tail_estimate = 0;       // reported, never added
    double quadrature_error = 0;    // archimedean integrals
    double bump_c = 0, bump_w = 0;
    std::string zero_source;
    std::size_t zero_count = 0;
    int pole_terms = 0;             // number of pole contributions on the spectral side
    std::optional<double> artin_form_deviation;  // |eq. standard form - d_q form| (ARTIN only)

    nlohmann::json to_json() const;
};

/// Smallest prime bound covering every prime power in the support: floor(e^{max |t|}).
std::int64_t support_prime_bound(const TestFunction& a);

struct ArchimedeanValue {
    double value;
    double quadrature_error;
};

/// alpha(0) log pi + int_0^inf [(alpha(t) + e^{-t} alpha(-t))/(1 - e^{-2t}) - alpha(0) e^{-2t}/t] dt.
ArchimedeanValue archimedean_w_infinity(const TestFunction& a);

/// sum over zeros with multiplicity of Phi(rho), conjugate pairs combined first.
cplx zero_sum(const ZeroList& zeros, const TestFunction& a, Exec exec = Exec::Parallel);

/// Phi(0) + Phi(1) - sum Phi(rho). The list must come from zeta-hat.
cplx spectral_side_ef(const ZeroList& zeros, const TestFunction& a, Exec exec = Exec::Parallel);
cplx geometric_side_ef(const TestFunction& a, std::int64_t prime_bound, Exec exec = Exec::Parallel);

cplx geometric_side_efchi(const DirichletCharacter& chi, const TestFunction& a, std::int64_t prime_bound,
                          Exec exec = Exec::Parallel);
cplx geometric_side_efk(std::int64_t m, const TestFunction& a, std::int64_t prime_bound, Exec exec = Exec::Parallel);
cplx geometric_side_artin(const DirichletCharacter& chi, const TestFunction& a, std::int64_t prime_bound,
                          Exec exec = Exec::Parallel);

/// max |Phi(1/2 + it)| on [T, 2T] times the expected number of zeros there.
double spectral_tail_estimate(const TestFunction& a, double T, double degree, double log_conductor);

// prime_bound = 0 selects support_prime_bound(a).
FormulaReport both_sides_ef(const ZeroList& zeros, const TestFunction& a, std::int64_t prime_bound = 0);
FormulaReport both_sides_efchi(const DirichletCharacter& chi, const ZeroList& zeros, const TestFunction& a,
                               std::int64_t prime_bound = 0);
FormulaReport both_sides_efk(std::int64_t m, const ZeroList& zeros, const TestFunction& a, std::int64_t prime_bound = 0);
/// `factor_zeros` are the zeros of Lambda(chi*, .). When `union_zeros` (zeros of
/// zeta-hat_K) is given, the d_q form sums over it with d_q the multiplicity of
/// z_q among the factor zeros; otherwise the factor list itself is used.
FormulaReport both_sides_artin(const DirichletCharacter& chi, const ZeroList& factor_zeros, const TestFunction& a,
                               const ZeroList* union_zeros = nullptr, std::int64_t prime_bound = 0);

/// [sum 1/(u - 2)^{2+r}]_{r=0..R}; points repeated according to multiplicity.
std::vector<cplx> moment_vector(const std::vector<cplx>& points, int R);
bool moments_distinguish(const std::vector<cplx>& A, const std::vector<cplx>& B, int R, double tol);

}  // namespace efl
