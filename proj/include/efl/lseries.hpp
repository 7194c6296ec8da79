#pragma once

// Dirichlet L-functions, the Riemann zeta function and Dedekind zeta functions
// of cyclotomic fields, in completed form.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "efl/characters.hpp"
#include "efl/special_functions.hpp"

namespace efl {

/// Analytic continuation of sum chi(n) n^{-s} via the Hurwitz decomposition
///   L(chi, s) = m^{-s} sum_{a=1}^{m} chi(a) zeta(s, a/m).
cplx l_value(const DirichletCharacter& chi, cplx s);

/// Truncated Euler product prod_{p <= bound} (1 - chi(p) p^{-s})^{-1}.
cplx euler_product(const DirichletCharacter& chi, cplx s, std::int64_t prime_bound);

struct Pole {
    cplx location;
    int order = 1;
};

enum class CoefficientRule { AllOnes, Character, FactorProduct };

/// N^{s/2} * prod gamma factors * e^{log_constant} * prod_i L(chi_i, s).
///
/// The Dirichlet series is always carried as a product of primitive
/// L-factors, so the zeros of the completed function are the union of the
/// zeros of the completed factors.
class CompletedLFunction {
public:
    /// pi^{-s/2} Gamma(s/2) zeta(s).
    static CompletedLFunction riemann();
    /// (m/pi)^{s/2} Gamma((s+q)/2) L(chi, s) for primitive nontrivial chi
    /// (a character of conductor 1 yields riemann()).
    static CompletedLFunction dirichlet(const DirichletCharacter& chi);
    /// |d_K|^{s/2} Gamma_R(s)^{r1} Gamma_C(s)^{r2} zeta_K(s), K = Q(zeta_m).
    static CompletedLFunction dedekind_cyclotomic(std::int64_t m);

    const std::string& label() const { return label_; }
    double log_conductor() const { return log_conductor_; }
    const std::vector<GammaFactorSpec>& gamma_factors() const { return gamma_; }
    const std::vector<DirichletCharacter>& factors() const { return factors_; }
    const std::vector<Pole>& poles() const { return poles_; }
    CoefficientRule coefficient_rule() const { return rule_; }
    double log_constant() const { return log_constant_; }

    /// True when the completed function is real on the critical line
    /// (every factor is a real character).
    bool self_dual() const;

    /// log of conductor power, gamma factors and constant (mod 2 pi i).
    cplx log_prefactor(cplx s) const;
    /// prod_i L(chi_i, s).
    cplx dirichlet_part(cplx s) const;
    /// Completed value. Throws at the listed poles and at gamma poles.
    cplx value(cplx s) const;

    /// n-th Dirichlet coefficient of the (uncompleted) series.
    cplx coefficient(std::int64_t n) const;

    /// The single-factor completed function of factor i.
    CompletedLFunction factor_function(std::size_t i) const;

private:
    std::string label_;
    double log_conductor_ = 0.0;
    std::vector<GammaFactorSpec> gamma_;
    std::vector<DirichletCharacter> factors_;
    std::vector<Pole> poles_;
    CoefficientRule rule_ = CoefficientRule::AllOnes;
    double log_constant_ = 0.0;
};

cplx completed_value(const CompletedLFunction& L, cplx s);

struct FunctionalEquationResidual {
    double absolute;  // |Lambda(chi, s) - W Lambda(conj chi, 1 - s)|
    double relative;  // absolute / |Lambda(chi, s)|
};

/// Residual of Lambda(chi, s) = W(chi) Lambda(conj chi, 1 - s); chi primitive nontrivial.
FunctionalEquationResidual functional_equation_residual(const DirichletCharacter& chi, cplx s);

/// theta(chi, y) = (1/2)(pi/m)^{q/2} sum_{n in Z} chi(n) n^q e^{-n^2 pi y / m}.
cplx theta_value(const DirichletCharacter& chi, double y);
/// Number of positive n kept by theta_value at y (tail below 1e-15).
std::int64_t theta_truncation(const DirichletCharacter& chi, double y);

struct MellinCheck {
    double residual;             // |integral - Lambda(chi, s)|
    cplx integral;
    cplx completed;
    cplx transform_constant;     // c with theta(chi, 1/y) = c y^{q+1/2} theta(conj chi, y)
    double constant_deviation;   // |c - W(chi)|
    double quadrature_error;
};

/// Mellin transform of theta at (s+q)/2 against Lambda(chi, s), Re s > 1.
/// The part over (0, 1) is folded onto (1, inf) with the theta transformation;
/// its constant is measured numerically and asserted equal to W(chi) (1e-8).
MellinCheck mellin_check(const DirichletCharacter& chi, cplx s);

}  // namespace efl
