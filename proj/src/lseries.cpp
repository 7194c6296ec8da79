#include "efl/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "efl/numberfield.hpp"
#include "efl/quadrature.hpp"

namespace efl {

namespace {

constexpr double kPi = std::numbers::pi;

cplx coefficient_product(const std::vector<DirichletCharacter>& fs, std::size_t i, std::int64_t n) {
    if (i + 1 == fs.size()) return fs[i](n);
    cplx acc{0.0, 0.0};
    for (std::int64_t d : divisors(n)) {
        const cplx c = fs[i](d);
        if (c == cplx{0.0, 0.0}) continue;
        acc += c * coefficient_product(fs, i + 1, n / d);
    }
    return acc;
}

}  // namespace

cplx l_value(const DirichletCharacter& chi, cplx s) {
    const std::int64_t m = chi.modulus();
    if (chi.is_trivial() && s == cplx{1.0, 0.0}) throw ContractError("pole", "l_value: trivial character has a pole at s = 1");
    if (m == 1) return hurwitz_zeta(s, 1.0);
    // the 1/(s-1) parts cancel when sum chi(a) = 0
    const bool regular = !chi.is_trivial();
    auto hurwitz_of = [regular](cplx z, double a) { return regular ? hurwitz_zeta_regular(z, a) : hurwitz_zeta(z, a); };
    cplx acc{0.0, 0.0};
    for (std::int64_t a = 1; a <= m; ++a) {
        const cplx c = chi(a);
        if (c == cplx{0.0, 0.0}) continue;
        acc += c * hurwitz_of(s, static_cast<double>(a) / static_cast<double>(m));
    }
    return std::exp(-s * std::log(static_cast<double>(m))) * acc;
}

cplx euler_product(const DirichletCharacter& chi, cplx s, std::int64_t prime_bound) {
    cplx acc{1.0, 0.0};
    for (std::int64_t p : primes_up_to(prime_bound)) {
        const cplx c = chi(p);
        if (c == cplx{0.0, 0.0}) continue;
        acc /= 1.0 - c * std::exp(-s * std::log(static_cast<double>(p)));
    }
    return acc;
}

CompletedLFunction CompletedLFunction::riemann() {
    CompletedLFunction L;
    L.label_ = "zeta";
    L.gamma_ = {GammaFactorSpec{GammaKind::GammaR, 0.0, 1}};
    L.factors_ = {trivial_character()};
    L.poles_ = {Pole{cplx{0.0, 0.0}, 1}, Pole{cplx{1.0, 0.0}, 1}};
    L.rule_ = CoefficientRule::AllOnes;
    return L;
}

CompletedLFunction CompletedLFunction::dirichlet(const DirichletCharacter& chi) {
    if (chi.conductor() == 1) return riemann();
    if (!chi.is_primitive())
        throw ContractError("imprimitive", "CompletedLFunction::dirichlet: character must be primitive");
    CompletedLFunction L;
    const std::int64_t m = chi.modulus();
    L.label_ = "dirichlet:" + std::to_string(m) + ":" + std::to_string(chi.index());
    L.log_conductor_ = std::log(static_cast<double>(m));
    L.gamma_ = {GammaFactorSpec{GammaKind::GammaR, static_cast<double>(chi.parity()), 1}};
    L.factors_ = {chi};
    L.rule_ = CoefficientRule::Character;
    // (m/pi)^{s/2} Gamma((s+q)/2) = m^{s/2} pi^{q/2} Gamma_R(s+q)
    L.log_constant_ = 0.5 * chi.parity() * std::log(kPi);
    return L;
}

CompletedLFunction CompletedLFunction::dedekind_cyclotomic(std::int64_t m) {
    const CyclotomicField K = cyclotomic_field(m);
    CompletedLFunction L;
    L.label_ = "dedekind:" + std::to_string(K.m);
    L.log_conductor_ = K.log_abs_discriminant;
    if (K.r1 > 0) L.gamma_.push_back(GammaFactorSpec{GammaKind::GammaR, 0.0, K.r1});
    if (K.r2 > 0) L.gamma_.push_back(GammaFactorSpec{GammaKind::GammaC, 0.0, K.r2});
    for (const auto& chi : enumerate_characters(K.m)) L.factors_.push_back(chi.primitive_inducer());
    L.poles_ = {Pole{cplx{0.0, 0.0}, 1}, Pole{cplx{1.0, 0.0}, 1}};
    L.rule_ = CoefficientRule::FactorProduct;
    return L;
}

bool CompletedLFunction::self_dual() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const DirichletCharacter& c) { return c.is_real(); });
}

cplx CompletedLFunction::log_prefactor(cplx s) const {
    cplx acc = 0.5 * s * log_conductor_ + log_constant_;
    for (const auto& g : gamma_) acc += log_gamma_factor(g, s);
    return acc;
}

cplx CompletedLFunction::dirichlet_part(cplx s) const {
    cplx acc{1.0, 0.0};
    for (const auto& chi : factors_) acc *= l_value(chi, s);
    return acc;
}

cplx CompletedLFunction::value(cplx s) const {
    for (const auto& p : poles_)
        if (s == p.location) throw ContractError("pole", "completed_value: " + label_ + " has a pole here");
    return std::exp(log_prefactor(s)) * dirichlet_part(s);
}

cplx CompletedLFunction::coefficient(std::int64_t n) const {
    if (n < 1) throw ContractError("domain", "coefficient: n must be >= 1");
    switch (rule_) {
        case CoefficientRule::AllOnes: return {1.0, 0.0};
        case CoefficientRule::Character: return factors_.front()(n);
        case CoefficientRule::FactorProduct: return coefficient_product(factors_, 0, n);
    }
    return {0.0, 0.0};
}

CompletedLFunction CompletedLFunction::factor_function(std::size_t i) const {
    if (i >= factors_.size()) throw ContractError("domain", "factor_function: index out of range");
    return dirichlet(factors_[i]);
}

cplx completed_value(const CompletedLFunction& L, cplx s) { return L.value(s); }

FunctionalEquationResidual functional_equation_residual(const DirichletCharacter& chi, cplx s) {
    const cplx W = root_number(chi);
    const auto L = CompletedLFunction::dirichlet(chi);
    const auto Lbar = CompletedLFunction::dirichlet(chi.conj());
    const cplx lhs = L.value(s);
    const double abs_res = std::abs(lhs - W * Lbar.value(1.0 - s));
    const double scale = std::abs(lhs);
    return {abs_res, scale > 0.0 ? abs_res / scale : abs_res};
}

std::int64_t theta_truncation(const DirichletCharacter& chi, double y) {
    if (!(y > 0.0)) throw ContractError("domain", "theta: y must be positive");
    const double m = static_cast<double>(chi.modulus());
    return static_cast<std::int64_t>(std::ceil(std::sqrt(40.0 * m / (kPi * y)))) + 2;
}

cplx theta_value(const DirichletCharacter& chi, double y) {
    const std::int64_t n_max = theta_truncation(chi, y);
    const double m = static_cast<double>(chi.modulus());
    const int q = chi.parity();
    cplx acc{0.0, 0.0};
    for (std::int64_t n = n_max; n >= 1; --n) {
        const cplx c = chi(n);
        if (c == cplx{0.0, 0.0}) continue;
        const double nd = static_cast<double>(n);
        acc += c * std::pow(nd, q) * std::exp(-nd * nd * kPi * y / m);
    }
    // n and -n pair up by parity; n = 0 only survives for the modulus-one character
    if (chi.modulus() == 1) acc += 0.5;
    return std::pow(kPi / m, 0.5 * q) * acc;
}

MellinCheck mellin_check(const DirichletCharacter& chi, cplx s) {
    if (s.real() <= 1.0) throw ContractError("domain", "mellin_check: requires Re s > 1");
    const cplx W = root_number(chi);
    const DirichletCharacter chib = chi.conj();
    const int q = chi.parity();
    const double m = static_cast<double>(chi.modulus());
    const cplx z = 0.5 * (s + static_cast<double>(q));

    // theta(chi, 1/y) = c y^{q+1/2} theta(conj chi, y); measure c
    cplx c{0.0, 0.0};
    double best = -1.0;
    double spread = 0.0;
    std::vector<cplx> samples;
    for (double y0 : {1.1, 1.37, 1.9}) {
        const cplx tb = theta_value(chib, y0);
        const cplx ci = theta_value(chi, 1.0 / y0) / (std::pow(y0, q + 0.5) * tb);
        samples.push_back(ci);
        if (std::abs(tb) > best) {
            best = std::abs(tb);
            c = ci;
        }
    }
    for (const cplx& ci : samples) spread = std::max(spread, std::abs(ci - c));
    const double deviation = std::max(std::abs(c - W), spread);
    if (deviation > 1e-8)
        throw ContractError("contract", "mellin_check: theta transformation constant differs from the root number");

    const double upper = 45.0 * m / kPi + 2.0;
    auto upper_part = [&](double y) { return theta_value(chi, y) * std::exp((z - 1.0) * std::log(y)); };
    const cplx zf = 0.5 * (1.0 - s + static_cast<double>(q));
    auto folded = [&](double y) { return theta_value(chib, y) * std::exp((zf - 1.0) * std::log(y)); };
    const auto a = integrate_adaptive(upper_part, 1.0, upper, 1e-12);
    const auto b = integrate_adaptive(folded, 1.0, upper, 1e-12);
    const cplx integral = a.value + c * b.value;
    const cplx completed = CompletedLFunction::dirichlet(chi).value(s);
    return {std::abs(integral - completed), integral, completed, c, deviation, a.error_estimate + b.error_estimate};
}

}  // namespace efl
