#include "efl/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "efl/quadrature.hpp"

namespace efl {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k)!, k = 1..15
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.2044840173323941e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171386e29,
    8615841276005.0 / 14322.0 / 2.6525285981219105e32,
};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(pi z), stable for large |Im z| (modulo 2 pi i).
cplx log_sin_pi(cplx z) {
    if (std::abs(z.imag()) < 8.0) return std::log(std::sin(kPi * z));
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const cplx i{0.0, 1.0};
    return std::log(0.5 * i) - i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z));
}

cplx lanczos_log_gamma(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw ContractError("pole", "log_gamma: pole at a nonpositive integer");
    if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    return lanczos_log_gamma(z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx log_gamma_r(cplx s) { return -0.5 * s * std::log(kPi) + log_gamma(0.5 * s); }
cplx log_gamma_c(cplx s) { return -s * std::log(2.0 * kPi) + log_gamma(s); }
cplx gamma_r(cplx s) { return std::exp(log_gamma_r(s)); }
cplx gamma_c(cplx s) { return std::exp(log_gamma_c(s)); }

cplx log_gamma_factor(const GammaFactorSpec& g, cplx s) {
    const cplx z = s + g.shift;
    const cplx one = g.kind == GammaKind::GammaR ? log_gamma_r(z) : log_gamma_c(z);
    return static_cast<double>(g.multiplicity) * one;
}

DigammaIntegral digamma_half_integral(cplx s, double cutoff) {
    if (s.real() <= 0.0)
        throw ContractError("divergent", "digamma_half_integral: Re s must be > 0 for convergence");
    const double sigma_half = 0.5 * s.real();
    if (cutoff <= 0.0) cutoff = std::max(40.0, 37.0 / sigma_half);

    auto integrand = [s](double u) -> cplx {
        if (u < 1e-4) return 0.5 * (s - 3.0) + u * (5.0 / 12.0 + 0.25 * s - 0.125 * s * s);
        return std::exp(-u) / u + std::exp(-0.5 * u * s) / std::expm1(-u);
    };
    // Split off [0, 1] where the integrand varies on the unit scale.
    auto head = integrate_adaptive(integrand, 0.0, 1.0, 1e-13);
    auto body = integrate_adaptive(integrand, 1.0, cutoff, 1e-13);

    const double tail = std::exp(-cutoff) / cutoff +
                        std::exp(-sigma_half * cutoff) / (sigma_half * (1.0 - std::exp(-cutoff)));
    return {head.value + body.value, tail, head.error_estimate + body.error_estimate};
}

namespace {

// Euler-Maclaurin sum; the x^{1-s}/(s-1) term is dropped when `regular` is set
// and replaced by its difference with 1/(s-1).
cplx hurwitz_em(cplx s, double a, int head_terms, int corrections, bool regular) {
    if (!regular && s == cplx{1.0, 0.0}) throw ContractError("pole", "hurwitz_zeta: pole at s = 1");
    if (!(a > 0.0 && a <= 1.0)) throw ContractError("domain", "hurwitz_zeta: a must lie in (0, 1]");
    if (corrections > static_cast<int>(kBernoulliOverFactorial.size()))
        throw ContractError("domain", "hurwitz_zeta: too many correction terms");

    cplx head{0.0, 0.0};
    for (int n = 0; n < head_terms; ++n) head += std::exp(-s * std::log(n + a));

    const double x = head_terms + a;
    const double lx = std::log(x);
    const cplx x_minus_s = std::exp(-s * lx);
    cplx tail = 0.5 * x_minus_s;
    if (regular) {
        // (x^{1-s} - 1)/(s - 1) = -log x * (e^w - 1)/w, w = (1 - s) log x
        const cplx w = (1.0 - s) * lx;
        const cplx ratio = std::abs(w) < 1e-3 ? 1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)) : (std::exp(w) - 1.0) / w;
        tail += -lx * ratio;
    } else {
        tail += x * x_minus_s / (s - 1.0);
    }

    cplx rising = s;               // (s)_{2k-1}
    cplx power = x_minus_s / x;    // x^{-s-2k+1}
    for (int k = 1; k <= corrections; ++k) {
        tail += kBernoulliOverFactorial[k - 1] * rising * power;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= x * x;
    }
    return head + tail;
}

constexpr int kCorrections = 12;

int head_length(cplx s) {
    const double reach = std::abs(s) + 2.0 * kCorrections;
    return std::max(10, static_cast<int>(std::ceil(reach * 0.64)));
}

}  // namespace

cplx hurwitz_zeta_em(cplx s, double a, int head_terms, int corrections) {
    return hurwitz_em(s, a, head_terms, corrections, false);
}

cplx hurwitz_zeta_regular(cplx s, double a) { return hurwitz_em(s, a, head_length(s), kCorrections, true); }

cplx hurwitz_zeta(cplx s, double a) { return hurwitz_em(s, a, head_length(s), kCorrections, false); }

}  // namespace efl
