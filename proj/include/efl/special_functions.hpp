#pragma once

#include <complex>
#include <cstdint>

#include "efl/arith.hpp"

namespace efl {

using cplx = std::complex<double>;

enum class GammaKind { GammaR, GammaC };

/// One gamma factor of a completed L-function: kind(s + shift)^multiplicity.
struct GammaFactorSpec {
    GammaKind kind = GammaKind::GammaR;
    double shift = 0.0;
    int multiplicity = 1;
};

/// log Gamma(z), Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
/// The imaginary part is only defined modulo 2 pi. Throws at poles.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

/// log of pi^{-s/2} Gamma(s/2) and of (2 pi)^{-s} Gamma(s).
cplx log_gamma_r(cplx s);
cplx log_gamma_c(cplx s);
cplx gamma_r(cplx s);
cplx gamma_c(cplx s);

/// Sum over the factor list of multiplicity * log kind(s + shift).
cplx log_gamma_factor(const GammaFactorSpec& g, cplx s);

struct DigammaIntegral {
    cplx value;
    double tail_bound;       // bound on the discarded integral over [cutoff, inf)
    double quadrature_error; // adaptive quadrature estimate
};

/// Gamma'/Gamma(s/2) through its integral representation
///   int_0^inf ( e^{-u}/u - e^{-us/2}/(1 - e^{-u}) ) du,
/// truncated at `cutoff` (<= 0 selects a cutoff where the integrand is below 1e-16).
DigammaIntegral digamma_half_integral(cplx s, double cutoff = 0.0);

/// Euler-Maclaurin Hurwitz zeta with explicit head length N and K correction terms.
cplx hurwitz_zeta_em(cplx s, double a, int head_terms, int corrections);

/// zeta(s, a) for 0 < a <= 1, s != 1. Head length grows with |s| so that the
/// correction series converges geometrically.
cplx hurwitz_zeta(cplx s, double a);

/// zeta(s, a) - 1/(s - 1), entire in s; at s = 1 it equals -digamma(a).
cplx hurwitz_zeta_regular(cplx s, double a);

}  // namespace efl
