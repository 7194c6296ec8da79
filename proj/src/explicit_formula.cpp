#include "efl/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "efl/lseries.hpp"
#include "efl/numberfield.hpp"
#include "efl/quadrature.hpp"

namespace efl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-13;

struct Piecewise {
    double value = 0;
    double error = 0;
};

// int_a^b f with breakpoints at the support ends of alpha(t) and alpha(-t)
template <class F>
Piecewise integrate_pieces(F&& f, double a, double b, const TestFunction& al) {
    Piecewise out;
    if (!(a < b)) return out;
    std::vector<double> cuts = {a, b};
    for (double x : {al.support_lo(), al.support_hi(), -al.support_lo(), -al.support_hi()})
        if (x > a && x < b) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto r = integrate_adaptive(f, cuts[i], cuts[i + 1], kQuadTol);
        out.value += r.value;
        out.error += r.error_estimate;
    }
    return out;
}

void require_support(const TestFunction& a, std::int64_t prime_bound) {
    if (prime_bound < support_prime_bound(a))
        throw ContractError("prime_bound", "prime bound does not cover the support of the test function");
}

void require_zero_free(const TestFunction& a) {
    if (a.support_contains_zero()) throw ContractError("support", "test function support must exclude 0");
}

// sum over primes p <= bound of term(p), deterministic order
template <class F>
cplx prime_sum(std::int64_t bound, F&& term, Exec exec) {
    const auto primes = primes_up_to(bound);
    auto terms = map<cplx>(primes.size(), [&](std::size_t i) { return term(primes[i]); }, exec);
    return pairwise_sum(terms);
}

// positive- and negative-time archimedean weights applied to alpha
Piecewise weighted_integral(const TestFunction& a, double (*pos)(double), double (*neg)(double)) {
    Piecewise out;
    const double hi = a.support_hi(), lo = a.support_lo();
    if (hi > 0.0) {
        auto r = integrate_pieces([&](double t) { return a(t) * pos(t); }, std::max(lo, 0.0), hi, a);
        out.value += r.value;
        out.error += r.error;
    }
    if (lo < 0.0) {
        auto r = integrate_pieces([&](double t) { return a(t) * neg(t); }, lo, std::min(hi, 0.0), a);
        out.value += r.value;
        out.error += r.error;
    }
    return out;
}

double real_pos(double t) { return 1.0 / -std::expm1(-2.0 * t); }
double real_neg(double t) { return std::exp(t) / -std::expm1(2.0 * t); }
double complex_pos(double t) { return 1.0 / -std::expm1(-t); }
double complex_neg(double t) { return std::exp(t) / -std::expm1(t); }

double effective_height(const ZeroList& z) {
    double h = z.height;
    for (const Zero& e : z.entries) h = std::max(h, std::abs(e.location.imag()));
    return h;
}

FormulaReport make_report(FormulaId id, const ZeroList& zeros, const TestFunction& a, std::int64_t pb) {
    FormulaReport r;
    r.formula = id;
    r.T = zeros.height;
    r.prime_bound = pb;
    r.bump_c = a.center();
    r.bump_w = a.width();
    r.zero_source = zeros.source;
    r.zero_count = zeros.entries.size();
    return r;
}

void finish(FormulaReport& r) { r.residual = std::abs(r.spectral - r.geometric); }

}  // namespace

std::string to_string(FormulaId f) {
    switch (f) {
        case FormulaId::EF: return "EF";
        case FormulaId::EFCHI: return "EFCHI";
        case FormulaId::EFK: return "EFK";
        case FormulaId::ARTIN: return "ARTIN";
    }
    return "?";
}

nlohmann::json FormulaReport::to_json() const {
    nlohmann::json j = {{"formula", to_string(formula)},
                        {"spectral", {spectral.real(), spectral.imag()}},
                        {"geometric", {geometric.real(), geometric.imag()}},
                        {"residual", residual},
                        {"T", T},
                        {"prime_bound", prime_bound},
                        {"tail_estimate", tail_estimate},
                        {"quadrature_error", quadrature_error},
                        {"bump", {{"c", bump_c}, {"w", bump_w}}},
                        {"zero_source", zero_source},
                        {"zero_count", zero_count},
                        {"pole_terms", pole_terms}};
    if (artin_form_deviation) j["artin_form_deviation"] = *artin_form_deviation;
    return j;
}

std::int64_t support_prime_bound(const TestFunction& a) {
    return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(std::exp(a.reach()))));
}

ArchimedeanValue archimedean_w_infinity(const TestFunction& a) {
    const double a0 = a(0.0);
    const double a1 = a.derivative(0.0, 1), a2 = a.derivative(0.0, 2);
    auto f = [&](double t) {
        if (t < 1e-3) return 2.5 * a0 + t * (0.5 * (a2 + a1 + a0 / 6.0) - 2.0 * a0);
        return (a(t) + std::exp(-t) * a(-t)) / -std::expm1(-2.0 * t) - a0 * std::exp(-2.0 * t) / t;
    };
    const double A = a.reach();
    const Piecewise body = integrate_pieces(f, 0.0, A, a);
    // beyond the support only the counterterm is left: -a0 int_A^inf e^{-2t}/t dt = -a0 E1(2A)
    const double tail = a0 == 0.0 ? 0.0 : a0 * std::expint(-2.0 * A);
    return {a0 * std::log(kPi) + body.value + tail, body.error};
}

cplx zero_sum(const ZeroList& zeros, const TestFunction& a, Exec exec) {
    const PhiEvaluator phi(a, effective_height(zeros));
    std::vector<cplx> pts;
    for (const Zero& z : zeros.entries) pts.push_back(z.location);
    const auto vals = phi.evaluate(pts, exec);

    // order by |Im|, conjugates adjacent, and fold each pair before the tree sum
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        const double ai = std::abs(pts[i].imag()), aj = std::abs(pts[j].imag());
        if (ai != aj) return ai < aj;
        if (pts[i].real() != pts[j].real()) return pts[i].real() < pts[j].real();
        return pts[i].imag() < pts[j].imag();
    });
    std::vector<cplx> folded;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t i = idx[k];
        cplx term = static_cast<double>(zeros.entries[i].multiplicity) * vals[i];
        if (k + 1 < idx.size()) {
            const std::size_t j = idx[k + 1];
            if (std::abs(pts[j] - std::conj(pts[i])) < 1e-9 && pts[i].imag() != 0.0) {
                term += static_cast<double>(zeros.entries[j].multiplicity) * vals[j];
                ++k;
            }
        }
        folded.push_back(term);
    }
    return pairwise_sum(folded);
}

cplx spectral_side_ef(const ZeroList& zeros, const TestFunction& a, Exec exec) {
    if (!zeros.entries.empty() && zeros.source != CompletedLFunction::riemann().label())
        throw ContractError("source", "spectral_side_ef: zero list does not come from zeta-hat");
    return phi_transform(a, 0.0) + phi_transform(a, 1.0) - zero_sum(zeros, a, exec);
}

cplx geometric_side_ef(const TestFunction& a, std::int64_t prime_bound, Exec exec) {
    require_support(a, prime_bound);
    const double reach = a.reach();
    const cplx primes = prime_sum(
        prime_bound,
        [&](std::int64_t p) {
            const double lp = std::log(static_cast<double>(p));
            double acc = 0.0;
            for (int k = 1; k * lp <= reach; ++k) acc += a(k * lp) + std::pow(static_cast<double>(p), -k) * a(-k * lp);
            return cplx{lp * acc, 0.0};
        },
        exec);
    return primes + archimedean_w_infinity(a).value;
}

cplx geometric_side_efchi(const DirichletCharacter& chi, const TestFunction& a, std::int64_t prime_bound, Exec exec) {
    require_support(a, prime_bound);
    require_zero_free(a);
    const double reach = a.reach();
    const int q = chi.parity();
    const cplx primes = prime_sum(
        prime_bound,
        [&](std::int64_t p) {
            const cplx c = chi(p);
            if (c == cplx{0.0, 0.0}) return cplx{0.0, 0.0};
            const double lp = std::log(static_cast<double>(p));
            cplx acc{0.0, 0.0}, cn{1.0, 0.0};
            for (int n = 1; n * lp <= reach; ++n) {
                cn *= c;
                acc += cn * a(n * lp) + std::pow(static_cast<double>(p), -n) * std::conj(cn) * a(-n * lp);
            }
            return lp * acc;
        },
        exec);
    // int_0^inf (alpha(x) e^{-qx} + alpha(-x) e^{-x(1+q)})/(1 - e^{-2x}) dx, written on the support
    Piecewise arch;
    if (a.support_hi() > 0.0)
        arch = integrate_pieces([&](double x) { return a(x) * std::exp(-q * x) / -std::expm1(-2.0 * x); },
                                std::max(a.support_lo(), 0.0), a.support_hi(), a);
    if (a.support_lo() < 0.0) {
        auto r = integrate_pieces([&](double x) { return a(-x) * std::exp(-(1.0 + q) * x) / -std::expm1(-2.0 * x); },
                                  std::max(-a.support_hi(), 0.0), -a.support_lo(), a);
        arch.value += r.value;
    }
    return primes + arch.value;
}

cplx geometric_side_efk(std::int64_t m, const TestFunction& a, std::int64_t prime_bound, Exec exec) {
    require_support(a, prime_bound);
    require_zero_free(a);
    const CyclotomicField K = cyclotomic_field(m);
    const double reach = a.reach();
    const cplx primes = prime_sum(
        prime_bound,
        [&](std::int64_t p) {
            const PrimeSplitting sp = split_prime(K.m, p);
            const double lnorm = static_cast<double>(sp.f) * std::log(static_cast<double>(p));
            double acc = 0.0;
            for (int k = 1; k * lnorm <= reach; ++k)
                acc += a(k * lnorm) + std::exp(-k * lnorm) * a(-k * lnorm);
            return cplx{static_cast<double>(sp.r) * lnorm * acc, 0.0};
        },
        exec);
    double arch = 0.0;
    if (K.r1 > 0) arch += K.r1 * weighted_integral(a, real_pos, real_neg).value;
    if (K.r2 > 0) arch += K.r2 * weighted_integral(a, complex_pos, complex_neg).value;
    return primes + arch;
}

cplx geometric_side_artin(const DirichletCharacter& chi, const TestFunction& a, std::int64_t prime_bound, Exec exec) {
    if (!a.positive_support()) throw ContractError("support", "ARTIN requires a test function supported in (0, inf)");
    require_support(a, prime_bound);
    const double reach = a.reach();
    const cplx primes = prime_sum(
        prime_bound,
        [&](std::int64_t p) {
            const double lp = std::log(static_cast<double>(p));
            cplx acc{0.0, 0.0};
            for (int k = 1; k * lp <= reach; ++k) acc += a(k * lp) * artin_frobenius_trace(chi, p, k);
            return lp * acc;
        },
        exec);
    const ArchimedeanSignature sig = archimedean_signature(chi, chi.modulus());
    const auto arch = integrate_pieces(
        [&](double x) { return a(x) * (sig.n_plus + sig.n_minus * std::exp(-x)) / -std::expm1(-2.0 * x); },
        a.support_lo(), a.support_hi(), a);
    return primes + arch.value;
}

double spectral_tail_estimate(const TestFunction& a, double T, double degree, double log_conductor) {
    if (!(T > 0.0)) return 0.0;
    const PhiEvaluator phi(a, 2.0 * T);
    double M = 0.0;
    constexpr int kSamples = 64;
    for (int i = 0; i <= kSamples; ++i) M = std::max(M, std::abs(phi(cplx{0.5, T + T * i / kSamples})));
    auto n = [&](double t) {
        const double x = std::max(t / (2.0 * kPi), 1.0);
        return 2.0 * x * (degree * std::log(x) + log_conductor);
    };
    return M * std::max(0.0, n(2.0 * T) - n(T));
}

FormulaReport both_sides_ef(const ZeroList& zeros, const TestFunction& a, std::int64_t prime_bound) {
    if (prime_bound == 0) prime_bound = support_prime_bound(a);
    FormulaReport r = make_report(FormulaId::EF, zeros, a, prime_bound);
    r.spectral = spectral_side_ef(zeros, a);
    r.pole_terms = 2;
    r.geometric = geometric_side_ef(a, prime_bound);
    r.quadrature_error = archimedean_w_infinity(a).quadrature_error;
    r.tail_estimate = spectral_tail_estimate(a, zeros.height, 1.0, 0.0);
    finish(r);
    return r;
}

FormulaReport both_sides_efchi(const DirichletCharacter& chi, const ZeroList& zeros, const TestFunction& a,
                               std::int64_t prime_bound) {
    if (!chi.is_primitive() || chi.is_trivial())
        throw ContractError("imprimitive", "EFCHI requires a primitive nontrivial character");
    require_zero_free(a);
    const auto L = CompletedLFunction::dirichlet(chi);
    if (!zeros.entries.empty() && zeros.source != L.label())
        throw ContractError("source", "both_sides_efchi: zero list does not come from Lambda(chi, .)");
    if (prime_bound == 0) prime_bound = support_prime_bound(a);
    FormulaReport r = make_report(FormulaId::EFCHI, zeros, a, prime_bound);
    r.spectral = -zero_sum(zeros, a);
    r.pole_terms = static_cast<int>(L.poles().size());
    r.geometric = geometric_side_efchi(chi, a, prime_bound);
    r.tail_estimate = spectral_tail_estimate(a, zeros.height, 1.0, L.log_conductor());
    finish(r);
    return r;
}

FormulaReport both_sides_efk(std::int64_t m, const ZeroList& zeros, const TestFunction& a, std::int64_t prime_bound) {
    require_zero_free(a);
    const auto L = CompletedLFunction::dedekind_cyclotomic(m);
    if (!zeros.entries.empty() && zeros.source != L.label())
        throw ContractError("source", "both_sides_efk: zero list does not come from the Dedekind zeta function");
    if (prime_bound == 0) prime_bound = support_prime_bound(a);
    FormulaReport r = make_report(FormulaId::EFK, zeros, a, prime_bound);
    cplx poles{0.0, 0.0};
    for (const Pole& p : L.poles()) poles += static_cast<double>(p.order) * phi_transform(a, p.location);
    r.pole_terms = static_cast<int>(L.poles().size());
    r.spectral = poles - zero_sum(zeros, a);
    r.geometric = geometric_side_efk(m, a, prime_bound);
    r.tail_estimate =
        spectral_tail_estimate(a, zeros.height, static_cast<double>(L.factors().size()), L.log_conductor());
    finish(r);
    return r;
}

FormulaReport both_sides_artin(const DirichletCharacter& chi, const ZeroList& factor_zeros, const TestFunction& a,
                               const ZeroList* union_zeros, std::int64_t prime_bound) {
    if (!a.positive_support()) throw ContractError("support", "ARTIN requires a test function supported in (0, inf)");
    const DirichletCharacter star = chi.primitive_inducer();
    const auto L = CompletedLFunction::dirichlet(star);
    if (!factor_zeros.entries.empty() && factor_zeros.source != L.label())
        throw ContractError("source", "both_sides_artin: zero list does not come from Lambda(chi*, .)");
    if (prime_bound == 0) prime_bound = support_prime_bound(a);
    FormulaReport r = make_report(FormulaId::ARTIN, factor_zeros, a, prime_bound);

    cplx poles{0.0, 0.0};
    for (const Pole& p : L.poles()) poles += static_cast<double>(p.order) * phi_transform(a, p.location);
    r.pole_terms = static_cast<int>(L.poles().size());
    r.spectral = poles - zero_sum(factor_zeros, a);

    // d_q form: sum over the union list with d_q = multiplicity among the factor zeros
    const ZeroList& over = union_zeros ? *union_zeros : factor_zeros;
    ZeroList weighted;
    weighted.height = over.height;
    for (const Zero& z : over.entries) {
        int d = 0;
        for (const Zero& f : factor_zeros.entries)
            if (std::abs(f.location - z.location) < 1e-9) d += f.multiplicity;
        if (d > 0) weighted.entries.push_back(Zero{z.location, d});
    }
    const cplx dq_form = poles - zero_sum(weighted, a);
    r.artin_form_deviation = std::abs(dq_form - r.spectral);

    r.geometric = geometric_side_artin(chi, a, prime_bound);
    r.tail_estimate = spectral_tail_estimate(a, factor_zeros.height, 1.0, L.log_conductor());
    finish(r);
    return r;
}

std::vector<cplx> moment_vector(const std::vector<cplx>& points, int R) {
    if (R < 0) throw ContractError("domain", "moment_vector: R must be >= 0");
    for (const cplx& u : points)
        if (u.real() < 0.0 || u.real() > 1.0) throw ContractError("domain", "moment_vector: point outside the strip");
    std::vector<cplx> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const cplx& x, const cplx& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    std::vector<cplx> out(static_cast<std::size_t>(R) + 1);
    std::vector<cplx> terms(sorted.size());
    for (int r = 0; r <= R; ++r) {
        for (std::size_t i = 0; i < sorted.size(); ++i) terms[i] = std::pow(sorted[i] - 2.0, -(2 + r));
        out[static_cast<std::size_t>(r)] = pairwise_sum(terms);
    }
    return out;
}

bool moments_distinguish(const std::vector<cplx>& A, const std::vector<cplx>& B, int R, double tol) {
    const auto ma = moment_vector(A, R), mb = moment_vector(B, R);
    for (int r = 0; r <= R; ++r)
        if (std::abs(ma[static_cast<std::size_t>(r)] - mb[static_cast<std::size_t>(r)]) > tol) return true;
    return false;
}

}  // namespace efl
