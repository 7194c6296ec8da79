#include "efl/test_function.hpp"

#include <algorithm>
#include <cmath>

#include "efl/arith.hpp"
#include "efl/quadrature.hpp"

namespace efl {

namespace {

int panel_count(const TestFunction& a, double max_abs_imag) {
    return 16 + static_cast<int>(std::ceil(max_abs_imag * a.width() / 2.0));
}

}  // namespace

TestFunction::TestFunction(double center, double width, double scale) : c_(center), w_(width), scale_(scale) {
    if (!(width > 0.0)) throw ContractError("domain", "TestFunction: width must be positive");
}

double TestFunction::reach() const { return std::max(std::abs(support_lo()), std::abs(support_hi())); }

double TestFunction::operator()(double t) const { return derivative(t, 0); }

double TestFunction::derivative(double t, int order) const {
    const double u = (t - c_) / w_;
    if (std::abs(u) >= 1.0) return 0.0;
    const double v = 1.0 - u * u;
    const double a = scale_ * std::exp(-1.0 / v);
    const double g1 = -2.0 * u / (v * v);
    switch (order) {
        case 0: return a;
        case 1: return a * g1 / w_;
        case 2: {
            const double g2 = -2.0 / (v * v) - 8.0 * u * u / (v * v * v);
            return a * (g1 * g1 + g2) / (w_ * w_);
        }
        default: throw ContractError("domain", "TestFunction::derivative: order must be 0, 1 or 2");
    }
}

cplx phi_transform(const TestFunction& a, cplx s) { return PhiEvaluator(a, std::abs(s.imag()))(s); }

PhiEvaluator::PhiEvaluator(const TestFunction& a, double max_abs_imag, int refinement) {
    const int panels = panel_count(a, max_abs_imag) * refinement;
    const GaussRule& rule = gauss_legendre(20);
    const double lo = a.support_lo(), h = 2.0 * a.width() / panels;
    for (int k = 0; k < panels; ++k) {
        const double mid = lo + (k + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = mid + 0.5 * h * rule.nodes[i];
            t_.push_back(t);
            wa_.push_back(0.5 * h * rule.weights[i] * a(t));
        }
    }
}

cplx PhiEvaluator::operator()(cplx s) const {
    std::vector<cplx> terms(t_.size());
    for (std::size_t j = 0; j < t_.size(); ++j) terms[j] = wa_[j] * std::exp(s * t_[j]);
    return pairwise_sum(terms);
}

std::vector<cplx> PhiEvaluator::evaluate(const std::vector<cplx>& points, Exec exec) const {
    return map<cplx>(points.size(), [&](std::size_t i) { return (*this)(points[i]); }, exec);
}

}  // namespace efl
