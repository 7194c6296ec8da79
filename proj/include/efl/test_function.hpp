#pragma once

// The bump family alpha(t) = scale * exp(-1/(1 - u^2)), u = (t - c)/w, and its
// Laplace-type transform Phi(s) = int e^{st} alpha(t) dt.

#include <complex>
#include <vector>

#include <json.hpp>

#include "efl/parallel.hpp"

namespace efl {

using cplx = std::complex<double>;

class TestFunction {
public:
    TestFunction(double center, double width, double scale = 1.0);

    double center() const { return c_; }
    double width() const { return w_; }
    double scale() const { return scale_; }
    double support_lo() const { return c_ - w_; }
    double support_hi() const { return c_ + w_; }
    /// Largest |t| in the closed support.
    double reach() const;

    /// Supported in (0, inf).
    bool positive_support() const { return support_lo() > 0.0; }
    /// 0 lies in the closed support; alpha(0) = 0 is enforced through the converse.
    bool support_contains_zero() const { return support_lo() <= 0.0 && support_hi() >= 0.0; }

    double operator()(double t) const;
    /// alpha^{(order)}(t) for order 0, 1, 2.
    double derivative(double t, int order) const;

    nlohmann::json to_json() const { return {{"c", c_}, {"w", w_}}; }

private:
    double c_, w_, scale_;
};

/// Composite Gauss-Legendre quadrature of Phi(s); the panel count grows with |Im s|.
cplx phi_transform(const TestFunction& a, cplx s);

/// Phi on many points with one shared set of nodes sized for the largest |Im s|.
class PhiEvaluator {
public:
    PhiEvaluator(const TestFunction& a, double max_abs_imag, int refinement = 1);

    cplx operator()(cplx s) const;
    std::vector<cplx> evaluate(const std::vector<cplx>& points, Exec exec = Exec::Parallel) const;
    std::size_t nodes() const { return t_.size(); }

private:
    std::vector<double> t_;
    std::vector<double> wa_;  // quadrature weight times alpha
};

}  // namespace efl
