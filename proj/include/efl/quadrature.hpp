#pragma once

// Gauss-Legendre rules, composite and adaptive (interval bisection) drivers.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace efl {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; cached, safe to call concurrently.
const GaussRule& gauss_legendre(int n);

template <class T>
struct QuadResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class F>
auto gauss_panel(F&& f, double a, double b, const GaussRule& rule) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    using T = decltype(f(mid));
    T acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return T(acc * half);
}

template <class F, class T>
void adaptive_step(F& f, double a, double b, T whole, double tol, int depth, const GaussRule& rule,
                   QuadResult<T>& out) {
    const double mid = 0.5 * (a + b);
    const T left = gauss_panel(f, a, mid, rule);
    const T right = gauss_panel(f, mid, b, rule);
    out.evaluations += 2 * rule.nodes.size();
    const double err = magnitude(T(left + right - whole));
    if (err <= tol || depth <= 0) {
        out.value += left + right;
        out.error_estimate += err;
        return;
    }
    adaptive_step(f, a, mid, left, 0.5 * tol, depth - 1, rule, out);
    adaptive_step(f, mid, b, right, 0.5 * tol, depth - 1, rule, out);
}

}  // namespace detail

/// Adaptive Gauss-Legendre: a panel is accepted when the rule on the panel and
/// the rule on its two halves agree to within the panel's share of `tol`.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol = 1e-10, int order = 20, int max_depth = 48) {
    using T = decltype(f(a));
    QuadResult<T> out;
    if (a == b) return out;
    const GaussRule& rule = gauss_legendre(order);
    const T whole = detail::gauss_panel(f, a, b, rule);
    out.evaluations = rule.nodes.size();
    detail::adaptive_step(f, a, b, whole, tol, max_depth, rule, out);
    return out;
}

/// Fixed composite rule: `panels` equal panels with an `order`-point rule each.
template <class F>
auto integrate_composite(F&& f, double a, double b, int panels, int order = 20) {
    using T = decltype(f(a));
    const GaussRule& rule = gauss_legendre(order);
    const double h = (b - a) / panels;
    T acc{};
    for (int k = 0; k < panels; ++k) acc += detail::gauss_panel(f, a + k * h, a + (k + 1) * h, rule);
    return acc;
}

}  // namespace efl
