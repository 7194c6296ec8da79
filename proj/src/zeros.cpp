#include "efl/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace efl {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sample {
    cplx s;
    cplx log_pref;
    cplx dir;
};

Sample sample(const CompletedLFunction& L, cplx s) { return {s, L.log_prefactor(s), L.dirichlet_part(s)}; }

// principal arg of Lambda(b)/Lambda(a)
double arg_ratio(const Sample& a, const Sample& b) {
    const cplx r = std::exp(b.log_pref - a.log_pref) * (b.dir / a.dir);
    return std::arg(r);
}

struct Walk {
    double arg = 0;
    double min_mod = 1e300;
    std::size_t evals = 0;
    bool failed = false;
};

void walk(const CompletedLFunction& L, const Sample& a, const Sample& b, double whole, int depth, Walk& w) {
    const Sample m = sample(L, 0.5 * (a.s + b.s));
    ++w.evals;
    w.min_mod = std::min(w.min_mod, std::abs(m.dir));
    const double left = arg_ratio(a, m), right = arg_ratio(m, b);
    if (std::abs(left) < 0.5 && std::abs(right) < 0.5 && std::abs(left + right - whole) < 1e-9) {
        w.arg += left + right;
        return;
    }
    if (depth <= 0) {
        w.failed = true;
        return;
    }
    walk(L, a, m, left, depth - 1, w);
    walk(L, m, b, right, depth - 1, w);
}

Walk boundary_walk(const CompletedLFunction& L, const Box& box, Exec exec) {
    const cplx corners[4] = {{box.re_lo, box.im_lo}, {box.re_hi, box.im_lo}, {box.re_hi, box.im_hi}, {box.re_lo, box.im_hi}};
    std::vector<std::pair<cplx, cplx>> pieces;
    for (int k = 0; k < 4; ++k) {
        const cplx a = corners[k], b = corners[(k + 1) % 4];
        const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / 0.25)));
        for (int i = 0; i < n; ++i)
            pieces.emplace_back(a + (b - a) * (static_cast<double>(i) / n), a + (b - a) * (static_cast<double>(i + 1) / n));
    }
    auto parts = map<Walk>(
        pieces.size(),
        [&](std::size_t i) {
            Walk w;
            const Sample a = sample(L, pieces[i].first), b = sample(L, pieces[i].second);
            w.evals = 2;
            w.min_mod = std::min(std::abs(a.dir), std::abs(b.dir));
            walk(L, a, b, arg_ratio(a, b), 40, w);
            return w;
        },
        exec);
    std::vector<double> args(parts.size());
    Walk total;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        args[i] = parts[i].arg;
        total.min_mod = std::min(total.min_mod, parts[i].min_mod);
        total.evals += parts[i].evals;
        total.failed = total.failed || parts[i].failed;
    }
    total.arg = pairwise_sum(args);
    return total;
}

bool inside(const Box& b, cplx z) {
    return z.real() > b.re_lo && z.real() < b.re_hi && z.imag() > b.im_lo && z.imag() < b.im_hi;
}

double mean_gap(const CompletedLFunction& L, double T) {
    // zero density of a degree-d function: (1/2pi) (d log(t/2pi) + log N)
    const double d = static_cast<double>(L.factors().size());
    const double density = (d * std::log(std::max(T, 2.0 * kPi * std::numbers::e) / (2.0 * kPi)) + L.log_conductor()) / (2.0 * kPi);
    return 1.0 / std::max(density, 0.05);
}

cplx newton_refine(const CompletedLFunction& L, cplx s) {
    constexpr double h = 1e-5;
    for (int it = 0; it < 8; ++it) {
        const cplx f = L.dirichlet_part(s);
        const cplx df = (L.dirichlet_part(s + h) - L.dirichlet_part(s - h)) / (2.0 * h);
        const cplx step = f / df;
        s -= step;
        if (std::abs(step) < 1e-14) break;
    }
    return s;
}

ZeroList single_factor_zeros(const CompletedLFunction& L, double T, const ZeroSearchOptions& opt) {
    const BoxCount bc = count_zeros_in_box(L, Box{-0.1, 1.1, -T, T}, opt.exec);
    const double Teff = bc.box.im_hi;
    const bool sd = L.self_dual();
    const double t0 = sd ? 0.0 : -Teff;

    ZeroList out;
    out.source = L.label();
    out.height = Teff;
    out.verified_count = bc.zeros;

    double step = mean_gap(L, Teff) / 8.0;
    std::vector<double> heights;
    for (int attempt = 0;; ++attempt) {
        const std::size_t n = static_cast<std::size_t>(std::ceil((Teff - t0) / step)) + 1;
        const double h = (Teff - t0) / static_cast<double>(n - 1);
        auto grid = map<double>(
            n, [&](std::size_t i) { return rotated_central_value(L, t0 + h * static_cast<double>(i)).real(); }, opt.exec);
        std::vector<std::size_t> brackets;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if ((grid[i] < 0.0) != (grid[i + 1] < 0.0) || grid[i + 1] == 0.0) brackets.push_back(i);
        heights = map<double>(
            brackets.size(),
            [&](std::size_t k) {
                double a = t0 + h * static_cast<double>(brackets[k]), b = a + h;
                double fa = grid[brackets[k]];
                for (int it = 0; it < 200 && b - a > opt.bisection_tol; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double fm = rotated_central_value(L, mid).real();
                    if (fm == 0.0) return mid;
                    if ((fm < 0.0) == (fa < 0.0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                return 0.5 * (a + b);
            },
            opt.exec);
        std::erase_if(heights, [&](double t) { return std::abs(t) > Teff || (sd && t <= 0.0); });
        const int located = static_cast<int>(heights.size()) * (sd ? 2 : 1);
        out.scan_step = h;
        out.scan_refinements = attempt;
        if (located == bc.zeros) break;
        if (attempt >= opt.max_refinements)
            throw ContractError("completeness", "find_zeros: " + L.label() + " located " + std::to_string(located) +
                                                    " zeros but the box count is " + std::to_string(bc.zeros));
        step *= 0.5;
    }

    std::sort(heights.begin(), heights.end());
    auto refined = map<Zero>(
        heights.size(),
        [&](std::size_t k) {
            Zero z{newton_refine(L, cplx{0.5, heights[k]}), 1};
            if (std::abs(z.location - cplx{0.5, heights[k]}) > 1e-6) z.location = cplx{0.5, heights[k]};
            if (opt.certify_multiplicity) {
                double gap = 0.2;
                if (k > 0) gap = std::min(gap, heights[k] - heights[k - 1]);
                if (k + 1 < heights.size()) gap = std::min(gap, heights[k + 1] - heights[k]);
                if (sd) gap = std::min(gap, 2.0 * heights[k]);
                const double d = 0.45 * gap;
                const BoxCount small =
                    count_zeros_in_box(L, Box{0.5 - 0.2, 0.5 + 0.2, heights[k] - d, heights[k] + d}, Exec::Serial);
                if (small.zeros < 1)
                    throw ContractError("contract", "find_zeros: located zero not confirmed by its box count");
                z.multiplicity = small.zeros;
            }
            return z;
        },
        opt.exec);

    for (const Zero& z : refined) {
        out.entries.push_back(z);
        if (sd) out.entries.push_back(Zero{std::conj(z.location), z.multiplicity});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const Zero& a, const Zero& b) { return a.location.imag() < b.location.imag(); });
    for (const Zero& z : out.entries) {
        out.located_count += z.multiplicity;
        out.max_real_deviation = std::max(out.max_real_deviation, std::abs(z.location.real() - 0.5));
    }
    if (out.located_count != out.verified_count)
        throw ContractError("completeness", "find_zeros: multiplicity-weighted count differs from the box count");
    return out;
}

}  // namespace

BoxCount count_zeros_in_box(const CompletedLFunction& L, Box box, Exec exec) {
    BoxCount out;
    for (int attempt = 0;; ++attempt) {
        const Walk w = boundary_walk(L, box, exec);
        out.evaluations += w.evals;
        out.min_modulus = w.min_mod;
        if (!w.failed && w.min_mod >= 1e-6) {
            const double turns = w.arg / (2.0 * kPi);
            out.winding = static_cast<int>(std::lround(turns));
            out.turn_error = std::abs(turns - out.winding);
            if (out.turn_error > 0.01)
                throw ContractError("contract", "count_zeros_in_box: winding number not stable to 0.01 turns");
            break;
        }
        if (attempt >= 5 || w.min_mod < 1e-12)
            throw ContractError("boundary", "count_zeros_in_box: zero too close to the box boundary");
        const double delta = 1e-3 * (attempt + 1);
        box.re_lo -= delta;
        box.re_hi += delta;
        box.im_lo -= delta;
        box.im_hi += delta;
        ++out.perturbations;
    }
    out.box = box;
    for (const Pole& p : L.poles())
        if (inside(box, p.location)) out.poles_inside += p.order;
    out.zeros = out.winding + out.poles_inside;
    return out;
}

cplx rotated_central_value(const CompletedLFunction& L, double t) {
    if (L.factors().size() != 1) throw ContractError("domain", "rotated_central_value: single-factor source required");
    const DirichletCharacter& chi = L.factors().front();
    const cplx W = chi.conductor() == 1 ? cplx{1.0, 0.0} : root_number(chi);
    const cplx s{0.5, t};
    const double phase = L.log_prefactor(s).imag();
    return std::exp(cplx{0.0, phase}) / std::sqrt(W) * L.dirichlet_part(s);
}

ZeroList find_zeros(const CompletedLFunction& L, double T, const ZeroSearchOptions& opt) {
    if (!(T > 0.0) || T > 400.0) throw ContractError("domain", "find_zeros: height must lie in (0, 400]");
    if (L.factors().size() == 1) return single_factor_zeros(L, T, opt);

    const BoxCount bc = count_zeros_in_box(L, Box{-0.1, 1.1, -T, T}, opt.exec);
    const double Teff = bc.box.im_hi;
    std::vector<ZeroList> parts;
    for (std::size_t i = 0; i < L.factors().size(); ++i) {
        ZeroList part = single_factor_zeros(L.factor_function(i), Teff, opt);
        std::erase_if(part.entries, [&](const Zero& z) { return std::abs(z.location.imag()) > Teff; });
        parts.push_back(std::move(part));
    }
    ZeroList out = merge_zero_lists(parts, L.label());
    out.height = Teff;
    out.verified_count = bc.zeros;
    if (out.located_count != out.verified_count)
        throw ContractError("completeness", "find_zeros: union of factor zeros (" + std::to_string(out.located_count) +
                                                ") differs from the box count (" + std::to_string(bc.zeros) + ")");
    return out;
}

ZeroList merge_zero_lists(const std::vector<ZeroList>& parts, const std::string& source) {
    ZeroList out;
    out.source = source;
    for (const ZeroList& p : parts) {
        out.height = out.height == 0.0 ? p.height : std::min(out.height, p.height);
        out.scan_refinements = std::max(out.scan_refinements, p.scan_refinements);
        for (const Zero& z : p.entries) out.entries.push_back(z);
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const Zero& a, const Zero& b) {
        return a.location.imag() != b.location.imag() ? a.location.imag() < b.location.imag()
                                                      : a.location.real() < b.location.real();
    });
    std::vector<Zero> merged;
    for (const Zero& z : out.entries) {
        if (!merged.empty() && std::abs(merged.back().location - z.location) < 1e-9)
            merged.back().multiplicity += z.multiplicity;
        else
            merged.push_back(z);
    }
    out.entries = std::move(merged);
    for (const Zero& z : out.entries) {
        out.located_count += z.multiplicity;
        out.max_real_deviation = std::max(out.max_real_deviation, std::abs(z.location.real() - 0.5));
    }
    out.verified_count = out.located_count;
    return out;
}

std::string zeros_csv(const ZeroList& z) {
    std::string out = "re,im,multiplicity\n";
    char buf[96];
    for (const Zero& e : z.entries) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%d\n", e.location.real(), e.location.imag(), e.multiplicity);
        out += buf;
    }
    return out;
}

nlohmann::json certification_summary(const ZeroList& z) {
    return {{"source", z.source},
            {"height", z.height},
            {"zeros", z.entries.size()},
            {"located_count", z.located_count},
            {"verified_count", z.verified_count},
            {"certified", z.located_count == z.verified_count},
            {"max_real_deviation", z.max_real_deviation},
            {"scan_step", z.scan_step},
            {"scan_refinements", z.scan_refinements}};
}

}  // namespace efl
