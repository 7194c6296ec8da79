#include "efl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "efl/characters.hpp"
#include "efl/explicit_formula.hpp"
#include "efl/lseries.hpp"
#include "efl/numberfield.hpp"
#include "efl/zeros.hpp"

namespace efl {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const TestFunction kStandardBump(1.0, 0.6);

}  // namespace

std::string CriterionResult::line() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-5s %s  measured=%.3e  threshold=%.1e  (%.2fs)  ", id.c_str(), passed ? "PASS" : "FAIL",
                  measured, threshold, seconds);
    return buf + detail;
}

nlohmann::json CriterionResult::to_json() const {
    return {{"id", id}, {"passed", passed}, {"measured", measured}, {"threshold", threshold}, {"detail", detail}};
}

CriterionResult ac1_explicit_formula_zeta() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC1";
    r.threshold = 1e-3;
    const auto zeta = CompletedLFunction::riemann();
    const ZeroList z200 = find_zeros(zeta, 200.0);
    const FormulaReport rep = both_sides_ef(z200, kStandardBump, 5);
    const ZeroList z400 = find_zeros(zeta, 400.0);
    const FormulaReport rep400 = both_sides_ef(z400, kStandardBump, 5);
    const double secs = since(t0);
    r.measured = rep.residual;
    const bool certified = z200.located_count == z200.verified_count && z400.located_count == z400.verified_count;
    const bool shrinks = rep400.residual < rep.residual;
    r.passed = certified && rep.residual <= r.threshold && shrinks && secs <= 120.0;
    r.detail = "T=200: " + std::to_string(z200.located_count) + " zeros certified; residual at T=400 " +
               fmt("%.3e", rep400.residual) + (shrinks ? " (shrinks)" : " (does not shrink)") + "; runtime limit 120s";
    r.seconds = secs;
    return r;
}

CriterionResult ac2_explicit_formula_chi4() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC2";
    r.threshold = 1e-3;
    const auto chi4 = character(4, 1);
    const ZeroList z = find_zeros(CompletedLFunction::dirichlet(chi4), 100.0);
    const FormulaReport rep = both_sides_efchi(chi4, z, kStandardBump);
    const double secs = since(t0);
    r.measured = rep.residual;
    r.passed = z.located_count == z.verified_count && rep.residual <= r.threshold && rep.pole_terms == 0 && secs <= 60.0;
    r.detail = std::to_string(z.located_count) + " zeros certified to T=100; pole terms: " + std::to_string(rep.pole_terms) +
               "; runtime limit 60s";
    r.seconds = secs;
    return r;
}

CriterionResult ac3_explicit_formula_gaussian_field() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC3";
    r.threshold = 1e-3;
    const ZeroList z = find_zeros(CompletedLFunction::dedekind_cyclotomic(4), 100.0);
    const FormulaReport rep = both_sides_efk(4, z, kStandardBump);
    // the ramified prime 2 (e = 2, f = 1, r = 1) contributes log 2 sum_k alpha(k log 2)
    const PrimeSplitting two = split_prime(4, 2);
    double ramified = 0.0;
    for (int k = 1; k * std::log(2.0) <= kStandardBump.reach(); ++k) ramified += kStandardBump(k * std::log(2.0));
    ramified *= two.r * two.f * std::log(2.0);
    const double without = std::abs(rep.spectral - (rep.geometric - ramified));
    r.measured = rep.residual;
    r.passed = z.located_count == z.verified_count && two.e == 2 && rep.residual <= r.threshold && without > r.threshold;
    r.detail = std::to_string(z.located_count) + " union zeros certified to T=100; ramified p=2 term " +
               fmt("%.4f", ramified) + " included (residual without it " + fmt("%.3e", without) + ")";
    r.seconds = since(t0);
    return r;
}

CriterionResult ac4_artin_consistency() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC4";
    r.threshold = 1e-12;
    const std::vector<TestFunction> bumps = {TestFunction(1.0, 0.6), TestFunction(1.62, 0.05), TestFunction(2.2, 0.9),
                                             TestFunction(0.75, 0.3)};
    double worst = 0.0;
    int count = 0;
    bool poles_empty = true;
    for (std::int64_t m = 3; m <= 12; ++m)
        for (const auto& chi : enumerate_characters(m)) {
            if (!chi.is_primitive() || chi.is_trivial()) continue;
            ++count;
            poles_empty = poles_empty && CompletedLFunction::dirichlet(chi).poles().empty();
            for (const auto& a : bumps) {
                const std::int64_t pb = support_prime_bound(a);
                worst = std::max(worst, std::abs(geometric_side_artin(chi, a, pb) - geometric_side_efchi(chi, a, pb)));
            }
            const FormulaReport rep = both_sides_artin(chi, ZeroList{}, bumps.front());
            poles_empty = poles_empty && rep.pole_terms == 0;
        }
    r.measured = worst;
    r.passed = worst <= r.threshold && poles_empty;
    r.detail = std::to_string(count) + " primitive characters x " + std::to_string(bumps.size()) +
               " bumps; ARTIN pole sum " + (poles_empty ? "empty" : "NOT empty");
    r.seconds = since(t0);
    return r;
}

CriterionResult ac5_functional_equation() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC5";
    r.threshold = 1e-7;
    std::vector<cplx> grid;
    for (double re : {0.05, 0.3, 0.5, 0.7, 0.95})
        for (double im : {-27.0, -4.1, 1.3, 19.5}) grid.emplace_back(re, im);
    double worst_abs = 0.0, worst_rel = 0.0;
    int count = 0;
    for (std::int64_t m = 3; m <= 12; ++m)
        for (const auto& chi : enumerate_characters(m)) {
            if (!chi.is_primitive() || chi.is_trivial()) continue;
            ++count;
            for (const cplx& s : grid) {
                const auto fe = functional_equation_residual(chi, s);
                worst_abs = std::max(worst_abs, fe.absolute);
                worst_rel = std::max(worst_rel, fe.relative);
            }
        }
    const std::vector<std::pair<DirichletCharacter, cplx>> mellin_points = {
        {character(4, 1), cplx{2.0, 0.0}},  {character(4, 1), cplx{3.0, 0.0}}, {character(5, 1), cplx{2.5, 0.0}},
        {character(7, 2), cplx{2.0, 1.0}},  {character(12, 3), cplx{3.5, -2.0}}};
    double worst_mellin = 0.0, worst_const = 0.0;
    for (const auto& [chi, s] : mellin_points) {
        const MellinCheck mc = mellin_check(chi, s);
        worst_mellin = std::max(worst_mellin, mc.residual);
        worst_const = std::max(worst_const, mc.constant_deviation);
    }
    r.measured = worst_abs;
    r.passed = worst_abs <= r.threshold && worst_rel <= 1e-9 && worst_mellin <= 1e-6 && worst_const <= 1e-8;
    r.detail = std::to_string(count) + " characters x 20 points (max relative " + fmt("%.2e", worst_rel) +
               "); Mellin max residual " + fmt("%.2e", worst_mellin) + " (limit 1e-6), theta constant vs W " +
               fmt("%.2e", worst_const);
    r.seconds = since(t0);
    return r;
}

CriterionResult ac6_gauss_sums() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC6";
    r.threshold = 1e-10;
    double worst = 0.0;
    int mismatches = 0, chars = 0;
    for (std::int64_t m = 1; m <= 50; ++m)
        for (const auto& chi : enumerate_characters(m)) {
            ++chars;
            if (is_primitive_by_criterion(chi) != chi.is_primitive()) ++mismatches;
            if (chi.is_primitive())
                worst = std::max(worst, std::abs(std::norm(gauss_sum(chi).value) - static_cast<double>(m)));
        }
    r.measured = worst;
    r.passed = worst <= r.threshold && mismatches == 0;
    r.detail = std::to_string(chars) + " characters (m <= 50); criterion/conductor mismatches: " + std::to_string(mismatches);
    r.seconds = since(t0);
    return r;
}

CriterionResult ac7_splitting() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC7";
    r.threshold = 1e-10;
    const std::vector<cplx> xs = {{-0.9, 0.0}, {-0.3, 0.0}, {0.2, 0.0}, {0.5, 0.3}, {0.0, 0.8}};
    const auto primes = primes_up_to(100);
    int bad_efr = 0;
    double worst = 0.0, worst_abs = 0.0;
    for (std::int64_t m = 1; m <= 30; ++m) {
        const auto chars = enumerate_characters(m);
        for (std::int64_t p : primes) {
            const PrimeSplitting s = split_prime(m, p);
            if (s.e * s.f * s.r != euler_phi(m)) ++bad_efr;
            for (const cplx& x : xs) {
                cplx prod{1.0, 0.0};
                for (const auto& chi : chars) prod *= artin_local_factor(chi, p, x);
                const cplx ref = std::pow(1.0 - std::pow(x, static_cast<int>(s.f)), static_cast<int>(s.r));
                // |ref| reaches 1.9^28 at x = -0.9, where one ulp exceeds 1e-10
                worst = std::max(worst, std::abs(prod - ref) / std::max(1.0, std::abs(ref)));
                worst_abs = std::max(worst_abs, std::abs(prod - ref));
            }
        }
    }
    const double secs = since(t0);
    r.measured = worst;
    r.passed = bad_efr == 0 && worst <= r.threshold && secs <= 10.0;
    r.detail = "m <= 30, p <= 100: e*f*r != phi(m) in " + std::to_string(bad_efr) +
               " cases; measured = max |prod - (1-x^f)^r| / max(1, |(1-x^f)^r|) (absolute " + fmt("%.2e", worst_abs) +
               "); runtime limit 10s";
    r.seconds = secs;
    return r;
}

// ---- random orbit models ---------------------------------------------------

namespace {

struct GroupWithCharacters {
    std::shared_ptr<const FiniteGroup> group;
    std::function<FiniteRep(std::mt19937_64&)> random_character;
};

GroupWithCharacters random_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 10);
    const int kind = pick(rng);
    if (kind <= 7) {
        auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(kind + 1));
        return {g, [g](std::mt19937_64& r) {
                    std::uniform_int_distribution<std::int64_t> k(0, g->order() - 1);
                    return FiniteRep::cyclic_character(g, k(r));
                }};
    }
    if (kind <= 9) {
        const int a = 2, b = kind == 8 ? 2 : 4;
        auto g = std::make_shared<const FiniteGroup>(FiniteGroup::product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b)));
        return {g, [g, a, b](std::mt19937_64& r) {
                    const std::int64_t L = std::lcm(a, b);
                    std::uniform_int_distribution<std::int64_t> k1(0, a - 1), k2(0, b - 1);
                    const std::int64_t c1 = k1(r), c2 = k2(r);
                    std::vector<std::int64_t> e(static_cast<std::size_t>(a * b));
                    for (int x = 0; x < a * b; ++x) e[x] = mod(c1 * (x / b) * (L / a) + c2 * (x % b) * (L / b), L);
                    return FiniteRep::one_dim(g, e, L);
                }};
    }
    auto g = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    return {g, [g](std::mt19937_64& r) {
                std::vector<std::int64_t> e(6, 0);
                if (std::uniform_int_distribution<int>(0, 3)(r) > 0)
                    for (int x = 0; x < 6; ++x) e[x] = g->pow(x, 3) == g->identity() ? 0 : 1;  // sign
                return FiniteRep::one_dim(g, e, 2);
            }};
}

bool trivial_on(const FiniteRep& rho, const std::vector<int>& h) {
    const auto& [e, n] = *rho.exact();
    return std::all_of(h.begin(), h.end(), [&](int u) { return mod(e[static_cast<std::size_t>(u)], n) == 0; });
}

}  // namespace

RandomTraceInstance random_trace_instance(std::mt19937_64& rng) {
    GroupWithCharacters gc = random_group(rng);
    const FiniteGroup& G = *gc.group;
    FiniteRep rho = gc.random_character(rng);
    std::vector<std::vector<int>> allowed;  // trivial subgroup plus those where rho is nontrivial
    for (const auto& h : G.subgroups())
        if (h.size() == 1 || !trivial_on(rho, h)) allowed.push_back(h);

    OrbitModel model;
    model.group = gc.group;
    model.label = "random";
    std::uniform_int_distribution<int> n_orbits(1, 4);
    std::uniform_real_distribution<double> len(0.2, 1.5);
    const int n = n_orbits(rng);
    for (int i = 0; i < n; ++i) {
        PrimitiveOrbit o;
        o.length = len(rng);
        o.stabilizer = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
        std::vector<int> normalising;
        for (int g = 0; g < G.order(); ++g)
            if (G.normalizes(g, o.stabilizer)) normalising.push_back(g);
        o.holonomy = normalising[std::uniform_int_distribution<std::size_t>(0, normalising.size() - 1)(rng)];
        model.orbits.push_back(o);
    }
    model.validate();

    std::uniform_real_distribution<double> center(0.5, 3.0), sgn(0.0, 1.0);
    double c = center(rng);
    if (sgn(rng) < 0.3) c = -c;
    const double w = std::uniform_real_distribution<double>(0.1, std::min(std::abs(c) - 0.05, 1.2))(rng);
    return {std::move(model), std::move(rho), TestFunction(c, w)};
}

CriterionResult ac8_ramified_trace_formula(std::uint64_t seed) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC8";
    r.threshold = 1e-12;
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    int ramified = 0, ramified_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const RandomTraceInstance inst = random_trace_instance(rng);
        const OrbitSide st = statement_side(inst.model, inst.rho, inst.alpha);
        const OrbitSide pf = proof_side(inst.model, inst.rho, inst.alpha);
        worst = std::max(worst, std::abs(st.total - pf.total));
        for (std::size_t i = 0; i < inst.model.orbits.size(); ++i) {
            if (!inst.model.orbits[i].ramified()) continue;
            ++ramified;
            const bool exact_zero = exact_character_sum_vanishes(inst.rho, inst.model.orbits[i].stabilizer) &&
                                    st.per_orbit[i] == cplx{0.0, 0.0} && std::abs(pf.per_orbit[i]) <= 1e-14;
            if (!exact_zero) ++ramified_bad;
        }
    }
    r.measured = worst;
    r.passed = worst <= r.threshold && ramified_bad == 0;
    r.detail = "200 random models; " + std::to_string(ramified) + " ramified orbits, " + std::to_string(ramified_bad) +
               " with a nonzero contribution";
    r.seconds = since(t0);
    return r;
}

CriterionResult ac9_averaging_identities() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC9";
    r.threshold = 1e-14;
    double worst = 0.0;
    int mismatch_neg = 0, agree_pos = 0, averaged_matches = 0;
    const FixedPointDatum real{PlaceType::Real, std::nullopt, true};
    auto rel = [](cplx a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    for (int i = 0; i < 100; ++i) {
        const double t = -3.0 + 6.0 * (i + 0.5) / 100.0;
        const double e = std::exp(t);
        // closed forms written directly in exp, independent of the expm1-based factors
        const double plus = t > 0 ? 1.0 / (1.0 - std::exp(-2.0 * t)) : e / (1.0 - e * e);
        const double minus = t > 0 ? std::exp(-t) / (1.0 - std::exp(-2.0 * t)) : e * e / (1.0 - e * e);
        const cplx av_p = averaged_fixed_point_factor(t, 1.0), av_m = averaged_fixed_point_factor(t, -1.0);
        worst = std::max({worst, rel(av_p, plus), rel(av_m, minus)});
        const double gs = gs_fixed_point_factor(real, t), w = efk_weight(PlaceType::Real, t);
        if (t < 0 && std::abs(gs - w) > 1e-3 * std::abs(w)) ++mismatch_neg;
        if (t > 0 && rel(gs, w) <= 1e-14) ++agree_pos;
        if (rel(av_p, w) <= 1e-14) ++averaged_matches;
    }
    r.measured = worst;
    r.passed = worst <= r.threshold && mismatch_neg == 50 && agree_pos == 50 && averaged_matches == 100;
    r.detail = "100 t-points in [-3,3]; raw GS real factor differs from the Dedekind weight at " +
               std::to_string(mismatch_neg) + "/50 points t<0 (flagged), agrees at " + std::to_string(agree_pos) +
               "/50 t>0; averaged factor matches at " + std::to_string(averaged_matches) + "/100";
    r.seconds = since(t0);
    return r;
}

CriterionResult ac10_zero_certification() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC10";
    r.threshold = 1e-6;
    const ZeroList zeta = find_zeros(CompletedLFunction::riemann(), 50.0);
    const ZeroList chi4 = find_zeros(CompletedLFunction::dirichlet(character(4, 1)), 50.0);
    int upper = 0;
    for (const Zero& z : zeta.entries)
        if (z.location.imag() > 0) upper += z.multiplicity;
    r.measured = std::max(zeta.max_real_deviation, chi4.max_real_deviation);
    r.passed = zeta.located_count == zeta.verified_count && chi4.located_count == chi4.verified_count && upper == 10 &&
               r.measured <= r.threshold;
    r.detail = "zeta: " + std::to_string(upper) + " zeros in (0,50], " + std::to_string(zeta.located_count) + "/" +
               std::to_string(zeta.verified_count) + " located/box over |Im|<=50; chi4: " +
               std::to_string(chi4.located_count) + "/" + std::to_string(chi4.verified_count) +
               "; measured = max |Re - 1/2|";
    r.seconds = since(t0);
    return r;
}

// ---- random multisets ------------------------------------------------------

namespace {

bool separated(const std::vector<std::pair<cplx, int>>& pts, cplx u, double sep, int skip = -1) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (static_cast<int>(i) != skip && std::abs(pts[i].first - u) < sep) return false;
    return true;
}

int card(const std::vector<std::pair<cplx, int>>& pts) {
    int n = 0;
    for (const auto& p : pts) n += p.second;
    return n;
}

cplx random_point(std::mt19937_64& rng) {
    return {std::uniform_real_distribution<double>(0.0, 1.0)(rng), std::uniform_real_distribution<double>(-2.0, 2.0)(rng)};
}

}  // namespace

StripMultiset random_strip_multiset(std::mt19937_64& rng, int max_card) {
    StripMultiset s;
    s.label = "random";
    const int target = std::uniform_int_distribution<int>(1, max_card)(rng);
    while (card(s.points) < target) {
        const cplx u = random_point(rng);
        if (!separated(s.points, u, 0.1)) continue;
        const int m = (card(s.points) + 2 <= target && std::uniform_int_distribution<int>(0, 3)(rng) == 0) ? 2 : 1;
        s.points.emplace_back(u, m);
    }
    return s;
}

StripMultiset perturbed_multiset(std::mt19937_64& rng, const StripMultiset& a, int max_card) {
    for (;;) {
        StripMultiset b = a;
        b.label = "perturbed";
        const int mode = std::uniform_int_distribution<int>(0, 4)(rng);
        const int idx = std::uniform_int_distribution<int>(0, static_cast<int>(a.points.size()) - 1)(rng);
        if (mode == 0) {
            b = random_strip_multiset(rng, max_card);
        } else if (mode == 1) {
            // move one point by 0.1 .. 0.5
            const double rad = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
            const double ang = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
            const cplx u = a.points[idx].first + std::polar(rad, ang);
            if (u.real() < 0.0 || u.real() > 1.0 || !separated(a.points, u, 0.1, idx)) continue;
            b.points[idx].first = u;
        } else if (mode == 2) {
            int& m = b.points[idx].second;
            if (m == 2) {
                m = 1;
            } else if (card(a.points) < max_card) {
                m = 2;
            } else {
                continue;
            }
        } else if (mode == 3) {
            if (card(a.points) >= max_card) continue;
            const cplx u = random_point(rng);
            if (!separated(a.points, u, 0.1)) continue;
            b.points.emplace_back(u, 1);
        } else {
            if (a.points.size() < 2) continue;
            b.points.erase(b.points.begin() + idx);
        }
        // reject accidental equality
        auto key = [](StripMultiset s) {
            std::sort(s.points.begin(), s.points.end(), [](const auto& x, const auto& y) {
                return x.first.real() != y.first.real() ? x.first.real() < y.first.real() : x.first.imag() < y.first.imag();
            });
            return s.points;
        };
        if (key(a) != key(b)) return b;
    }
}

CriterionResult ac11_moments(std::uint64_t seed) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC11";
    r.threshold = 1e-8;
    std::mt19937_64 rng(seed);
    int missed = 0, false_alarms = 0;
    double smallest_gap = 1e300;
    for (int trial = 0; trial < 500; ++trial) {
        const StripMultiset a = random_strip_multiset(rng);
        const StripMultiset b = perturbed_multiset(rng, a);
        const MomentComparison cmp = compare(a, b, 12, 1e-8);
        if (cmp.equal) ++missed;
        smallest_gap = std::min(smallest_gap, cmp.max_moment_gap);
        StripMultiset shuffled = a;
        std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
        const MomentComparison same = compare(a, shuffled, 12, 1e-8);
        if (!same.equal || !same.bijection) ++false_alarms;
    }
    const double secs = since(t0);
    r.measured = smallest_gap;
    r.passed = missed == 0 && false_alarms == 0 && secs <= 5.0;
    r.detail = "500 distinct pairs: " + std::to_string(missed) + " not distinguished; equal pairs falsely distinguished: " +
               std::to_string(false_alarms) + "; measured = smallest max moment gap (must exceed tol); runtime limit 5s";
    r.seconds = secs;
    return r;
}

// ---- invariant trace -------------------------------------------------------

RandomInvariantInstance random_invariant_instance(std::mt19937_64& rng, bool force_no_invariants) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int dim = std::uniform_int_distribution<int>(1, 5)(rng);
    auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
    std::vector<int> ks(static_cast<std::size_t>(dim));
    for (int& k : ks) {
        k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (force_no_invariants && n > 1)
            while (k == 0) k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    }
    if (force_no_invariants && n == 1) return random_invariant_instance(rng, true);

    // random unitary change of basis
    Matrix R(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) R(i, j) = cplx{u(rng), u(rng)};
    const Matrix U = Eigen::HouseholderQR<Matrix>(R).householderQ();

    std::vector<Matrix> mats;
    for (int g = 0; g < n; ++g) {
        Matrix D = Matrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) D(i, i) = root_of_unity(static_cast<std::int64_t>(ks[i]) * g, n);
        mats.push_back(U * D * U.adjoint());
    }
    const cplx z{u(rng), 3.0 * u(rng)};
    // block structure: z Id + strictly upper part on each isotypic block, other blocks get their own eigenvalue
    std::vector<cplx> block_value(static_cast<std::size_t>(n));
    block_value[0] = z;
    for (int c = 1; c < n; ++c) block_value[c] = cplx{u(rng), u(rng)};
    Matrix theta = Matrix::Zero(dim, dim);
    int expected = 0;
    for (int i = 0; i < dim; ++i) {
        theta(i, i) = block_value[ks[i]];
        if (ks[i] == 0) ++expected;
        for (int j = i + 1; j < dim; ++j)
            if (ks[i] == ks[j]) theta(i, j) = cplx{u(rng), u(rng)};
    }
    theta = U * theta * U.adjoint();
    const double t = u(rng);
    return {FiniteRep(G, std::move(mats)), theta, z, t, expected};
}

CriterionResult ac12_invariant_trace(std::uint64_t seed) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = "AC12";
    r.threshold = 1e-10;
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    int zero_dim = 0, dim_mismatch = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = random_invariant_instance(rng, trial % 5 == 0);
        const InvariantTrace res = invariant_trace_check(inst.action, inst.theta, inst.z, inst.t);
        worst = std::max(worst, res.residual);
        if (res.dim != inst.expected_dim) ++dim_mismatch;
        if (res.dim == 0) ++zero_dim;
    }
    r.measured = worst;
    r.passed = worst <= r.threshold && dim_mismatch == 0 && zero_dim > 0;
    r.detail = "50 instances, " + std::to_string(zero_dim) + " with d_q = 0; invariant-dimension mismatches: " +
               std::to_string(dim_mismatch);
    r.seconds = since(t0);
    return r;
}

std::vector<NamedCriterion> acceptance_suite() {
    return {
        {"AC1", [](std::uint64_t) { return ac1_explicit_formula_zeta(); }},
        {"AC2", [](std::uint64_t) { return ac2_explicit_formula_chi4(); }},
        {"AC3", [](std::uint64_t) { return ac3_explicit_formula_gaussian_field(); }},
        {"AC4", [](std::uint64_t) { return ac4_artin_consistency(); }},
        {"AC5", [](std::uint64_t) { return ac5_functional_equation(); }},
        {"AC6", [](std::uint64_t) { return ac6_gauss_sums(); }},
        {"AC7", [](std::uint64_t) { return ac7_splitting(); }},
        {"AC8", [](std::uint64_t s) { return ac8_ramified_trace_formula(s); }},
        {"AC9", [](std::uint64_t) { return ac9_averaging_identities(); }},
        {"AC10", [](std::uint64_t) { return ac10_zero_certification(); }},
        {"AC11", [](std::uint64_t s) { return ac11_moments(s); }},
        {"AC12", [](std::uint64_t s) { return ac12_invariant_trace(s); }},
    };
}

}  // namespace efl
