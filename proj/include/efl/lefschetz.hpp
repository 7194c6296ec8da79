#pragma once

// Finite orbit model of a flow on a Galois-covered foliated space: the orbit
// side of the ramified trace formula, its coset-level expansion, fixed-point
// factors at real and complex places, and the averaged-invariant trace identity.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "efl/parallel.hpp"
#include "efl/test_function.hpp"

namespace efl {

using Matrix = Eigen::MatrixXcd;

/// Finite group on {0, ..., n-1} given by its multiplication table; axioms are
/// verified exhaustively on construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::string label = "table");

    static FiniteGroup cyclic(int n);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);  // (i, j) -> i * |b| + j
    static FiniteGroup symmetric3();                                       // permutations of {0,1,2}
    static FiniteGroup from_json(const nlohmann::json& j);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, long long k) const;
    const std::string& label() const { return label_; }

    bool is_subgroup(const std::vector<int>& h) const;
    bool normalizes(int g, const std::vector<int>& h) const;
    /// Left coset representatives of H, the smallest element of each coset.
    std::vector<int> coset_representatives(const std::vector<int>& h) const;
    /// All subgroups (closure of every pair of elements; enough for order <= 8).
    std::vector<std::vector<int>> subgroups() const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::string label_;
};

/// Unitary representation g -> rho(g); homomorphism and unitarity checked to 1e-12.
class FiniteRep {
public:
    FiniteRep(std::shared_ptr<const FiniteGroup> g, std::vector<Matrix> mats);

    /// One-dimensional representation g -> exp(2 pi i e(g) / n), kept exactly.
    static FiniteRep one_dim(std::shared_ptr<const FiniteGroup> g, std::vector<std::int64_t> exponents, std::int64_t n);
    static FiniteRep trivial(std::shared_ptr<const FiniteGroup> g, int dim = 1);
    /// Character k of a cyclic group: g -> exp(2 pi i k g / |G|).
    static FiniteRep cyclic_character(std::shared_ptr<const FiniteGroup> g, std::int64_t k);
    /// Standard 2-dimensional representation of symmetric3().
    static FiniteRep s3_standard(std::shared_ptr<const FiniteGroup> g);
    static FiniteRep direct_sum(const std::vector<FiniteRep>& parts);
    static FiniteRep from_json(std::shared_ptr<const FiniteGroup> g, const nlohmann::json& j);

    int dim() const { return static_cast<int>(mats_.front().rows()); }
    const Matrix& operator()(int g) const { return mats_[static_cast<std::size_t>(g)]; }
    cplx trace(int g) const { return mats_[static_cast<std::size_t>(g)].trace(); }
    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }

    /// Exponent data of a one-dimensional representation built by one_dim().
    const std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>>& exact() const { return exact_; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Matrix> mats_;
    std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>> exact_;
};

/// P = (1/|H|) sum_{u in H} rho(u); asserts P^2 = P and that P commutes with
/// rho(g) for every g normalising H (1e-12).
Matrix inertia_projector(const FiniteRep& rho, const std::vector<int>& h);

/// Exact test that sum_{s in H} rho(s) = 0 for a one-dimensional rho built
/// from exponents: the exponents are equidistributed over a nontrivial subgroup of Z/n.
bool exact_character_sum_vanishes(const FiniteRep& rho, const std::vector<int>& h);

struct SignTable {
    bool all_plus = true;
    // sign[k] per group element, for k in [-kmax, -1] and [1, kmax]
    std::vector<std::pair<int, std::vector<int>>> rows;
    int sign(int k, int g) const;
    bool covers(int k) const;
};

struct PrimitiveOrbit {
    double length;            // T0
    int holonomy;             // h0
    std::vector<int> stabilizer;  // H
    SignTable signs;
    bool ramified() const { return stabilizer.size() > 1; }
};

enum class PlaceType { Real, Complex };

struct FixedPointDatum {
    PlaceType place = PlaceType::Real;
    std::optional<int> involution;  // complex places only
    bool leafwise_rotation = true;
};

struct OrbitModel {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<PrimitiveOrbit> orbits;
    std::vector<FixedPointDatum> fixed_points;
    std::string label;

    /// Subgroups, normalising holonomies, involutions, and sign-table constancy
    /// on inertia translates; throws on violations.
    void validate() const;
    static OrbitModel from_json(const nlohmann::json& j);
    static OrbitModel load(const std::string& path);
};

struct OrbitSide {
    cplx total;
    std::vector<cplx> per_orbit;
    std::vector<std::string> flags;  // sign asymmetry between k and -k, non-constant orbit signs
};

/// Orbit sum over unramified orbits; ramified orbits enter through
/// Tr(rho(h0^k) P_H), which vanishes when rho is nontrivial on H.
OrbitSide statement_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a,
                         Exec exec = Exec::Parallel);
/// (1/|G|) sum over coset-labelled fixed curves of T0 sign Tr rho(u^{-1} l_j h0^k l_j^{-1}) alpha(k T0).
OrbitSide proof_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a, Exec exec = Exec::Parallel);

/// Raw transversal factor: 1/|1 - e^{-2t}| (real place), 1/|1 - e^{-t}| (complex place).
double gs_fixed_point_factor(const FixedPointDatum& place, double t);
/// (1/2)(1/(1 - e^{-t}) + eps/(1 + e^{-t})) for t > 0, (1/2)(e^t/(1 - e^t) + eps e^t/(1 + e^t)) for t < 0.
cplx averaged_fixed_point_factor(double t, cplx involution_character);
/// Weight of a place in the Dedekind explicit formula.
double efk_weight(PlaceType place, double t);

/// int alpha(t) [sum over fixed points of the averaged factor with Tr rho(h_j)] dt.
/// Real places take dim(rho)/(1 - e^{-2t})-type weights.
cplx fixed_point_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a);

struct InvariantTrace {
    int dim;
    double residual;
    cplx trace;
};

/// Tr(e^{t theta} on W^G) against dim W^G e^{tz}; theta must commute with the
/// action and theta - z be nilpotent on the invariants.
InvariantTrace invariant_trace_check(const FiniteRep& action, const Matrix& theta, cplx z, double t);

/// 1/|det A|.
double dirac_jacobian_factor(const Eigen::MatrixXd& A);

}  // namespace efl
