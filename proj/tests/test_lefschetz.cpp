#include <doctest.h>

#include <cmath>
#include <random>

#include "efl/acceptance.hpp"
#include "efl/arith.hpp"
#include "efl/lefschetz.hpp"

using namespace efl;

namespace {

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

int chi4(int p) { return p % 4 == 1 ? 1 : -1; }

}  // namespace

TEST_SUITE("lefschetz") {
    TEST_CASE("finite groups") {
        const FiniteGroup c6 = FiniteGroup::cyclic(6);
        CHECK(c6.pow(5, 3) == 3);
        CHECK(c6.pow(5, -1) == 1);
        CHECK(c6.subgroups().size() == 4);
        const FiniteGroup k4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
        CHECK(k4.subgroups().size() == 5);
        const FiniteGroup s3 = FiniteGroup::symmetric3();
        CHECK(s3.subgroups().size() == 6);
        bool abelian = true;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
        CHECK_FALSE(abelian);
        CHECK(s3.coset_representatives({s3.identity()}).size() == 6);
        CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), ContractError);
    }

    TEST_CASE("S3 standard representation has character (2, 0, -1)") {
        auto g = share(FiniteGroup::symmetric3());
        const FiniteRep rho = FiniteRep::s3_standard(g);
        for (int x = 0; x < 6; ++x) {
            const int ord = g->pow(x, 2) == g->identity() ? (x == g->identity() ? 1 : 2) : 3;
            const double want = ord == 1 ? 2.0 : ord == 2 ? 0.0 : -1.0;
            CHECK(std::abs(rho.trace(x) - want) < 1e-12);
        }
        // no invariants: projector onto the trivial isotypic part vanishes
        std::vector<int> all(6);
        for (int x = 0; x < 6; ++x) all[x] = x;
        CHECK(inertia_projector(rho, all).norm() < 1e-12);
    }

    TEST_CASE("Gauss model: orbit side equals a direct prime sum") {
        const OrbitModel m = OrbitModel::load(EFL_DATA_DIR "/gauss_qi.json");
        const TestFunction a(2.0, 1.5);
        for (int k : {0, 1}) {
            const FiniteRep rho = FiniteRep::cyclic_character(m.group, k);
            double direct = 0;
            for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
                if (p == 2 && k == 1) continue;
                for (int j = 1; j * std::log(p) < 3.5; ++j) {
                    const int tr = k == 0 || p == 2 ? 1 : (j % 2 == 0 ? 1 : chi4(p));
                    direct += std::log(p) * tr * a(j * std::log(p));
                }
            }
            const OrbitSide st = statement_side(m, rho, a);
            const OrbitSide pf = proof_side(m, rho, a);
            CHECK(std::abs(st.total - direct) < 1e-13);
            CHECK(std::abs(st.total - pf.total) < 1e-13);
        }
    }

    TEST_CASE("Jacob ladder model") {
        const OrbitModel m = OrbitModel::load(EFL_DATA_DIR "/jacob_ladder.json");
        CHECK(m.fixed_points.size() == 2);
        for (const TestFunction& a : {TestFunction(1.5, 1.2), TestFunction(5.0, 2.5), TestFunction(-2.0, 1.5)})
            for (int k : {0, 1}) {
                const FiniteRep rho = FiniteRep::cyclic_character(m.group, k);
                CHECK(std::abs(statement_side(m, rho, a).total - proof_side(m, rho, a).total) < 1e-12);
            }
    }

    TEST_CASE("invalid models are rejected") {
        nlohmann::json j = {{"group", {{"kind", "cyclic"}, {"data", 3}}},
                            {"orbits", {{{"length", 1.0}, {"holonomy", 0}, {"stabilizer", {0, 1}}}}}};
        CHECK_THROWS_AS(OrbitModel::from_json(j), ContractError);
        j["orbits"][0]["stabilizer"] = {0};
        j["orbits"][0]["holonomy"] = 7;
        CHECK_THROWS_AS(OrbitModel::from_json(j), ContractError);
        j["orbits"][0]["holonomy"] = 1;
        j["orbits"][0]["signs"] = {{"1", {1, 1, 1}}};
        const OrbitModel m = OrbitModel::from_json(j);
        CHECK_THROWS_AS(statement_side(m, FiniteRep::trivial(m.group), TestFunction(1.0, 0.5)), ContractError);
    }

    TEST_CASE("alpha(0) must vanish") {
        const OrbitModel m = OrbitModel::load(EFL_DATA_DIR "/gauss_qi.json");
        CHECK_THROWS_AS(statement_side(m, FiniteRep::trivial(m.group), TestFunction(0.1, 0.5)), ContractError);
    }

    TEST_CASE("random models: both sides agree") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 40; ++i) {
            const auto inst = random_trace_instance(rng);
            CHECK(std::abs(statement_side(inst.model, inst.rho, inst.alpha).total -
                           proof_side(inst.model, inst.rho, inst.alpha, Exec::Serial).total) < 1e-12);
        }
    }

    TEST_CASE("fixed point factors") {
        const FixedPointDatum real{PlaceType::Real, std::nullopt, true};
        const FixedPointDatum cx{PlaceType::Complex, 1, true};
        for (double t : {-2.0, -0.3, 0.4, 1.7}) {
            CHECK(gs_fixed_point_factor(real, t) == doctest::Approx(1.0 / std::abs(1.0 - std::exp(-2 * t))).epsilon(1e-14));
            CHECK(gs_fixed_point_factor(cx, t) == doctest::Approx(1.0 / std::abs(1.0 - std::exp(-t))).epsilon(1e-14));
            const double ep = t > 0 ? 1 / (1 - std::exp(-2 * t)) : std::exp(t) / (1 - std::exp(2 * t));
            CHECK(std::abs(averaged_fixed_point_factor(t, 1.0) - ep) < 1e-13 * std::max(1.0, ep));
            const double wc = t > 0 ? 1 / (1 - std::exp(-t)) : std::exp(t) / (1 - std::exp(t));
            CHECK(efk_weight(PlaceType::Complex, t) == doctest::Approx(wc).epsilon(1e-14));
        }
        CHECK_THROWS_AS(averaged_fixed_point_factor(0.5, cplx(0.5, 0)), ContractError);
        // t = -log 2: e^t / (1 - e^{2t}) = (1/2) / (3/4)
        CHECK(std::abs(averaged_fixed_point_factor(-std::log(2.0), 1.0) - 2.0 / 3.0) < 1e-15);
    }

    TEST_CASE("invariant trace") {
        std::mt19937_64 rng(3);
        int zero = 0;
        for (int i = 0; i < 30; ++i) {
            const auto inst = random_invariant_instance(rng, i % 4 == 0);
            const InvariantTrace r = invariant_trace_check(inst.action, inst.theta, inst.z, inst.t);
            CHECK(r.dim == inst.expected_dim);
            CHECK(r.residual < 1e-10);
            zero += r.dim == 0;
        }
        CHECK(zero > 0);
        // theta not commuting with the action
        auto g = share(FiniteGroup::cyclic(2));
        const FiniteRep swap(g, {Matrix::Identity(2, 2), (Matrix(2, 2) << 0, 1, 1, 0).finished()});
        Matrix theta = Matrix::Zero(2, 2);
        theta(0, 0) = 1.0;
        CHECK_THROWS_AS(invariant_trace_check(swap, theta, 1.0, 0.5), ContractError);
    }

    TEST_CASE("Dirac jacobian") {
        Eigen::MatrixXd A(2, 2);
        A << 2, 0, 0, -3;
        CHECK(dirac_jacobian_factor(A) == doctest::Approx(1.0 / 6.0));
        A << 1, 2, 2, 4;
        CHECK_THROWS_AS(dirac_jacobian_factor(A), ContractError);
    }
}
