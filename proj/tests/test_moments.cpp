#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "efl/acceptance.hpp"
#include "efl/arith.hpp"
#include "efl/moments.hpp"

using namespace efl;

TEST_SUITE("moments") {
    TEST_CASE("equal multisets in different order") {
        StripMultiset a{{{cplx(0.5, 1), 1}, {cplx(0.2, -1), 2}}, "a"};
        StripMultiset b{{{cplx(0.2, -1), 2}, {cplx(0.5, 1), 1}}, "b"};
        const MomentComparison c = compare(a, b);
        CHECK(c.equal);
        REQUIRE(c.bijection.has_value());
        CHECK(c.bijection->size() == 3);
        CHECK_FALSE(c.inconsistent);
    }

    TEST_CASE("multiplicity matters") {
        StripMultiset a{{{cplx(0.5, 1), 2}}, "a"};
        StripMultiset b{{{cplx(0.5, 1), 1}}, "b"};
        const MomentComparison c = compare(a, b);
        CHECK_FALSE(c.equal);
        REQUIRE(c.first_differing_moment.has_value());
        CHECK(*c.first_differing_moment == 0);
    }

    TEST_CASE("validation") {
        StripMultiset bad{{{cplx(1.2, 0), 1}}, "bad"};
        CHECK_THROWS_AS(bad.validate(), ContractError);
        StripMultiset zero{{{cplx(0.5, 0), 0}}, "zero"};
        CHECK_THROWS_AS(zero.validate(), ContractError);
    }

    TEST_CASE("random pairs are distinguished") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            const StripMultiset a = random_strip_multiset(rng);
            const StripMultiset b = perturbed_multiset(rng, a);
            CHECK_FALSE(compare(a, b, 12).equal);
        }
    }

    TEST_CASE("load JSON and zero CSV") {
        const std::string json_path = "efl_moments_test.json", csv_path = "efl_moments_test.csv";
        std::ofstream(json_path) << R"({"label":"x","points":[[0.5,14.134725141734693,1],[0.5,-14.134725141734693,1]]})";
        std::ofstream(csv_path) << "re,im,multiplicity\n0.5,-14.134725141734693,1\n0.5,14.134725141734693,1\n";
        const MomentComparison c = compare(StripMultiset::load(json_path), StripMultiset::load(csv_path));
        CHECK(c.equal);
        std::remove(json_path.c_str());
        std::remove(csv_path.c_str());
        CHECK_THROWS_AS(StripMultiset::load("does_not_exist.json"), ContractError);
    }
}
