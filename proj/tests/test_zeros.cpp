#include <doctest.h>

#include <cmath>
#include <sstream>

#include "efl/characters.hpp"
#include "efl/lseries.hpp"
#include "efl/zeros.hpp"

using namespace efl;

namespace {

// Odlyzko's tables
const double kZetaZeros[] = {14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513,
                             32.935061587739189, 37.586178158825671, 40.918719012147495, 43.327073280914999,
                             48.005150881167159, 49.773832477672302};

std::vector<double> positive(const ZeroList& z) {
    std::vector<double> out;
    for (const Zero& e : z.entries)
        if (e.location.imag() > 0)
            for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.location.imag());
    return out;
}

}  // namespace

TEST_SUITE("zeros") {
    TEST_CASE("first ten zeta zeros") {
        const ZeroList z = find_zeros(CompletedLFunction::riemann(), 50.0);
        const auto ims = positive(z);
        REQUIRE(ims.size() == 10);
        for (int i = 0; i < 10; ++i) CHECK(std::abs(ims[i] - kZetaZeros[i]) < 1e-9);
        CHECK(z.located_count == 20);
        CHECK(z.verified_count == 20);
        CHECK(z.max_real_deviation < 1e-10);
    }

    TEST_CASE("zero count N(100) = 29 and N(200) = 79") {
        CHECK(positive(find_zeros(CompletedLFunction::riemann(), 100.0)).size() == 29);
        CHECK(positive(find_zeros(CompletedLFunction::riemann(), 200.0)).size() == 79);
    }

    TEST_CASE("box counting of zeta") {
        const auto zeta = CompletedLFunction::riemann();
        CHECK(count_zeros_in_box(zeta, {-0.1, 1.1, 10.0, 22.0}).zeros == 2);
        CHECK(count_zeros_in_box(zeta, {-0.1, 1.1, 0.5, 14.0}).zeros == 0);
        const BoxCount whole = count_zeros_in_box(zeta, {-0.1, 1.1, -31.0, 31.0});
        CHECK(whole.zeros == 8);
        CHECK(whole.poles_inside == 2);
    }

    TEST_CASE("chi_4 zeros") {
        const ZeroList z = find_zeros(CompletedLFunction::dirichlet(character(4, 1)), 12.0);
        const auto ims = positive(z);
        REQUIRE(ims.size() == 2);
        CHECK(std::abs(ims[0] - 6.020948904697597) < 1e-9);
        CHECK(std::abs(ims[1] - 10.243770304166555) < 1e-9);
    }

    TEST_CASE("complex character: zeros not symmetric, verified on both half planes") {
        DirichletCharacter chi = character(5, 1);
        for (const auto& c : enumerate_characters(5))
            if (c.order() == 4) chi = c;
        const ZeroList z = find_zeros(CompletedLFunction::dirichlet(chi), 20.0);
        CHECK(z.located_count == z.verified_count);
        for (const Zero& e : z.entries) CHECK(std::abs(e.location.real() - 0.5) < 1e-9);
        // zeros of chi-bar are the conjugates
        const ZeroList zb = find_zeros(CompletedLFunction::dirichlet(chi.conj()), 20.0);
        REQUIRE(zb.entries.size() == z.entries.size());
        for (std::size_t i = 0; i < z.entries.size(); ++i)
            CHECK(std::abs(z.entries[i].location - std::conj(zb.entries[z.entries.size() - 1 - i].location)) < 1e-8);
    }

    TEST_CASE("Dedekind zeros are the union of factor zeros") {
        const ZeroList k = find_zeros(CompletedLFunction::dedekind_cyclotomic(4), 30.0);
        const ZeroList a = find_zeros(CompletedLFunction::riemann(), 30.0);
        const ZeroList b = find_zeros(CompletedLFunction::dirichlet(character(4, 1)), 30.0);
        CHECK(k.located_count == a.located_count + b.located_count);
        CHECK(k.located_count == k.verified_count);
    }

    TEST_CASE("zero CSV format") {
        const ZeroList z = find_zeros(CompletedLFunction::riemann(), 30.0);
        std::istringstream in(zeros_csv(z));
        std::string line;
        std::getline(in, line);
        CHECK(line == "re,im,multiplicity");
        int rows = 0, upper = 0;
        while (std::getline(in, line)) {
            ++rows;
            double re, im;
            int mult;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%d", &re, &im, &mult) == 3);
            upper += im > 0;
        }
        CHECK(rows == 6);
        CHECK(upper == 3);
        CHECK(certification_summary(z)["verified_count"] == 6);
    }

    TEST_CASE("serial and parallel agree exactly") {
        ZeroSearchOptions s;
        s.exec = Exec::Serial;
        const auto zeta = CompletedLFunction::riemann();
        CHECK(zeros_csv(find_zeros(zeta, 60.0, s)) == zeros_csv(find_zeros(zeta, 60.0)));
        CHECK(count_zeros_in_box(zeta, {-0.1, 1.1, -40, 40}, Exec::Serial).winding ==
              count_zeros_in_box(zeta, {-0.1, 1.1, -40, 40}).winding);
    }

    TEST_CASE("height limit") { CHECK_THROWS_AS(find_zeros(CompletedLFunction::riemann(), 401.0), ContractError); }
}
