#include <doctest.h>

#include <cmath>
#include <numeric>

#include "efl/arith.hpp"
#include "efl/characters.hpp"

using namespace efl;

namespace {

// smallest d | m such that chi(n) = 1 whenever n = 1 mod d and gcd(n, m) = 1
std::int64_t brute_conductor(const DirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        bool ok = true;
        for (std::int64_t n = 1; n <= m && ok; ++n)
            if (std::gcd(n, m) == 1 && n % d == 1 % d && std::abs(chi(n) - 1.0) > 1e-12) ok = false;
        if (ok) return d;
    }
    return m;
}

}  // namespace

TEST_SUITE("characters") {
    TEST_CASE("arithmetic helpers against brute force") {
        for (std::int64_t n = 1; n <= 200; ++n) {
            std::int64_t phi = 0;
            for (std::int64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
            CHECK(euler_phi(n) == phi);
            std::int64_t prod = 1;
            for (auto [p, e] : factorize(n)) prod *= ipow(p, e);
            CHECK(prod == n);
        }
        CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
        CHECK(multiplicative_order(2, 7) == 3);
        CHECK(crt_pair(2, 3, 3, 5) == 8);
    }

    TEST_CASE("character group: count, orthogonality, multiplicativity") {
        for (std::int64_t m : {1, 2, 4, 5, 8, 12, 15, 16, 24, 35}) {
            const auto chars = enumerate_characters(m);
            REQUIRE(static_cast<std::int64_t>(chars.size()) == euler_phi(m));
            for (std::size_t i = 0; i < chars.size(); ++i) {
                for (std::size_t j = 0; j < chars.size(); ++j) {
                    cplx s = 0;
                    for (std::int64_t n = 0; n < m; ++n) s += chars[i](n) * std::conj(chars[j](n));
                    CHECK(std::abs(s - (i == j ? static_cast<double>(euler_phi(m)) : 0.0)) < 1e-10);
                }
                for (std::int64_t a = 1; a < 3 * m; a += 3)
                    for (std::int64_t b = 2; b < 2 * m; b += 5)
                        CHECK(std::abs(chars[i](a * b) - chars[i](a) * chars[i](b)) < 1e-12);
            }
        }
    }

    TEST_CASE("chi_4 values and Gauss sum 2i") {
        const auto chi = character(4, 1);
        CHECK(chi.is_primitive());
        CHECK(chi.parity() == 1);
        CHECK(std::abs(chi(1) - 1.0) < 1e-15);
        CHECK(std::abs(chi(3) + 1.0) < 1e-15);
        CHECK(std::abs(chi(2)) == 0.0);
        CHECK(std::abs(gauss_sum(chi).value - cplx(0.0, 2.0)) < 1e-12);
        CHECK(std::abs(root_number(chi) - 1.0) < 1e-12);
    }

    TEST_CASE("quadratic character mod 5 has Gauss sum sqrt 5") {
        for (const auto& chi : enumerate_characters(5))
            if (chi.order() == 2) CHECK(std::abs(gauss_sum(chi).value - std::sqrt(5.0)) < 1e-12);
    }

    TEST_CASE("conductor against brute force, m <= 40") {
        for (std::int64_t m = 1; m <= 40; ++m)
            for (const auto& chi : enumerate_characters(m)) {
                CHECK(chi.conductor() == brute_conductor(chi));
                CHECK(is_primitive_by_criterion(chi) == chi.is_primitive());
                const auto star = chi.primitive_inducer();
                for (std::int64_t n = 1; n <= 2 * m; ++n)
                    if (std::gcd(n, m) == 1) CHECK(std::abs(star(n) - chi(n)) < 1e-12);
            }
    }

    TEST_CASE("index out of range is a contract error") {
        CHECK_THROWS_AS(character(5, 4), ContractError);
        CHECK_THROWS_AS(enumerate_characters(0), ContractError);
    }
}
