#include <doctest.h>

#include <cmath>
#include <numeric>

#include "efl/arith.hpp"
#include "efl/characters.hpp"
#include "efl/numberfield.hpp"

using namespace efl;

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// exact division over Z by a monic polynomial
Poly div_exact(Poly a, const Poly& b) {
    Poly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = a[i + b.size() - 1];
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    return q;
}

Poly cyclotomic_poly(std::int64_t m) {
    Poly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p.back() = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) p = div_exact(p, cyclotomic_poly(d));
    return p;
}

Poly pmod(Poly a, const Poly& b, std::int64_t p) {
    for (auto& x : a) x = mod(x, p);
    trim(a);
    const std::int64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        const std::int64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
        trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

Poly pmul(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return pmod(c, f, p);
}

Poly pgcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        Poly r = pmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// distinct-degree factorisation of a squarefree polynomial mod p: {degree -> number of factors}
std::map<int, int> ddf(Poly f, std::int64_t p) {
    std::map<int, int> out;
    Poly h = {0, 1};  // x^{p^k} mod f
    for (int k = 1; f.size() > 1; ++k) {
        Poly acc = {1}, base = h;
        for (std::int64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = pmul(acc, base, f, p);
            base = pmul(base, base, f, p);
        }
        h = acc;
        Poly hx = h;
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = mod(hx[1] - 1, p);
        const Poly g = pgcd(f, hx, p);
        if (g.size() > 1) {
            out[k] = static_cast<int>(g.size() - 1) / k;
            // f /= g  (g monic after normalisation)
            Poly gm = g;
            const std::int64_t inv = pow_mod(gm.back(), p - 2, p);
            for (auto& x : gm) x = x * inv % p;
            Poly q(f.size() - gm.size() + 1, 0), rem = f;
            for (std::size_t i = q.size(); i-- > 0;) {
                q[i] = rem[i + gm.size() - 1];
                for (std::size_t j = 0; j < gm.size(); ++j) rem[i + j] = mod(rem[i + j] - q[i] * gm[j], p);
            }
            f = q;
            h = pmod(h, f, p);
        }
        if (k > 64) break;
    }
    return out;
}

}  // namespace

TEST_SUITE("numberfield") {
    TEST_CASE("discriminants of small cyclotomic fields") {
        const std::pair<std::int64_t, std::uint64_t> known[] = {{3, 3}, {4, 4}, {5, 125}, {7, 16807}, {8, 256}, {12, 144}};
        for (auto [m, d] : known) {
            const CyclotomicField k = cyclotomic_field(m);
            REQUIRE(k.abs_discriminant.has_value());
            CHECK(*k.abs_discriminant == d);
            CHECK(std::abs(k.log_abs_discriminant - std::log(static_cast<double>(d))) < 1e-12);
            CHECK(k.r2 == k.degree / 2);
        }
        CHECK(cyclotomic_field(6).m == 3);
        CHECK(cyclotomic_field(1).r1 == 1);
    }

    TEST_CASE("splitting of unramified primes matches factorisation of the cyclotomic polynomial") {
        for (std::int64_t m = 3; m <= 24; ++m) {
            if (m % 4 == 2) continue;
            const Poly phi = cyclotomic_poly(m);
            for (std::int64_t p : primes_up_to(60)) {
                if (m % p == 0) continue;
                const auto factors = ddf(phi, p);
                REQUIRE(factors.size() == 1);
                const PrimeSplitting s = split_prime(m, p);
                CHECK(s.e == 1);
                CHECK(s.f == factors.begin()->first);
                CHECK(s.r == factors.begin()->second);
            }
        }
    }

    TEST_CASE("ramified primes") {
        const PrimeSplitting two = split_prime(4, 2);
        CHECK(two.e == 2);
        CHECK(two.f == 1);
        CHECK(two.r == 1);
        const PrimeSplitting s = split_prime(12, 3);  // e = 2, f = order of 3 mod 4 = 2
        CHECK(s.e == 2);
        CHECK(s.f == 2);
        CHECK(s.r == 1);
        for (std::int64_t m = 1; m <= 30; ++m)
            for (std::int64_t p : primes_up_to(30)) {
                const auto d = decomposition_data(m, p);
                const auto sp = split_prime(m, p);
                CHECK(static_cast<std::int64_t>(d.decomposition_group.size()) == sp.e * sp.f);
                CHECK(static_cast<std::int64_t>(d.inertia_group.size()) == sp.e);
            }
    }

    TEST_CASE("Artin local data and characters") {
        const auto chi4 = character(4, 1);
        CHECK(invariant_dimension(chi4, 2) == 0);
        CHECK(invariant_dimension(chi4, 3) == 1);
        CHECK(std::abs(artin_frobenius_trace(chi4, 3, 1) + 1.0) < 1e-15);
        CHECK(std::abs(artin_frobenius_trace(chi4, 5, 3) - 1.0) < 1e-15);
        const auto sig = archimedean_signature(chi4, 4);
        CHECK(sig.n_plus == 0);
        CHECK(sig.n_minus == 1);
        // imprimitive character mod 12 induced by chi_4: inertia at 3 acts trivially
        for (const auto& chi : enumerate_characters(12))
            if (chi.conductor() == 4) {
                CHECK(invariant_dimension(chi, 3) == 1);
                CHECK(std::abs(artin_frobenius_trace(chi, 3, 1) + 1.0) < 1e-15);
            }
    }

    TEST_CASE("splitting report") {
        const auto j = splitting_report(12, 3);
        CHECK(j["e"] == 2);
        CHECK(j["f"] == 2);
        CHECK(j["r"] == 1);
    }
}
