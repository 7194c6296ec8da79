#include "efl/arith.hpp"

#include <algorithm>
#include <numeric>

namespace efl {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m == 1) return 0;
    __int128 result = 1;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = (result * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw ContractError("domain", "factorize: n must be >= 1");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> d{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t cur = d.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (std::gcd(mod(a, m), m) != 1)
        throw ContractError("domain", "multiplicative_order: a not a unit");
    if (m == 1) return 1;
    const std::int64_t phi = euler_phi(m);
    std::int64_t best = phi;
    for (std::int64_t d : divisors(phi)) {
        if (pow_mod(a, d, m) == 1) {
            best = d;
            break;
        }
    }
    return best;
}

int valuation(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::int64_t> units(std::int64_t m) {
    std::vector<std::int64_t> u;
    if (m == 1) return {0};
    for (std::int64_t a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) u.push_back(a);
    return u;
}

std::int64_t primitive_root(std::int64_t p, int k) {
    const std::int64_t pk = ipow(p, k);
    const std::int64_t phi = euler_phi(pk);
    const auto fac = factorize(phi);
    for (std::int64_t g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [q, e] : fac) {
            if (pow_mod(g, phi / q, pk) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;  // pk == 2
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

std::int64_t crt_pair(std::int64_t a, std::int64_t m1, std::int64_t b, std::int64_t m2) {
    // Brute force is fine at the moduli used here.
    const std::int64_t m = m1 * m2;
    for (std::int64_t x = mod(a, m1); x < m; x += m1)
        if (mod(x, m2) == mod(b, m2)) return x;
    throw ContractError("domain", "crt_pair: moduli not coprime");
}

}  // namespace efl
