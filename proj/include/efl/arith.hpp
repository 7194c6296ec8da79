#pragma once

// Elementary integer arithmetic shared by the character, splitting and
// prime-sum code. Moduli in this project are small (desk scale), so plain
// 64-bit integers suffice everywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efl {

/// Raised whenever an operation's precondition or asserted contract fails.
/// `kind()` is a short machine-readable tag surfaced in CLI error JSON.
class ContractError : public std::runtime_error {
public:
    ContractError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

using PrimePower = std::pair<std::int64_t, int>;

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t ipow(std::int64_t base, int exp);

std::vector<PrimePower> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

/// Smallest k >= 1 with a^k = 1 mod m. Requires gcd(a, m) = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Exponent of p in n.
int valuation(std::int64_t n, std::int64_t p);

/// Residues in [0, m) coprime to m (for m = 1 this is {0}).
std::vector<std::int64_t> units(std::int64_t m);

/// A primitive root modulo an odd prime power.
std::int64_t primitive_root(std::int64_t p, int k);

/// Sieve of Eratosthenes, primes <= n.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// x with x = a mod m1, x = b mod m2 for coprime m1, m2; result in [0, m1*m2).
std::int64_t crt_pair(std::int64_t a, std::int64_t m1, std::int64_t b, std::int64_t m2);

}  // namespace efl
