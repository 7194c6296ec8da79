#pragma once

// Prime splitting in K = Q(zeta_m), decomposition and inertia groups inside
// Gal(K/Q) = (Z/mZ)*, and the local data of abelian Artin L-functions.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "efl/characters.hpp"

namespace efl {

struct CyclotomicField {
    std::int64_t requested_m;   // as given
    std::int64_t m;             // canonical: m = 2 mod 4 replaced by m/2
    std::int64_t degree;        // phi(m)
    int r1;
    int r2;
    double log_abs_discriminant;
    std::optional<std::uint64_t> abs_discriminant;  // when it fits in 64 bits
};

/// Field data; |d_K| through the conductor-discriminant product over chi mod m.
CyclotomicField cyclotomic_field(std::int64_t m);

struct PrimeSplitting {
    std::int64_t p;
    std::int64_t e;     // ramification index phi(p^nu)
    std::int64_t f;     // residue degree: order of p mod m / p^nu
    std::int64_t r;     // number of primes above p
    std::int64_t norm;  // p^f
};

PrimeSplitting split_prime(std::int64_t m, std::int64_t p);

struct DecompositionData {
    std::int64_t m;
    std::int64_t p;
    std::int64_t f;
    std::vector<std::int64_t> decomposition_group;  // residues mod m, sorted
    std::vector<std::int64_t> inertia_group;        // residues mod m, sorted
    std::int64_t frobenius;                          // lift: = p mod m/p^nu, = 1 mod p^nu
    std::map<std::int64_t, std::int64_t> exponent_map;  // h -> a(h) in Z/fZ
};

/// Groups computed from scratch; surjectivity of the exponent map onto Z/fZ is asserted.
DecompositionData decomposition_data(std::int64_t m, std::int64_t p);

/// Memoised decomposition data. Reads take a shared lock; a miss computes the
/// entry outside the lock and inserts it under the exclusive lock.
const DecompositionData& cached_decomposition_data(std::int64_t m, std::int64_t p);

/// dim V^{I_P} for chi viewed as a 1-dimensional representation of (Z/mZ)*.
int invariant_dimension(const DirichletCharacter& chi, std::int64_t p);

/// Tr(Frob_P^k : V^{I_P}).
cplx artin_frobenius_trace(const DirichletCharacter& chi, std::int64_t p, std::int64_t k);

/// det(Id - x rho(Frob_P) ; V^{I_P}).
cplx artin_local_factor(const DirichletCharacter& chi, std::int64_t p, cplx x);

struct ArchimedeanSignature {
    int n_plus;
    int n_minus;
};

/// (dim ker(rho(-1) - 1), dim ker(rho(-1) + 1)); all-real fields (m <= 2) give (1, 0).
ArchimedeanSignature archimedean_signature(const DirichletCharacter& chi, std::int64_t m);

struct ArtinLocalData {
    std::int64_t p;
    int invariant_dim;
    std::optional<cplx> frobenius_value;
    ArchimedeanSignature signature;
};

ArtinLocalData artin_local_data(const DirichletCharacter& chi, std::int64_t p);

nlohmann::json splitting_report(std::int64_t m, std::int64_t p);

}  // namespace efl
