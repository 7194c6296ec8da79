#pragma once

// Dirichlet characters modulo m.
//
// (Z/mZ)* is decomposed into cyclic factors via CRT; a character is fixed by
// the images of the generators, kept as exact exponents. A value chi(a) is
// zeta_{phi(m)}^{e(a)} with e(a) an integer, so the group law holds exactly.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "efl/arith.hpp"

namespace efl {

using cplx = std::complex<double>;

/// exp(2 pi i k / n) with exact values when n/gcd(k,n) is 1, 2 or 4.
cplx root_of_unity(std::int64_t k, std::int64_t n);

/// Structure of (Z/mZ)*: cyclic generators and discrete logs.
class UnitGroup {
public:
    explicit UnitGroup(std::int64_t m);

    std::int64_t modulus() const { return m_; }
    std::int64_t order() const { return phi_; }
    const std::vector<std::int64_t>& generators() const { return gens_; }
    const std::vector<std::int64_t>& generator_orders() const { return orders_; }

    /// Exponent vector of a unit a w.r.t. generators(); empty if a is not a unit.
    const std::vector<std::int64_t>& log(std::int64_t a) const { return logs_[mod(a, m_)]; }
    bool is_unit(std::int64_t a) const { return unit_[mod(a, m_)] != 0; }

private:
    std::int64_t m_;
    std::int64_t phi_;
    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> orders_;
    std::vector<std::vector<std::int64_t>> logs_;
    std::vector<char> unit_;
};

class DirichletCharacter {
public:
    /// Character sending generator i to exp(2 pi i c_i / n_i).
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> generator_exponents);

    std::int64_t modulus() const { return group_->modulus(); }
    std::int64_t conductor() const { return conductor_; }
    int parity() const { return parity_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_trivial() const;
    bool is_real() const;
    std::int64_t order() const;
    std::int64_t index() const;

    const std::vector<std::int64_t>& generator_exponents() const { return gen_exp_; }
    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }

    /// e with chi(n) = zeta_{phi(m)}^e, or nullopt when gcd(n, m) != 1.
    std::optional<std::int64_t> exponent(std::int64_t n) const;
    /// chi(n), exactly 0 off the units (and at n = 0 when m > 1).
    cplx operator()(std::int64_t n) const;

    DirichletCharacter operator*(const DirichletCharacter& other) const;
    DirichletCharacter conj() const;
    bool operator==(const DirichletCharacter& other) const;

    /// The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive_inducer() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> gen_exp_;
    std::vector<std::int64_t> table_;  // exponent mod phi(m) per residue, -1 off units
    std::int64_t conductor_ = 1;
    int parity_ = 0;
};

/// All phi(m) characters mod m, ordered by mixed-radix index (index 0 = trivial).
std::vector<DirichletCharacter> enumerate_characters(std::int64_t m);
DirichletCharacter character(std::int64_t m, std::int64_t index);

/// Trivial character modulo 1 (the coefficient rule of zeta).
DirichletCharacter trivial_character();

/// Primitivity through the divisor/residue criterion: for every divisor
/// m' != m of m there is a unit a = 1 mod m' with chi(a) != 1.
bool is_primitive_by_criterion(const DirichletCharacter& chi);

struct GaussSum {
    cplx value;
    std::int64_t modulus;
    std::int64_t character_index;
};

GaussSum gauss_sum(const DirichletCharacter& chi);

/// tau(chi) / (i^q sqrt(m)). Throws for imprimitive or trivial chi, and if
/// the modulus-one check fails at 1e-10.
cplx root_number(const DirichletCharacter& chi);

nlohmann::json to_json(const DirichletCharacter& chi);

}  // namespace efl
