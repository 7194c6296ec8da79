#include "efl/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace efl {

cplx root_of_unity(std::int64_t k, std::int64_t n) {
    k = mod(k, n);
    const std::int64_t g = std::gcd(k, n);
    k /= g;
    n /= g;
    switch (n) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return k == 1 ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
        default: break;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

UnitGroup::UnitGroup(std::int64_t m) : m_(m), phi_(euler_phi(m)) {
    if (m < 1) throw ContractError("domain", "UnitGroup: modulus must be >= 1");
    for (auto [p, k] : factorize(m)) {
        const std::int64_t pk = ipow(p, k);
        const std::int64_t rest = m / pk;
        auto lift = [&](std::int64_t g) { return rest == 1 ? mod(g, pk) : crt_pair(g, pk, 1, rest); };
        if (p != 2) {
            gens_.push_back(lift(primitive_root(p, k)));
            orders_.push_back(euler_phi(pk));
        } else if (k == 2) {
            gens_.push_back(lift(3));
            orders_.push_back(2);
        } else if (k >= 3) {
            gens_.push_back(lift(pk - 1));
            orders_.push_back(2);
            gens_.push_back(lift(5));
            orders_.push_back(pk / 4);
        }
    }

    logs_.assign(static_cast<std::size_t>(m), {});
    unit_.assign(static_cast<std::size_t>(m), 0);
    std::vector<std::int64_t> e(gens_.size(), 0);
    for (std::int64_t count = 0; count < phi_; ++count) {
        std::int64_t x = 1 % m;
        for (std::size_t i = 0; i < gens_.size(); ++i) x = x * pow_mod(gens_[i], e[i], m) % m;
        logs_[x] = e;
        unit_[x] = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (++e[i] < orders_[i]) break;
            e[i] = 0;
        }
    }
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::int64_t> generator_exponents)
    : group_(std::move(group)), gen_exp_(std::move(generator_exponents)) {
    const auto& orders = group_->generator_orders();
    if (gen_exp_.size() != orders.size())
        throw ContractError("domain", "DirichletCharacter: wrong number of generator images");
    const std::int64_t m = group_->modulus();
    const std::int64_t phi = group_->order();
    for (std::size_t i = 0; i < orders.size(); ++i) gen_exp_[i] = mod(gen_exp_[i], orders[i]);

    table_.assign(static_cast<std::size_t>(m), -1);
    for (std::int64_t a = 0; a < m; ++a) {
        if (!group_->is_unit(a)) continue;
        const auto& lg = group_->log(a);
        std::int64_t e = 0;
        for (std::size_t i = 0; i < lg.size(); ++i) e += gen_exp_[i] * (phi / orders[i]) * lg[i];
        table_[a] = mod(e, phi);
    }

    for (std::int64_t d : divisors(m)) {
        bool factors = true;
        for (std::int64_t a = 1 % m; a < m && factors; a += d)
            if (table_[a] > 0) factors = false;
        if (factors) {
            conductor_ = d;
            break;
        }
    }
    parity_ = (m > 2 && table_[m - 1] != 0) ? 1 : 0;
}

bool DirichletCharacter::is_trivial() const {
    for (auto c : gen_exp_)
        if (c != 0) return false;
    return true;
}

bool DirichletCharacter::is_real() const {
    const std::int64_t phi = group_->order();
    for (auto e : table_)
        if (e > 0 && 2 * e != phi) return false;
    return true;
}

std::int64_t DirichletCharacter::order() const {
    std::int64_t ord = 1;
    const auto& orders = group_->generator_orders();
    for (std::size_t i = 0; i < orders.size(); ++i)
        ord = std::lcm(ord, orders[i] / std::gcd(gen_exp_[i], orders[i]));
    return ord;
}

std::int64_t DirichletCharacter::index() const {
    std::int64_t idx = 0, radix = 1;
    const auto& orders = group_->generator_orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        idx += gen_exp_[i] * radix;
        radix *= orders[i];
    }
    return idx;
}

std::optional<std::int64_t> DirichletCharacter::exponent(std::int64_t n) const {
    const std::int64_t e = table_[mod(n, modulus())];
    if (e < 0) return std::nullopt;
    return e;
}

cplx DirichletCharacter::operator()(std::int64_t n) const {
    const auto e = exponent(n);
    if (!e) return {0.0, 0.0};
    return root_of_unity(*e, group_->order());
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
    if (other.modulus() != modulus()) throw ContractError("domain", "character product: moduli differ");
    std::vector<std::int64_t> c(gen_exp_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = gen_exp_[i] + other.gen_exp_[i];
    return DirichletCharacter(group_, std::move(c));
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<std::int64_t> c(gen_exp_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -gen_exp_[i];
    return DirichletCharacter(group_, std::move(c));
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
    return modulus() == other.modulus() && gen_exp_ == other.gen_exp_;
}

DirichletCharacter DirichletCharacter::primitive_inducer() const {
    const std::int64_t f = conductor_;
    const std::int64_t m = modulus();
    auto g = std::make_shared<const UnitGroup>(f);
    const std::int64_t phi = group_->order();
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        std::int64_t lift = g->generators()[i];
        while (std::gcd(lift, m) != 1) lift += f;
        const std::int64_t e = table_[mod(lift, m)];
        const std::int64_t n_i = g->generator_orders()[i];
        // chi(lift) = zeta_phi^e must be an n_i-th root of unity.
        if ((e * n_i) % phi != 0) throw ContractError("internal", "primitive_inducer: inconsistent lift");
        c.push_back(e * n_i / phi);
    }
    return DirichletCharacter(std::move(g), std::move(c));
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t m) {
    auto g = std::make_shared<const UnitGroup>(m);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(g->order()));
    const auto& orders = g->generator_orders();
    std::vector<std::int64_t> c(orders.size(), 0);
    for (std::int64_t count = 0; count < g->order(); ++count) {
        out.emplace_back(g, c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (++c[i] < orders[i]) break;
            c[i] = 0;
        }
    }
    return out;
}

DirichletCharacter character(std::int64_t m, std::int64_t index) {
    auto g = std::make_shared<const UnitGroup>(m);
    if (index < 0 || index >= g->order())
        throw ContractError("domain", "character index out of range [0, phi(m))");
    std::vector<std::int64_t> c;
    for (auto n : g->generator_orders()) {
        c.push_back(index % n);
        index /= n;
    }
    return DirichletCharacter(std::move(g), std::move(c));
}

DirichletCharacter trivial_character() { return character(1, 0); }

bool is_primitive_by_criterion(const DirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    for (std::int64_t d : divisors(m)) {
        if (d == m) continue;
        bool witness = false;
        for (std::int64_t a = 1; a < m && !witness; a += d) {
            const auto e = chi.exponent(a);
            if (e && *e != 0) witness = true;
        }
        if (!witness) return false;
    }
    return true;
}

GaussSum gauss_sum(const DirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    cplx tau{0.0, 0.0};
    for (std::int64_t a = 0; a < m; ++a) tau += chi(a) * root_of_unity(a, m);
    return {tau, m, chi.index()};
}

cplx root_number(const DirichletCharacter& chi) {
    if (!chi.is_primitive() || chi.is_trivial())
        throw ContractError("imprimitive", "root_number: requires a primitive nontrivial character");
    const cplx iq = chi.parity() == 1 ? cplx{0.0, 1.0} : cplx{1.0, 0.0};
    const cplx w = gauss_sum(chi).value / (iq * std::sqrt(static_cast<double>(chi.modulus())));
    if (std::abs(std::abs(w) - 1.0) > 1e-10)
        throw ContractError("contract", "root_number: |W| != 1");
    return w;
}

nlohmann::json to_json(const DirichletCharacter& chi) {
    return {{"modulus", chi.modulus()},
            {"index", chi.index()},
            {"conductor", chi.conductor()},
            {"parity", chi.parity()},
            {"generators", chi.group().generators()},
            {"generator_orders", chi.group().generator_orders()},
            {"generator_images", chi.generator_exponents()},
            {"primitive", chi.is_primitive()}};
}

}  // namespace efl
