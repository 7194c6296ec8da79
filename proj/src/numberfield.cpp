#include "efl/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace efl {

CyclotomicField cyclotomic_field(std::int64_t m) {
    if (m < 1) throw ContractError("domain", "cyclotomic_field: m must be >= 1");
    CyclotomicField K;
    K.requested_m = m;
    K.m = (m % 4 == 2) ? m / 2 : m;
    K.degree = euler_phi(K.m);
    K.r1 = K.m <= 2 ? static_cast<int>(K.degree) : 0;
    K.r2 = K.m <= 2 ? 0 : static_cast<int>(K.degree / 2);
    K.log_abs_discriminant = 0.0;
    unsigned __int128 exact = 1;
    bool fits = true;
    for (const auto& chi : enumerate_characters(K.m)) {
        const std::int64_t f = chi.conductor();
        K.log_abs_discriminant += std::log(static_cast<double>(f));
        exact *= static_cast<unsigned __int128>(f);
        if (exact > static_cast<unsigned __int128>(UINT64_MAX)) fits = false;
    }
    if (fits) K.abs_discriminant = static_cast<std::uint64_t>(exact);
    return K;
}

PrimeSplitting split_prime(std::int64_t m, std::int64_t p) {
    if (m < 1) throw ContractError("domain", "split_prime: m must be >= 1");
    if (!is_prime(p)) throw ContractError("domain", "split_prime: p must be prime");
    const int nu = valuation(m, p);
    const std::int64_t pnu = ipow(p, nu);
    const std::int64_t rest = m / pnu;
    PrimeSplitting s;
    s.p = p;
    s.e = euler_phi(pnu);
    s.f = rest == 1 ? 1 : multiplicative_order(p % rest, rest);
    s.r = euler_phi(m) / (s.e * s.f);
    s.norm = ipow(p, static_cast<int>(s.f));
    return s;
}

DecompositionData decomposition_data(std::int64_t m, std::int64_t p) {
    const PrimeSplitting sp = split_prime(m, p);
    const int nu = valuation(m, p);
    const std::int64_t pnu = ipow(p, nu);
    const std::int64_t rest = m / pnu;

    DecompositionData d;
    d.m = m;
    d.p = p;
    d.f = sp.f;
    d.frobenius = mod(crt_pair(p % rest, rest, 1 % pnu, pnu), m);
    const std::vector<std::int64_t> us = units(m);
    for (std::int64_t u : us)
        if (mod(u, rest) == 1 % rest) d.inertia_group.push_back(u);

    // h = Frob^a * u with u in inertia, read off from h mod m/p^nu
    std::vector<char> hit(static_cast<std::size_t>(d.f), 0);
    for (std::int64_t h : us) {
        std::int64_t pa = 1 % rest;
        for (std::int64_t a = 0; a < d.f; ++a) {
            if (mod(h, rest) == pa) {
                d.decomposition_group.push_back(h);
                d.exponent_map[h] = a;
                hit[static_cast<std::size_t>(a)] = 1;
                break;
            }
            pa = mod(pa * p, rest);
        }
    }
    if (static_cast<std::int64_t>(d.inertia_group.size()) != sp.e ||
        static_cast<std::int64_t>(d.decomposition_group.size()) != sp.e * sp.f ||
        std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw ContractError("contract", "decomposition_data: group orders or exponent map inconsistent");
    return d;
}

const DecompositionData& cached_decomposition_data(std::int64_t m, std::int64_t p) {
    static std::shared_mutex mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<DecompositionData>> cache;
    const auto key = std::make_pair(m, p);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto fresh = std::make_unique<DecompositionData>(decomposition_data(m, p));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(fresh));
    return *it->second;
}

int invariant_dimension(const DirichletCharacter& chi, std::int64_t p) {
    const auto& d = cached_decomposition_data(chi.modulus(), p);
    for (std::int64_t u : d.inertia_group)
        if (chi.exponent(u).value_or(-1) != 0) return 0;
    return 1;
}

cplx artin_frobenius_trace(const DirichletCharacter& chi, std::int64_t p, std::int64_t k) {
    if (invariant_dimension(chi, p) == 0) return {0.0, 0.0};
    const auto& d = cached_decomposition_data(chi.modulus(), p);
    const std::int64_t e = *chi.exponent(d.frobenius);
    const std::int64_t n = chi.group().order();
    return root_of_unity(mod(e * mod(k, n), n), n);
}

cplx artin_local_factor(const DirichletCharacter& chi, std::int64_t p, cplx x) {
    if (invariant_dimension(chi, p) == 0) return {1.0, 0.0};
    return 1.0 - x * artin_frobenius_trace(chi, p, 1);
}

ArchimedeanSignature archimedean_signature(const DirichletCharacter& chi, std::int64_t m) {
    if (m <= 2) return {1, 0};
    return chi.parity() == 0 ? ArchimedeanSignature{1, 0} : ArchimedeanSignature{0, 1};
}

ArtinLocalData artin_local_data(const DirichletCharacter& chi, std::int64_t p) {
    ArtinLocalData out;
    out.p = p;
    out.invariant_dim = invariant_dimension(chi, p);
    if (out.invariant_dim == 1) out.frobenius_value = artin_frobenius_trace(chi, p, 1);
    out.signature = archimedean_signature(chi, chi.modulus());
    return out;
}

nlohmann::json splitting_report(std::int64_t m, std::int64_t p) {
    const PrimeSplitting s = split_prime(m, p);
    const auto& d = cached_decomposition_data(m, p);
    return {{"m", m},
            {"p", p},
            {"e", s.e},
            {"f", s.f},
            {"r", s.r},
            {"decomposition_order", d.decomposition_group.size()},
            {"inertia_order", d.inertia_group.size()}};
}

}  // namespace efl
