#include "efl/lefschetz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <unsupported/Eigen/MatrixFunctions>

#include "efl/arith.hpp"
#include "efl/characters.hpp"
#include "efl/quadrature.hpp"

namespace efl {

namespace {

constexpr double kRepTol = 1e-12;

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> s = {g.identity()};
    std::vector<int> frontier = {g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : gens) {
                const int z = g.mul(x, y);
                if (s.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    return {s.begin(), s.end()};
}

}  // namespace

// ---- FiniteGroup -----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string label)
    : table_(std::move(table)), label_(std::move(label)) {
    const int n = order();
    if (n == 0) throw ContractError("group", "FiniteGroup: empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw ContractError("group", "FiniteGroup: table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw ContractError("group", "FiniteGroup: entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw ContractError("group", "FiniteGroup: no identity element");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
        throw ContractError("group", "FiniteGroup: an element has no inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw ContractError("group", "FiniteGroup: table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw ContractError("group", "cyclic: order must be >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FiniteGroup(std::move(t), a.label() + " x " + b.label());
}

FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p = {0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
            t[a][b] = index(c);
        }
    return FiniteGroup(std::move(t), "S3");
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return cyclic(j.at("data").get<int>());
    if (kind == "table") return FiniteGroup(j.at("data").get<std::vector<std::vector<int>>>());
    if (kind == "product") {
        const auto orders = j.at("data").get<std::vector<int>>();
        if (orders.empty()) throw ContractError("group", "product group needs at least one factor");
        FiniteGroup g = cyclic(orders.front());
        for (std::size_t i = 1; i < orders.size(); ++i) g = product(g, cyclic(orders[i]));
        return g;
    }
    if (kind == "s3") return symmetric3();
    throw ContractError("group", "unknown group kind '" + kind + "'");
}

int FiniteGroup::pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
    if (h.empty()) return false;
    std::set<int> s(h.begin(), h.end());
    if (s.size() != h.size()) return false;
    for (int x : h)
        if (x < 0 || x >= order()) return false;
    for (int x : h)
        for (int y : h)
            if (!s.count(mul(x, inv(y)))) return false;
    return true;
}

bool FiniteGroup::normalizes(int g, const std::vector<int>& h) const {
    std::set<int> s(h.begin(), h.end());
    for (int x : h)
        if (!s.count(mul(mul(g, x), inv(g)))) return false;
    return true;
}

std::vector<int> FiniteGroup::coset_representatives(const std::vector<int>& h) const {
    std::vector<char> seen(static_cast<std::size_t>(order()), 0);
    std::vector<int> reps;
    for (int g = 0; g < order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int x : h) seen[mul(g, x)] = 1;
    }
    return reps;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
    std::set<std::vector<int>> out;
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) out.insert(closure(*this, {a, b, c}));
    return {out.begin(), out.end()};
}

// ---- FiniteRep -------------------------------------------------------------

FiniteRep::FiniteRep(std::shared_ptr<const FiniteGroup> g, std::vector<Matrix> mats)
    : group_(std::move(g)), mats_(std::move(mats)) {
    const int n = group_->order();
    if (static_cast<int>(mats_.size()) != n) throw ContractError("rep", "FiniteRep: one matrix per element required");
    const auto d = mats_.front().rows();
    for (const Matrix& m : mats_) {
        if (m.rows() != d || m.cols() != d) throw ContractError("rep", "FiniteRep: matrices must be square of equal size");
        if (max_abs(m * m.adjoint() - Matrix::Identity(d, d)) > kRepTol)
            throw ContractError("rep", "FiniteRep: matrix is not unitary");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (max_abs(mats_[a] * mats_[b] - mats_[group_->mul(a, b)]) > kRepTol)
                throw ContractError("rep", "FiniteRep: not a homomorphism");
}

FiniteRep FiniteRep::one_dim(std::shared_ptr<const FiniteGroup> g, std::vector<std::int64_t> exponents, std::int64_t n) {
    std::vector<Matrix> mats;
    for (std::int64_t e : exponents) {
        Matrix m(1, 1);
        m(0, 0) = root_of_unity(e, n);
        mats.push_back(m);
    }
    FiniteRep r(std::move(g), std::move(mats));
    r.exact_ = std::make_pair(std::move(exponents), n);
    return r;
}

FiniteRep FiniteRep::trivial(std::shared_ptr<const FiniteGroup> g, int dim) {
    if (dim == 1) return one_dim(g, std::vector<std::int64_t>(static_cast<std::size_t>(g->order()), 0), 1);
    std::vector<Matrix> mats(static_cast<std::size_t>(g->order()), Matrix::Identity(dim, dim));
    return FiniteRep(std::move(g), std::move(mats));
}

FiniteRep FiniteRep::cyclic_character(std::shared_ptr<const FiniteGroup> g, std::int64_t k) {
    const std::int64_t n = g->order();
    std::vector<std::int64_t> e(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) e[i] = mod(k * i, n);
    return one_dim(std::move(g), std::move(e), n);
}

FiniteRep FiniteRep::s3_standard(std::shared_ptr<const FiniteGroup> g) {
    if (g->order() != 6) throw ContractError("rep", "s3_standard: group of order 6 required");
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p = {0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    Eigen::MatrixXd B(3, 2);
    B << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0.0, -2 / std::sqrt(6.0);
    std::vector<Matrix> mats;
    for (const auto& q : perms) {
        Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 3);
        for (int i = 0; i < 3; ++i) P(q[i], i) = 1.0;
        mats.push_back((B.transpose() * P * B).cast<cplx>());
    }
    return FiniteRep(std::move(g), std::move(mats));
}

FiniteRep FiniteRep::direct_sum(const std::vector<FiniteRep>& parts) {
    if (parts.empty()) throw ContractError("rep", "direct_sum: no summands");
    int d = 0;
    for (const auto& r : parts) d += r.dim();
    const int n = parts.front().group().order();
    std::vector<Matrix> mats;
    for (int g = 0; g < n; ++g) {
        Matrix m = Matrix::Zero(d, d);
        int off = 0;
        for (const auto& r : parts) {
            m.block(off, off, r.dim(), r.dim()) = r(g);
            off += r.dim();
        }
        mats.push_back(m);
    }
    return FiniteRep(parts.front().group_ptr(), std::move(mats));
}

FiniteRep FiniteRep::from_json(std::shared_ptr<const FiniteGroup> g, const nlohmann::json& j) {
    const int d = j.at("dimension").get<int>();
    std::vector<Matrix> mats;
    for (const auto& jm : j.at("matrices")) {
        Matrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const auto& v = jm.at(r).at(c);
                m(r, c) = v.is_array() ? cplx{v.at(0).get<double>(), v.at(1).get<double>()} : cplx{v.get<double>(), 0.0};
            }
        mats.push_back(m);
    }
    return FiniteRep(std::move(g), std::move(mats));
}

Matrix inertia_projector(const FiniteRep& rho, const std::vector<int>& h) {
    const FiniteGroup& G = rho.group();
    if (!G.is_subgroup(h)) throw ContractError("subgroup", "inertia_projector: input is not a subgroup");
    Matrix P = Matrix::Zero(rho.dim(), rho.dim());
    for (int u : h) P += rho(u);
    P /= static_cast<double>(h.size());
    if (max_abs(P * P - P) > kRepTol) throw ContractError("contract", "inertia_projector: P is not idempotent");
    for (int g = 0; g < G.order(); ++g)
        if (G.normalizes(g, h) && max_abs(P * rho(g) - rho(g) * P) > kRepTol)
            throw ContractError("contract", "inertia_projector: P does not commute with the normaliser");
    return P;
}

bool exact_character_sum_vanishes(const FiniteRep& rho, const std::vector<int>& h) {
    if (!rho.exact()) throw ContractError("rep", "exact_character_sum_vanishes: exponent data required");
    const auto& [exps, n] = *rho.exact();
    std::map<std::int64_t, int> count;
    for (int u : h) ++count[mod(exps[static_cast<std::size_t>(u)], n)];
    if (count.size() < 2 || !count.count(0)) return false;
    const int c0 = count.begin()->second;
    for (const auto& [e, c] : count) {
        if (c != c0) return false;
        for (const auto& [f, d] : count)
            if (!count.count(mod(e + f, n))) return false;
    }
    return true;
}

// ---- OrbitModel ------------------------------------------------------------

int SignTable::sign(int k, int g) const {
    if (all_plus) return 1;
    for (const auto& [kk, row] : rows)
        if (kk == k) return row[static_cast<std::size_t>(g)];
    throw ContractError("sign_table", "sign table does not cover k = " + std::to_string(k));
}

bool SignTable::covers(int k) const {
    if (all_plus) return true;
    return std::any_of(rows.begin(), rows.end(), [k](const auto& r) { return r.first == k; });
}

void OrbitModel::validate() const {
    if (!group) throw ContractError("model", "orbit model without a group");
    const FiniteGroup& G = *group;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        const std::string where = "orbit " + std::to_string(i) + ": ";
        if (!(o.length > 0.0)) throw ContractError("model", where + "length must be positive");
        if (!G.is_subgroup(o.stabilizer)) throw ContractError("model", where + "stabilizer is not a subgroup");
        if (o.holonomy < 0 || o.holonomy >= G.order()) throw ContractError("model", where + "holonomy out of range");
        if (!G.normalizes(o.holonomy, o.stabilizer))
            throw ContractError("model", where + "holonomy does not normalise the stabilizer");
        for (const auto& [k, row] : o.signs.rows) {
            if (k == 0 || static_cast<int>(row.size()) != G.order())
                throw ContractError("model", where + "malformed sign table row");
            for (int g = 0; g < G.order(); ++g) {
                if (row[g] != 1 && row[g] != -1) throw ContractError("model", where + "signs must be +1 or -1");
                for (int u : o.stabilizer)
                    if (row[G.mul(g, u)] != row[g])
                        throw ContractError("signcte", where + "sign not constant on an inertia coset");
            }
        }
    }
    for (const auto& fp : fixed_points) {
        if (fp.involution) {
            if (fp.place != PlaceType::Complex) throw ContractError("model", "involution given at a real place");
            const int h = *fp.involution;
            if (h < 0 || h >= G.order() || G.mul(h, h) != G.identity())
                throw ContractError("model", "fixed-point involution must square to the identity");
        }
    }
}

OrbitModel OrbitModel::from_json(const nlohmann::json& j) {
    OrbitModel m;
    m.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_json(j.at("group")));
    m.label = j.value("label", std::string("model"));
    for (const auto& jo : j.at("orbits")) {
        PrimitiveOrbit o;
        if (jo.contains("log_length"))
            o.length = std::log(jo.at("log_length").get<double>());
        else
            o.length = jo.at("length").get<double>();
        o.holonomy = jo.value("holonomy", m.group->identity());
        o.stabilizer = jo.value("stabilizer", std::vector<int>{m.group->identity()});
        if (jo.contains("signs") && jo.at("signs").is_object()) {
            o.signs.all_plus = false;
            for (const auto& [k, row] : jo.at("signs").items())
                o.signs.rows.emplace_back(std::stoi(k), row.get<std::vector<int>>());
        } else if (jo.contains("signs") && jo.at("signs") != "all_plus") {
            throw ContractError("model", "signs must be \"all_plus\" or a table");
        }
        m.orbits.push_back(std::move(o));
    }
    if (j.contains("fixed_points"))
        for (const auto& jf : j.at("fixed_points")) {
            FixedPointDatum f;
            const std::string place = jf.at("place_type").get<std::string>();
            if (place == "real")
                f.place = PlaceType::Real;
            else if (place == "complex")
                f.place = PlaceType::Complex;
            else
                throw ContractError("model", "place_type must be real or complex");
            if (jf.contains("involution") && !jf.at("involution").is_null()) f.involution = jf.at("involution").get<int>();
            f.leafwise_rotation = jf.value("leafwise_rotation", true);
            m.fixed_points.push_back(f);
        }
    m.validate();
    return m;
}

OrbitModel OrbitModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("io", "cannot open model file " + path);
    return from_json(nlohmann::json::parse(in));
}

// ---- the two sides ---------------------------------------------------------

namespace {

int max_iterate(const PrimitiveOrbit& o, const TestFunction& a) {
    return static_cast<int>(std::floor(a.reach() / o.length));
}

void check_signs(const PrimitiveOrbit& o, int K, std::size_t idx, const FiniteGroup& G, std::vector<std::string>& flags) {
    for (int k = 1; k <= K; ++k) {
        if (!o.signs.covers(k) || !o.signs.covers(-k))
            throw ContractError("sign_table", "orbit " + std::to_string(idx) + ": sign table must cover both k and -k");
        for (int g = 0; g < G.order(); ++g)
            if (o.signs.sign(k, g) != o.signs.sign(-k, g)) {
                flags.push_back("orbit " + std::to_string(idx) + ": signs differ between k = " + std::to_string(k) +
                                " and k = " + std::to_string(-k));
                break;
            }
    }
}

void require_alpha_zero(const TestFunction& a) {
    if (a.support_contains_zero()) throw ContractError("support", "orbit sides require alpha(0) = 0 (support excluding 0)");
}

}  // namespace

OrbitSide statement_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a, Exec exec) {
    require_alpha_zero(a);
    const FiniteGroup& G = *model.group;
    OrbitSide out;
    std::vector<std::vector<std::string>> flag_parts(model.orbits.size());
    out.per_orbit = map<cplx>(
        model.orbits.size(),
        [&](std::size_t i) {
            const PrimitiveOrbit& o = model.orbits[i];
            const int K = max_iterate(o, a);
            check_signs(o, K, i, G, flag_parts[i]);
            Matrix P = Matrix::Identity(rho.dim(), rho.dim());
            if (o.ramified()) {
                const bool vanishes = rho.exact() ? exact_character_sum_vanishes(rho, o.stabilizer)
                                                  : max_abs(inertia_projector(rho, o.stabilizer)) < kRepTol;
                if (vanishes) return cplx{0.0, 0.0};  // the orbit does not contribute
                P = inertia_projector(rho, o.stabilizer);
                flag_parts[i].push_back("orbit " + std::to_string(i) +
                                        ": rho has invariants on the stabilizer; entered through Tr(rho(h0^k) P_H)");
            }
            const auto reps = G.coset_representatives(o.stabilizer);
            auto eps = [&](int k) {
                double s = 0.0;
                for (int l : reps) s += o.signs.sign(k, l);
                return s / static_cast<double>(reps.size());
            };
            std::vector<cplx> terms;
            for (int k = 1; k <= K; ++k) {
                const cplx fwd = (rho(G.pow(o.holonomy, k)) * P).trace();
                const cplx bwd = (rho(G.pow(o.holonomy, -k)) * P).trace();
                terms.push_back(o.length * (eps(-k) * bwd * a(-k * o.length) + eps(k) * fwd * a(k * o.length)));
                if (std::abs(std::abs(eps(k)) - 1.0) > 0.0 || std::abs(std::abs(eps(-k)) - 1.0) > 0.0)
                    flag_parts[i].push_back("orbit " + std::to_string(i) + ": signs differ between lifts; averaged");
            }
            return pairwise_sum(terms);
        },
        exec);
    for (auto& f : flag_parts) out.flags.insert(out.flags.end(), f.begin(), f.end());
    std::sort(out.flags.begin(), out.flags.end());
    out.flags.erase(std::unique(out.flags.begin(), out.flags.end()), out.flags.end());
    out.total = pairwise_sum(out.per_orbit);
    return out;
}

OrbitSide proof_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a, Exec exec) {
    require_alpha_zero(a);
    const FiniteGroup& G = *model.group;
    const double inv_order = 1.0 / G.order();
    OrbitSide out;
    std::vector<std::vector<std::string>> flag_parts(model.orbits.size());
    out.per_orbit = map<cplx>(
        model.orbits.size(),
        [&](std::size_t i) {
            const PrimitiveOrbit& o = model.orbits[i];
            const int K = max_iterate(o, a);
            check_signs(o, K, i, G, flag_parts[i]);
            const auto reps = G.coset_representatives(o.stabilizer);
            std::vector<cplx> terms;
            for (int k = -K; k <= K; ++k) {
                if (k == 0) continue;
                const int hk = G.pow(o.holonomy, k);
                cplx acc{0.0, 0.0};
                for (int l : reps) {
                    const int conj = G.mul(G.mul(l, hk), G.inv(l));
                    const int sign = o.signs.sign(k, l);
                    // curves labelled by u in l H l^{-1}: monodromy u^{-1} l h0^k l^{-1}
                    for (int s : o.stabilizer) {
                        const int u = G.mul(G.mul(l, s), G.inv(l));
                        acc += static_cast<double>(sign) * rho.trace(G.mul(G.inv(u), conj));
                    }
                }
                terms.push_back(inv_order * o.length * acc * a(k * o.length));
            }
            return pairwise_sum(terms);
        },
        exec);
    for (auto& f : flag_parts) out.flags.insert(out.flags.end(), f.begin(), f.end());
    std::sort(out.flags.begin(), out.flags.end());
    out.flags.erase(std::unique(out.flags.begin(), out.flags.end()), out.flags.end());
    out.total = pairwise_sum(out.per_orbit);
    return out;
}

// ---- fixed points ----------------------------------------------------------

double gs_fixed_point_factor(const FixedPointDatum& place, double t) {
    if (t == 0.0) throw ContractError("domain", "fixed-point factor undefined at t = 0");
    return place.place == PlaceType::Real ? 1.0 / std::abs(std::expm1(-2.0 * t)) : 1.0 / std::abs(std::expm1(-t));
}

cplx averaged_fixed_point_factor(double t, cplx eps) {
    if (t == 0.0) throw ContractError("domain", "averaged factor undefined at t = 0");
    if (std::abs(std::abs(eps) - 1.0) > 1e-12) throw ContractError("domain", "involution character must have modulus 1");
    if (t > 0.0) return 0.5 * (1.0 / -std::expm1(-t) + eps / (1.0 + std::exp(-t)));
    const double e = std::exp(t);
    return 0.5 * (e / -std::expm1(t) + eps * e / (1.0 + e));
}

double efk_weight(PlaceType place, double t) {
    if (t == 0.0) throw ContractError("domain", "weight undefined at t = 0");
    if (place == PlaceType::Real) return t > 0.0 ? 1.0 / -std::expm1(-2.0 * t) : std::exp(t) / -std::expm1(2.0 * t);
    return t > 0.0 ? 1.0 / -std::expm1(-t) : std::exp(t) / -std::expm1(t);
}

cplx fixed_point_side(const OrbitModel& model, const FiniteRep& rho, const TestFunction& a) {
    require_alpha_zero(a);
    const double N = rho.dim();
    auto weight = [&](double t) {
        cplx w{0.0, 0.0};
        for (const auto& fp : model.fixed_points) {
            if (fp.place == PlaceType::Real) {
                w += N * efk_weight(PlaceType::Real, t);
            } else if (fp.involution) {
                // linear in the involution character: N * averaged(t, Tr rho(h)/N)
                const double e = t > 0.0 ? 1.0 : std::exp(t);
                const double A = t > 0.0 ? 1.0 / -std::expm1(-t) : e / -std::expm1(t);
                const double B = t > 0.0 ? 1.0 / (1.0 + std::exp(-t)) : e / (1.0 + e);
                w += 0.5 * (N * A + rho.trace(*fp.involution) * B);
            } else {
                w += N * efk_weight(PlaceType::Complex, t);
            }
        }
        return w;
    };
    return integrate_adaptive([&](double t) { return a(t) * weight(t); }, a.support_lo(), a.support_hi(), 1e-13).value;
}

InvariantTrace invariant_trace_check(const FiniteRep& action, const Matrix& theta, cplx z, double t) {
    const int d = action.dim();
    if (theta.rows() != d || theta.cols() != d) throw ContractError("domain", "theta must act on the representation space");
    const double scale = std::max(1.0, max_abs(theta));
    for (int g = 0; g < action.group().order(); ++g)
        if (max_abs(theta * action(g) - action(g) * theta) > 1e-10 * scale)
            throw ContractError("commute", "theta does not commute with the group action");
    Matrix P = Matrix::Zero(d, d);
    for (int g = 0; g < action.group().order(); ++g) P += action(g);
    P /= static_cast<double>(action.group().order());
    const int dim = static_cast<int>(std::lround(P.trace().real()));
    if (dim == 0) return {0, 0.0, cplx{0.0, 0.0}};

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (P + P.adjoint()));
    const Matrix Q = es.eigenvectors().rightCols(dim);  // eigenvalue 1
    const Matrix restricted = Q.adjoint() * theta * Q;
    Matrix N = restricted - z * Matrix::Identity(dim, dim);
    Matrix power = Matrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) power = power * N;
    if (max_abs(power) > 1e-8 * std::pow(scale, dim))
        throw ContractError("nilpotent", "theta - z is not nilpotent on the invariant subspace");
    const Matrix e = (t * restricted).exp();
    const cplx tr = e.trace();
    return {dim, std::abs(tr - static_cast<double>(dim) * std::exp(t * z)), tr};
}

double dirac_jacobian_factor(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols() || A.rows() == 0) throw ContractError("domain", "dirac_jacobian_factor: square matrix required");
    const double det = A.determinant();
    const double norm = std::max(1.0, A.cwiseAbs().maxCoeff());
    if (std::abs(det) <= 1e-14 * std::pow(norm, static_cast<double>(A.rows())))
        throw ContractError("singular", "dirac_jacobian_factor: matrix is singular");
    return 1.0 / std::abs(det);
}

}  // namespace efl
