#include "efl/moments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "efl/arith.hpp"
#include "efl/explicit_formula.hpp"

namespace efl {

void StripMultiset::validate() const {
    for (const auto& [u, m] : points) {
        if (u.real() < 0.0 || u.real() > 1.0) throw ContractError("domain", "multiset point outside the critical strip");
        if (m < 1) throw ContractError("domain", "multiplicities must be >= 1");
    }
}

std::vector<cplx> StripMultiset::expanded() const {
    std::vector<cplx> out;
    for (const auto& [u, m] : points)
        for (int i = 0; i < m; ++i) out.push_back(u);
    return out;
}

std::size_t StripMultiset::cardinality() const {
    std::size_t n = 0;
    for (const auto& p : points) n += static_cast<std::size_t>(p.second);
    return n;
}

StripMultiset StripMultiset::from_json(const nlohmann::json& j) {
    StripMultiset s;
    s.label = j.value("label", std::string("multiset"));
    for (const auto& p : j.at("points")) {
        const int m = p.size() > 2 ? p.at(2).get<int>() : 1;
        s.points.emplace_back(cplx{p.at(0).get<double>(), p.at(1).get<double>()}, m);
    }
    s.validate();
    return s;
}

StripMultiset StripMultiset::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("io", "cannot open multiset file " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        StripMultiset s;
        s.label = path;
        std::string line;
        std::getline(in, line);
        if (line.rfind("re,im", 0) != 0) throw ContractError("io", "CSV must start with the header re,im,multiplicity");
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::stringstream ss(line);
            std::string a, b, c;
            std::getline(ss, a, ',');
            std::getline(ss, b, ',');
            std::getline(ss, c, ',');
            s.points.emplace_back(cplx{std::stod(a), std::stod(b)}, c.empty() ? 1 : std::stoi(c));
        }
        s.validate();
        return s;
    }
    auto j = nlohmann::json::parse(in);
    if (!j.contains("label")) j["label"] = path;
    return from_json(j);
}

nlohmann::json MomentComparison::to_json() const {
    nlohmann::json j = {{"equal", equal},
                        {"order", order},
                        {"tol", tol},
                        {"max_moment_gap", max_moment_gap},
                        {"inconsistent", inconsistent},
                        {"gap_assumption", "moments compared up to tol; bijection verified within 10 tol"}};
    j["first_differing_moment"] = first_differing_moment ? nlohmann::json(*first_differing_moment) : nlohmann::json();
    if (bijection) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [a, b] : *bijection) pairs.push_back({a, b});
        j["bijection"] = pairs;
    } else {
        j["bijection"] = nullptr;
    }
    return j;
}

MomentComparison compare(const StripMultiset& A, const StripMultiset& B, int R, double tol) {
    A.validate();
    B.validate();
    const auto a = A.expanded(), b = B.expanded();
    if (a.size() > kMaxMultisetSize || b.size() > kMaxMultisetSize)
        throw ContractError("oversize", "compare: multisets are limited to 12 points");
    if (R < 0) R = 2 * static_cast<int>(std::max(a.size(), b.size()));

    MomentComparison out;
    out.order = R;
    out.tol = tol;
    const auto ma = moment_vector(a, R), mb = moment_vector(b, R);
    for (int r = 0; r <= R; ++r) {
        const double gap = std::abs(ma[static_cast<std::size_t>(r)] - mb[static_cast<std::size_t>(r)]);
        out.max_moment_gap = std::max(out.max_moment_gap, gap);
        if (gap > tol && !out.first_differing_moment) out.first_differing_moment = r;
    }
    out.equal = !out.first_differing_moment;
    if (!out.equal) return out;

    // greedy nearest-pair matching, then check every pair within 10 tol
    if (a.size() != b.size()) {
        out.inconsistent = true;
        return out;
    }
    std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t step = 0; step < a.size(); ++step) {
        double best = 1e300;
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (used_a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (used_b[j]) continue;
                const double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        }
        used_a[bi] = used_b[bj] = 1;
        pairs.emplace_back(bi, bj);
        if (best > 10.0 * tol) out.inconsistent = true;
    }
    std::sort(pairs.begin(), pairs.end());
    if (!out.inconsistent) out.bijection = std::move(pairs);
    return out;
}

}  // namespace efl
