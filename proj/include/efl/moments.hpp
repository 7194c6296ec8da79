#pragma once

// Finite multisets in the critical strip compared through the moments
// m_r = sum 1/(u - 2)^{2+r}.

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace efl {

using cplx = std::complex<double>;

struct StripMultiset {
    std::vector<std::pair<cplx, int>> points;  // location, multiplicity
    std::string label;

    /// 0 <= Re <= 1 and multiplicities >= 1; throws otherwise.
    void validate() const;
    /// Points repeated by multiplicity.
    std::vector<cplx> expanded() const;
    std::size_t cardinality() const;

    static StripMultiset from_json(const nlohmann::json& j);
    /// JSON ({label, points: [[re, im, mult], ...]}) or a zero CSV (re,im,multiplicity).
    static StripMultiset load(const std::string& path);
};

struct MomentComparison {
    bool equal = false;
    std::optional<int> first_differing_moment;
    std::optional<std::vector<std::pair<int, int>>> bijection;  // indices into the expanded lists
    bool inconsistent = false;  // moments agree but no bijection within 10 tol
    double max_moment_gap = 0;
    int order = 0;
    double tol = 0;

    nlohmann::json to_json() const;
};

inline constexpr std::size_t kMaxMultisetSize = 12;

/// R < 0 selects 2 max(|A|, |B|).
MomentComparison compare(const StripMultiset& A, const StripMultiset& B, int R = -1, double tol = 1e-8);

}  // namespace efl
