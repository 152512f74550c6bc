#pragma once

#include "svmaj/linalg.hpp"
#include "svmaj/serialize.hpp"

#include <cstddef>
#include <vector>

namespace svmaj {

/// Weak majorisation left <_w right with per-k diagnostics.
struct MajorisationReport {
    linalg::SingularValues left;
    linalg::SingularValues right;
    std::vector<Real> partial_margins;  ///< sum_{j<=k} right_j - sum_{j<=k} left_j, k = 1..d
    bool verdict = true;                ///< min margin >= -tau * max(1, sum right)
    bool boundary = false;              ///< |min margin| below the tolerance
    std::size_t worst_k = 1;            ///< 1-based index of the minimal margin

    [[nodiscard]] const Real& min_margin() const { return partial_margins[worst_k - 1]; }
    [[nodiscard]] Json to_json() const;
};

/// Throws DimensionMismatch on a length mismatch. Unsorted input cannot reach
/// here since SingularValues enforces the order at construction.
MajorisationReport weak_majorisation_leq(const linalg::SingularValues& a, const linalg::SingularValues& b,
                                         const PrecisionConfig& prec);

/// Compares, for every k, sigma_1 of the k-th compounds of X and Y against the
/// products of the k largest singular values, and the partial-product route
/// against the compound route. True iff both routes agree on every k.
bool weyl_crosscheck(const Matrix& x, const Matrix& y, const PrecisionConfig& prec);

}  // namespace svmaj
