#include "svmaj/majorize.hpp"

#include "svmaj/errors.hpp"

namespace svmaj {

Json MajorisationReport::to_json() const {
    Json j = Json::object();
    j["verdict"] = verdict;
    j["boundary"] = boundary;
    j["margins"] = to_json_strings(partial_margins);
    j["worst_k"] = worst_k;
    j["left"] = to_json_strings(left.values());
    j["right"] = to_json_strings(right.values());
    return j;
}

MajorisationReport weak_majorisation_leq(const linalg::SingularValues& a, const linalg::SingularValues& b,
                                         const PrecisionConfig& prec) {
    if (a.size() != b.size()) throw DimensionMismatch("weak_majorisation_leq: lengths differ");
    if (a.size() == 0) throw DomainError("weak_majorisation_leq: empty vectors");

    MajorisationReport report{a, b, {}, true, false, 1};
    Real left_sum = prec.zero();
    Real right_sum = prec.zero();
    for (std::size_t k = 0; k < a.size(); ++k) {
        left_sum += a[k];
        right_sum += b[k];
        report.partial_margins.push_back(right_sum - left_sum);
        if (report.partial_margins.back() < report.partial_margins[report.worst_k - 1]) report.worst_k = k + 1;
    }
    const Real tol = prec.tau(right_sum);
    const Real& worst = report.min_margin();
    report.verdict = worst >= -tol;
    report.boundary = abs(worst) < tol;
    return report;
}

bool weyl_crosscheck(const Matrix& x, const Matrix& y, const PrecisionConfig& prec) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols()) {
        throw DimensionMismatch("weyl_crosscheck: matrices must be square of equal size");
    }
    const linalg::SingularValues sx = linalg::svd_values(x, prec);
    const linalg::SingularValues sy = linalg::svd_values(y, prec);
    Real prod_x = prec.one();
    Real prod_y = prec.one();
    for (std::size_t k = 1; k <= x.rows(); ++k) {
        prod_x *= sx[k - 1];
        prod_y *= sy[k - 1];
        const Real cx = linalg::operator_norm(linalg::compound(x, k), prec);
        const Real cy = linalg::operator_norm(linalg::compound(y, k), prec);
        // The compound route must reproduce the partial products ...
        if (abs(cx - prod_x) > prec.tau(prod_x) || abs(cy - prod_y) > prec.tau(prod_y)) return false;
        // ... and therefore decide the k-th log-majorisation comparison the same way.
        const Real tol = prec.tau(max(prod_x, prod_y));
        const bool by_compound = cx <= cy + tol;
        const bool by_products = prod_x <= prod_y + tol;
        if (by_compound != by_products && abs(prod_x - prod_y) > tol * 2L) return false;
    }
    return true;
}

}  // namespace svmaj
