#include "svmaj/linalg.hpp"

#include "svmaj/errors.hpp"
#include "svmaj/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace svmaj::linalg {

namespace {

constexpr int kMaxSweeps = 80;

Bits working_bits(const Matrix& m, const PrecisionConfig& prec) { return std::max(m.precision(), prec.bits()); }

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

bool is_hermitian_within(const Matrix& m, const Real& tol) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (abs(m(i, i).im) > tol) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (abs(m(i, j) - conj(m(j, i))) > tol) return false;
    }
    return true;
}

// Cyclic Jacobi on an exactly Hermitian matrix (only the upper triangle and the
// real diagonal are trusted). Returns unsorted eigenvalues and eigenvectors.
std::pair<std::vector<Real>, Matrix> jacobi(Matrix a, Bits bits) {
    const std::size_t n = a.rows();
    Matrix v = Matrix::identity(n, bits);
    const Real eps = ldexp(Real(1L, bits), -(static_cast<long>(bits) - 2));
    const Real tiny = eps * eps * a.frobenius_norm();
    const Real one(1L, bits);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const Real r = abs(b);
                if (r <= tiny) continue;
                const Real& app = a(p, p).re;
                const Real& aqq = a(q, q).re;
                // Relative skip criterion keeps small eigenvalues accurate for graded matrices.
                if (r * r <= eps * eps * abs(app * aqq)) continue;
                rotated = true;

                const Complex e = b / r;  // phase of a_pq
                const Real theta = (aqq - app) / (r * 2L);
                Real t = one / (abs(theta) + sqrt(theta * theta + 1L));
                if (theta.sign() < 0) t = -t;
                const Real c = one / sqrt(t * t + 1L);
                const Real s = t * c;

                // G = diag(1, conj(e)) * [[c, s], [-s, c]] on the (p, q) plane; A <- G* A G, V <- V G.
                const Complex ec = conj(e);
                const Complex g_pp(c);
                const Complex g_pq(s);
                const Complex g_qp = ec * (-s);
                const Complex g_qq = ec * c;

                const Real new_pp = app - t * r;
                const Real new_qq = aqq + t * r;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * g_pp + akq * g_qp;
                    a(k, q) = akp * g_pq + akq * g_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = conj(g_pp) * apk + conj(g_qp) * aqk;
                    a(q, k) = conj(g_pq) * apk + conj(g_qq) * aqk;
                }
                a(p, q) = Complex(bits);
                a(q, p) = Complex(bits);
                a(p, p) = Complex(new_pp);
                a(q, q) = Complex(new_qq);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * g_pp + vkq * g_qp;
                    v(k, q) = vkp * g_pq + vkq * g_qq;
                }
            }
        }
        if (!rotated) {
            std::vector<Real> values;
            values.reserve(n);
            for (std::size_t i = 0; i < n; ++i) values.push_back(a(i, i).re);
            return {std::move(values), std::move(v)};
        }
    }
    throw NumericError("hermitian_eig: Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
}

// Sorts eigenpairs descending by value; stable on ties.
void sort_descending(std::vector<Real>& values, Matrix& vectors) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[j] < values[i]; });
    std::vector<Real> sorted_values;
    Matrix sorted_vectors(vectors.rows(), n, vectors.precision());
    for (std::size_t c = 0; c < n; ++c) {
        sorted_values.push_back(values[order[c]]);
        for (std::size_t r = 0; r < vectors.rows(); ++r) sorted_vectors(r, c) = vectors(r, order[c]);
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

Matrix scale_columns(const Matrix& m, const std::vector<Real>& scales) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scales[j];
    return out;
}

Real one_norm(const Matrix& m) {
    Real best(m.precision());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Real col(m.precision());
        for (std::size_t i = 0; i < m.rows(); ++i) col += abs(m(i, j));
        best = max(best, col);
    }
    return best;
}

// Gauss-Jordan with partial pivoting at the matrix's own precision.
Matrix gauss_jordan_inverse(const Matrix& x) {
    const std::size_t n = x.rows();
    const Bits bits = x.precision();
    Matrix a = x;
    Matrix inv = Matrix::identity(n, bits);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        Real best = norm(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            Real cand = norm(a(r, col));
            if (cand > best) {
                best = std::move(cand);
                pivot = r;
            }
        }
        if (best.is_zero()) throw SingularityError("inverse: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Complex pivot_inv = Complex(Real(1L, bits)) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= pivot_inv;
            inv(col, j) *= pivot_inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Complex factor = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace

// ---- SingularValues ------------------------------------------------------------

SingularValues::SingularValues(std::vector<Real> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].sign() < 0) throw ContractViolation("singular values must be nonnegative");
        if (i > 0 && values_[i - 1] < values_[i]) throw ContractViolation("singular values must be descending");
    }
}

Real SingularValues::sum() const {
    Real s(values_.empty() ? Bits{53} : values_.front().precision());
    for (const auto& v : values_) s += v;
    return s;
}

SingularValues SingularValues::power(const Real& p) const {
    std::vector<Real> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(real_power(v, p));
    return SingularValues(std::move(out));
}

// ---- certification -----------------------------------------------------------

Matrix hermitian_part(const Matrix& m) {
    require_square(m, "hermitian_part");
    Matrix h = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        h(i, i).im = Real(m.precision());
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            Complex avg = (m(i, j) + conj(m(j, i))) * Real(0.5, m.precision());
            h(j, i) = conj(avg);
            h(i, j) = std::move(avg);
        }
    }
    return std::move(h).with_properties(Property::Hermitian);
}

Matrix certify_hermitian(const Matrix& m, const PrecisionConfig& prec) {
    require_square(m, "certify_hermitian");
    if (m.has(Property::Hermitian)) return m;
    if (!is_hermitian_within(m, prec.tau(m.frobenius_norm()))) {
        throw ContractViolation("matrix is not Hermitian within tolerance");
    }
    return hermitian_part(m);
}

Matrix certify_psd(const Matrix& m, const PrecisionConfig& prec) {
    Matrix h = certify_hermitian(m, prec);
    if (h.has(Property::Psd)) return h;
    const Real lo = min_eigenvalue(h, prec);
    if (lo < -prec.tau(h.frobenius_norm())) {
        throw ContractViolation("matrix is not PSD: minimum eigenvalue " + lo.to_string(12));
    }
    return std::move(h).with_properties(Property::Psd);
}

Matrix certify_positive_definite(const Matrix& m, const PrecisionConfig& prec) {
    Matrix h = certify_hermitian(m, prec);
    if (h.has(Property::PositiveDefinite)) return h;
    const Real lo = min_eigenvalue(h, prec);
    if (!(lo > prec.tau(h.frobenius_norm()))) {
        throw ContractViolation("matrix is not positive definite: minimum eigenvalue " + lo.to_string(12));
    }
    return std::move(h).with_properties(Property::Psd | Property::PositiveDefinite);
}

Matrix certify_nonnegative_diagonal(const Matrix& m) {
    require_square(m, "certify_nonnegative_diagonal");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j) {
                if (!m(i, i).im.is_zero() || m(i, i).re.sign() < 0) {
                    throw ContractViolation("diagonal entry is not a nonnegative real");
                }
            } else if (!m(i, j).is_zero()) {
                throw ContractViolation("off-diagonal entry is not exactly zero");
            }
        }
    }
    Matrix out = m;
    return std::move(out).with_properties(Property::Diagonal | Property::NonnegativeDiagonal | Property::Hermitian |
                                          Property::Psd);
}

// ---- eigen / singular values ---------------------------------------------------

EigResult hermitian_eig(const Matrix& h, const PrecisionConfig& prec) {
    require_square(h, "hermitian_eig");
    const Bits bits = working_bits(h, prec);
    const Matrix herm = certify_hermitian(h.with_precision(bits), prec);
    auto [values, vectors] = jacobi(herm, bits);
    sort_descending(values, vectors);

    Matrix residual_matrix = herm * vectors - scale_columns(vectors, values);
    Real residual = residual_matrix.frobenius_norm();
    if (residual > prec.tau(herm.frobenius_norm())) {
        throw NumericError("hermitian_eig: reconstruction residual " + residual.to_string(6) + " exceeds tolerance");
    }
    return EigResult{std::move(values), std::move(vectors), std::move(residual)};
}

Real min_eigenvalue(const Matrix& h, const PrecisionConfig& prec) {
    require_square(h, "min_eigenvalue");
    const Bits bits = working_bits(h, prec);
    auto values = jacobi(certify_hermitian(h.with_precision(bits), prec), bits).first;
    return *std::min_element(values.begin(), values.end());
}

Real max_eigenvalue(const Matrix& h, const PrecisionConfig& prec) {
    require_square(h, "max_eigenvalue");
    const Bits bits = working_bits(h, prec);
    auto values = jacobi(certify_hermitian(h.with_precision(bits), prec), bits).first;
    return *std::max_element(values.begin(), values.end());
}

SingularValues svd_values(const Matrix& x, const PrecisionConfig& prec) {
    require_square(x, "svd_values");
    const Bits bits = working_bits(x, prec);
    const Bits wide = 2 * bits;
    const Matrix xw = x.with_precision(wide);
    auto values = jacobi(hermitian_part(xw.adjoint() * xw), wide).first;
    std::sort(values.begin(), values.end(), [](const Real& a, const Real& b) { return b < a; });
    std::vector<Real> sigma;
    sigma.reserve(values.size());
    for (const auto& v : values) sigma.push_back(v.sign() > 0 ? sqrt(v).with_precision(bits) : Real(bits));
    return SingularValues(std::move(sigma));
}

Real operator_norm(const Matrix& x, const PrecisionConfig& prec) {
    if (x.rows() == 0) return prec.zero();
    return svd_values(x, prec)[0];
}

// ---- powers ----------------------------------------------------------------------

Matrix psd_power(const Matrix& h, const Real& p, const PrecisionConfig& prec) {
    EigResult eig = hermitian_eig(h, prec);
    const Bits bits = eig.vectors.precision();
    Real scale(bits);
    for (const auto& v : eig.values) scale = max(scale, abs(v));
    const Real clamp = prec.tau(scale);

    std::vector<Real> powered;
    powered.reserve(eig.values.size());
    bool singular = false;
    for (const auto& v : eig.values) {
        if (v < -clamp) throw ContractViolation("psd_power: matrix is not PSD (eigenvalue " + v.to_string(12) + ")");
        if (v < clamp) {
            singular = true;
            powered.emplace_back(bits);
        } else {
            powered.push_back(pow(v, p.with_precision(bits)));
        }
    }
    if (singular && p.sign() <= 0) throw SingularityError("psd_power: singular matrix raised to a non-positive power");

    Matrix out = scale_columns(eig.vectors, powered) * eig.vectors.adjoint();
    Properties props = Property::Psd;
    if (!singular) props |= Property::PositiveDefinite;
    return std::move(hermitian_part(out)).with_properties(props);
}

Matrix similarity_power(const Matrix& s, const std::vector<Real>& lambdas, const Real& p,
                        const PrecisionConfig& prec) {
    require_square(s, "similarity_power");
    if (lambdas.size() != s.rows()) throw DimensionMismatch("similarity_power: eigenvalue count differs from dimension");
    const Matrix s_inv = inverse(s, prec);
    std::vector<Real> powered;
    powered.reserve(lambdas.size());
    for (const auto& l : lambdas) {
        if (l.sign() < 0) throw ContractViolation("similarity_power: negative eigenvalue");
        powered.push_back(real_power(l, p));
    }
    return scale_columns(s, powered) * s_inv;
}

Matrix similarity_power(const Matrix& s, const Matrix& lambda, const Real& p, const PrecisionConfig& prec) {
    const Matrix diag = lambda.has(Property::NonnegativeDiagonal) ? lambda : certify_nonnegative_diagonal(lambda);
    std::vector<Real> lambdas;
    for (const auto& z : diag.diagonal_entries()) lambdas.push_back(z.re);
    return similarity_power(s, lambdas, p, prec);
}

// ---- order -------------------------------------------------------------------------

LoewnerResult loewner_leq(const Matrix& x, const Matrix& y, const PrecisionConfig& prec) {
    require_square(x, "loewner_leq");
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("loewner_leq: shapes differ");
    const Matrix hx = certify_hermitian(x, prec);
    const Matrix hy = certify_hermitian(y, prec);
    Real margin = min_eigenvalue(hermitian_part(hy - hx), prec);
    const Real scale = max(hx.frobenius_norm(), hy.frobenius_norm());
    const bool verdict = margin >= -prec.tau(scale);
    return LoewnerResult{verdict, std::move(margin)};
}

// ---- compounds ---------------------------------------------------------------------

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> current(k);
    std::iota(current.begin(), current.end(), 0);
    while (true) {
        out.push_back(current);
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

Complex determinant(const Matrix& x) {
    require_square(x, "determinant");
    const std::size_t n = x.rows();
    const Bits bits = x.precision();
    Matrix a = x;
    Complex det(Real(1L, bits));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        Real best = norm(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            Real cand = norm(a(r, col));
            if (cand > best) {
                best = std::move(cand);
                pivot = r;
            }
        }
        if (best.is_zero()) return Complex(bits);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

Matrix compound(const Matrix& x, std::size_t k) {
    require_square(x, "compound");
    const std::size_t d = x.rows();
    if (k < 1 || k > d) {
        throw DomainError("compound: k=" + std::to_string(k) + " out of range [1, " + std::to_string(d) + "]");
    }
    const auto subsets = index_subsets(d, k);
    Matrix out(subsets.size(), subsets.size(), x.precision());
    Matrix minor(k, k, x.precision());
    for (std::size_t r = 0; r < subsets.size(); ++r) {
        for (std::size_t c = 0; c < subsets.size(); ++c) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = x(subsets[r][i], subsets[c][j]);
            out(r, c) = determinant(minor);
        }
    }
    return out;
}

Matrix hadamard(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("hadamard: shapes differ");
    Matrix out(x.rows(), x.cols(), std::max(x.precision(), y.precision()));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) * y(i, j);
    return out;
}

// ---- inverse -------------------------------------------------------------------------

Matrix inverse(const Matrix& x, const PrecisionConfig& prec) {
    require_square(x, "inverse");
    const Bits bits = working_bits(x, prec);
    const Bits wide = bits + bits / 2;
    const Matrix xw = x.with_precision(wide);
    const Matrix inv_wide = gauss_jordan_inverse(xw);

    const Real cond = one_norm(xw) * one_norm(inv_wide);
    const Real limit = pow(Real(10L, wide), static_cast<long>(prec.digits() / 2));
    if (cond > limit) throw IllConditioned("inverse: condition estimate " + cond.to_string(6) + " exceeds 10^(digits/2)");

    Matrix inv = inv_wide.with_precision(bits);
    const Real residual = (xw * inv - Matrix::identity(x.rows(), wide)).frobenius_norm();
    if (residual > prec.tau(cond)) {
        throw NumericError("inverse: residual " + residual.to_string(6) + " exceeds tolerance");
    }
    return inv;
}

Real condition_number(const Matrix& x, const PrecisionConfig& prec) {
    require_square(x, "condition_number");
    const Bits wide = working_bits(x, prec) * 3 / 2;
    const Matrix xw = x.with_precision(wide);
    return (one_norm(xw) * one_norm(gauss_jordan_inverse(xw))).with_precision(working_bits(x, prec));
}

}  // namespace svmaj::linalg
