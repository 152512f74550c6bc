#include "svmaj/random_matrices.hpp"

#include "svmaj/errors.hpp"
#include "svmaj/linalg.hpp"

namespace svmaj {

Matrix random_gaussian_matrix(RngStream& rng, std::size_t d, Bits bits) {
    Matrix m(d, d, bits);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_normal(bits);
    return m;
}

Matrix orthonormalize_columns(const Matrix& m) {
    Matrix q = m;
    const std::size_t rows = m.rows();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj(m.precision());
            for (std::size_t i = 0; i < rows; ++i) add_mul_conj(proj, q(i, j), q(i, k));
            for (std::size_t i = 0; i < rows; ++i) q(i, j) -= proj * q(i, k);
        }
        Real len(m.precision());
        for (std::size_t i = 0; i < rows; ++i) len += norm(q(i, j));
        len = sqrt(len);
        if (len.is_zero()) throw SingularityError("orthonormalize_columns: rank-deficient input");
        for (std::size_t i = 0; i < rows; ++i) q(i, j) = q(i, j) / len;
    }
    return q;
}

Matrix random_unitary(RngStream& rng, std::size_t d, Bits bits) {
    // Two Gram-Schmidt passes restore orthogonality to working precision.
    return orthonormalize_columns(orthonormalize_columns(random_gaussian_matrix(rng, d, bits)));
}

Matrix random_gram(RngStream& rng, std::size_t d, Bits bits) {
    const Matrix g = random_gaussian_matrix(rng, d, bits);
    return std::move(linalg::hermitian_part(g * g.adjoint())).with_properties(Property::Psd);
}

Matrix random_hermitian_with_spectrum(RngStream& rng, const std::vector<Real>& spectrum) {
    Bits bits = 2;
    bool nonnegative = true;
    for (const auto& s : spectrum) {
        bits = std::max(bits, s.precision());
        if (s.sign() < 0) nonnegative = false;
    }
    const Matrix u = random_unitary(rng, spectrum.size(), bits);
    Matrix scaled = u;
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) scaled(i, j) *= spectrum[j];
    Matrix h = linalg::hermitian_part(scaled * u.adjoint());
    return nonnegative ? std::move(h).with_properties(Property::Psd) : h;
}

}  // namespace svmaj
