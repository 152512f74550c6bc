#pragma once

#include "svmaj/matrix.hpp"
#include "svmaj/rng.hpp"

#include <cstddef>
#include <vector>

namespace svmaj {

/// d x d matrix of independent complex normals.
Matrix random_gaussian_matrix(RngStream& rng, std::size_t d, Bits bits);

/// Unitary from modified Gram-Schmidt on a complex Gaussian matrix.
Matrix random_unitary(RngStream& rng, std::size_t d, Bits bits);

/// Gram matrix G G* of a complex Gaussian factor (PSD, almost surely positive definite).
Matrix random_gram(RngStream& rng, std::size_t d, Bits bits);

/// U diag(spectrum) U* with a random unitary U; flagged Hermitian (and PSD when the spectrum is >= 0).
Matrix random_hermitian_with_spectrum(RngStream& rng, const std::vector<Real>& spectrum);

/// Orthonormalises the columns of `m` in place order (modified Gram-Schmidt).
Matrix orthonormalize_columns(const Matrix& m);

}  // namespace svmaj
