#include "svmaj/matrix.hpp"

#include "svmaj/errors.hpp"

#include <string>

namespace svmaj {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Bits bits) : rows_(rows), cols_(cols), bits_(bits) {
    data_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) data_.emplace_back(bits);
}

Matrix Matrix::identity(std::size_t n, Bits bits) {
    Matrix m(n, n, bits);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i].re = Real(1L, bits);
    m.props_ = Property::Hermitian | Property::Psd | Property::PositiveDefinite | Property::Diagonal |
               Property::NonnegativeDiagonal;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Real>& entries) {
    Bits bits = 2;
    for (const auto& e : entries) bits = std::max(bits, e.precision());
    const std::size_t n = entries.size();
    Matrix m(n, n, bits);
    bool nonnegative = true;
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i * n + i].re = entries[i].with_precision(bits);
        if (entries[i].sign() < 0) nonnegative = false;
    }
    m.props_ = Property::Diagonal | Property::Hermitian;
    if (nonnegative) m.props_ |= Property::NonnegativeDiagonal | Property::Psd;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows, Bits bits) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c, bits);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("from_rows: ragged rows");
        std::size_t j = 0;
        for (double v : row) m.data_[i * c + j++].re = Real(v, bits);
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Bits bits = 2;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("from_rows: ragged rows");
        for (const auto& z : row) bits = std::max(bits, z.precision());
    }
    Matrix m(r, c, bits);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = rows[i][j].with_precision(bits);
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_, bits_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = conj(data_[i * cols_ + j]);
    Properties keep;
    for (Property p : {Property::Hermitian, Property::Psd, Property::PositiveDefinite, Property::Diagonal})
        if (props_.has(p)) keep |= p;
    m.props_ = keep;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, bits_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = data_[i * cols_ + j];
    return m;
}

Matrix Matrix::with_precision(Bits bits) const {
    Matrix m = *this;
    m.bits_ = bits;
    for (auto& z : m.data_) z = z.with_precision(bits);
    return m;
}

std::vector<Complex> Matrix::diagonal_entries() const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back(data_[i * cols_ + i]);
    return out;
}

Real Matrix::frobenius_norm() const {
    Real sum(bits_);
    for (const auto& z : data_) sum += norm(z);
    return sqrt(sum);
}

Real Matrix::max_abs() const {
    Real m(bits_);
    for (const auto& z : data_) m = max(m, abs(z));
    return m;
}

Complex Matrix::trace() const {
    Complex t(bits_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += data_[i * cols_ + i];
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "matrix +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    bits_ = std::max(bits_, rhs.bits_);
    props_ = {};
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "matrix -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    bits_ = std::max(bits_, rhs.bits_);
    props_ = {};
    return *this;
}

Matrix& Matrix::operator*=(const Real& rhs) {
    for (auto& z : data_) z *= rhs;
    bits_ = std::max(bits_, rhs.precision());
    props_ = {};
    return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    r += b;
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    r -= b;
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix *: inner dimensions " + std::to_string(a.cols_) + " and " +
                                std::to_string(b.rows_));
    }
    Matrix r(a.rows_, b.cols_, std::max(a.bits_, b.bits_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex& aik = a.data_[i * a.cols_ + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) add_mul(r.data_[i * r.cols_ + j], aik, b.data_[k * b.cols_ + j]);
        }
    }
    return r;
}

Matrix operator*(const Real& s, const Matrix& m) {
    Matrix r = m;
    r *= s;
    return r;
}

Matrix operator*(const Complex& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_, std::max(m.bits_, s.precision()));
    for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
    return r;
}

}  // namespace svmaj
