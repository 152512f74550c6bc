#pragma once

#include "svmaj/real.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace svmaj {

/// Structural properties a Matrix can carry. They are only ever set by the
/// certification functions in linalg.hpp (or by operations whose output has
/// the property by construction) and are dropped on any mutable access.
enum class Property : unsigned {
    Hermitian = 1U << 0U,
    Psd = 1U << 1U,
    PositiveDefinite = 1U << 2U,
    Diagonal = 1U << 3U,
    NonnegativeDiagonal = 1U << 4U,
};

class Properties {
public:
    constexpr Properties() = default;
    constexpr Properties(Property p) : bits_(static_cast<unsigned>(p)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] constexpr bool has(Property p) const { return (bits_ & static_cast<unsigned>(p)) != 0; }
    constexpr Properties& operator|=(Properties other) {
        bits_ |= other.bits_;
        return *this;
    }
    friend constexpr Properties operator|(Properties a, Properties b) { return a |= b; }
    friend constexpr bool operator==(Properties a, Properties b) = default;

private:
    unsigned bits_ = 0;
};

constexpr Properties operator|(Property a, Property b) { return Properties(a) | Properties(b); }

/// Dense complex matrix of extended-precision entries, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Bits bits);

    static Matrix identity(std::size_t n, Bits bits);
    /// Diagonal matrix with real entries; flagged Diagonal, and NonnegativeDiagonal when all entries are >= 0.
    static Matrix diagonal(const std::vector<Real>& entries);
    /// Real matrix from literal rows (test and CLI convenience).
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows, Bits bits);
    static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] Bits precision() const { return bits_; }
    [[nodiscard]] Properties properties() const { return props_; }
    [[nodiscard]] bool has(Property p) const { return props_.has(p); }

    [[nodiscard]] const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Mutable access drops all certified properties.
    Complex& operator()(std::size_t i, std::size_t j) {
        props_ = {};
        return data_[i * cols_ + j];
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix with_precision(Bits bits) const;
    [[nodiscard]] std::vector<Complex> diagonal_entries() const;

    [[nodiscard]] Real frobenius_norm() const;
    [[nodiscard]] Real max_abs() const;
    [[nodiscard]] Complex trace() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Real& rhs);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Real& s, const Matrix& m);
    friend Matrix operator*(const Complex& s, const Matrix& m);

    /// Internal: attach properties the caller has established. Used by the
    /// certification functions and by constructions that guarantee them.
    Matrix&& with_properties(Properties p) && {
        props_ |= p;
        return std::move(*this);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Bits bits_ = 53;
    std::vector<Complex> data_;
    Properties props_;
};

}  // namespace svmaj
