#ifndef CREMONA_MATRIX_HPP
#define CREMONA_MATRIX_HPP

#include <array>
#include <vector>

#include "point.hpp"
#include "rational.hpp"

namespace cremona {

// 3x3 rational matrix, row-major.
class Mat3 {
public:
    Mat3(); // zero
    static Mat3 identity();
    static Mat3 from_rows(const std::array<std::array<Rational, 3>, 3>& rows);
    static Mat3 from_columns(const ProjPoint& c0, const ProjPoint& c1, const ProjPoint& c2);

    Rational& at(int r, int c) { return m_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Rational& at(int r, int c) const { return m_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    Rational det() const;
    Mat3 adjugate() const;          // det(M) * M^{-1}, always defined
    Mat3 inverse() const;           // throws SingularMatrix
    Mat3 operator*(const Mat3&) const;
    std::array<Rational, 3> apply(const std::array<Rational, 3>& v) const;
    ProjPoint apply(const ProjPoint& p) const;

    bool operator==(const Mat3&) const = default;

private:
    std::array<std::array<Rational, 3>, 3> m_;
};

// Dense rational matrix used for exact interpolation.
class Matrix {
public:
    Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();

    // Canonical basis of the right nullspace: the unique reduced-echelon basis
    // with respect to the column order. Each basis vector has length cols().
    std::vector<std::vector<Rational>> nullspace();

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace cremona

#endif
