#include "matrix.hpp"

namespace cremona {

Mat3::Mat3() {
    for (auto& row : m_)
        for (auto& v : row) v = 0;
}

Mat3 Mat3::identity() {
    Mat3 I;
    for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
    return I;
}

Mat3 Mat3::from_rows(const std::array<std::array<Rational, 3>, 3>& rows) {
    Mat3 M;
    M.m_ = rows;
    return M;
}

Mat3 Mat3::from_columns(const ProjPoint& c0, const ProjPoint& c1, const ProjPoint& c2) {
    Mat3 M;
    for (int r = 0; r < 3; ++r) {
        M.at(r, 0) = c0[static_cast<size_t>(r)];
        M.at(r, 1) = c1[static_cast<size_t>(r)];
        M.at(r, 2) = c2[static_cast<size_t>(r)];
    }
    return M;
}

Rational Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::adjugate() const {
    Mat3 A;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            const int r1 = (c + 1) % 3, r2 = (c + 2) % 3; // transposed cofactor
            const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
            A.at(r, c) = at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
        }
    }
    return A;
}

Mat3 Mat3::inverse() const {
    const Rational D = det();
    if (D == 0) fail(Err::SingularMatrix, "matrix is singular");
    Mat3 A = adjugate();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A.at(r, c) /= D;
    return A;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 P;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) P.at(r, c) += at(r, k) * o.at(k, c);
    return P;
}

std::array<Rational, 3> Mat3::apply(const std::array<Rational, 3>& v) const {
    std::array<Rational, 3> out{};
    for (int r = 0; r < 3; ++r) {
        Rational s = 0;
        for (int c = 0; c < 3; ++c) s += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = s;
    }
    return out;
}

ProjPoint Mat3::apply(const ProjPoint& p) const {
    auto v = apply(p.coords());
    return ProjPoint(v[0], v[1], v[2]);
}

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

void Matrix::append_row(const std::vector<Rational>& row) {
    if (row.size() != cols_) fail(Err::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
        const Rational lead = at(row, col);
        for (size_t c = col; c < cols_; ++c) at(row, c) /= lead;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const Rational f = at(r, col);
            for (size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> Matrix::nullspace() {
    const std::vector<size_t> pivots = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -at(r, fc);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // canonicalize: the reduced echelon basis of the nullspace itself
    Matrix B(0, cols_);
    for (auto& v : basis) B.append_row(v);
    B.rref();
    for (size_t r = 0; r < basis.size(); ++r)
        for (size_t c = 0; c < cols_; ++c) basis[r][c] = B.at(r, c);
    return basis;
}

} // namespace cremona
