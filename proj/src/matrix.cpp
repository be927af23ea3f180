#include "hyparr/matrix.hpp"

#include <algorithm>
#include <compare>

#include "hyparr/error.hpp"

namespace hyparr {

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

RationalVector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

void Matrix::append_row(std::span<const Rational> values) {
    if (values.size() != cols_) {
        throw Error(ErrorCode::DimensionMismatch, "row of length " + std::to_string(values.size()) +
                                                      " appended to matrix with " + std::to_string(cols_) +
                                                      " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::truncate_rows(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(n * cols_);
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
        const int c = cmp(a.data_[i], b.data_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Echelon row_echelon(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Rational factor;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        if (m(r, c) != 1) {
            const Rational inv = 1 / m(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(m(r, k)) != 0) m(r, k) *= inv;
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(m(r, k)) != 0) m(i, k) -= factor * m(r, k);
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    e.reduced = std::move(m);
    return e;
}

RationalVector Echelon::residual(std::span<const Rational> v) const {
    RationalVector out(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::size_t c = pivots[i];
        if (sgn(out[c]) == 0) continue;
        const Rational factor = out[c];
        auto row = reduced.row(i);
        for (std::size_t k = c; k < out.size(); ++k) {
            if (sgn(row[k]) != 0) out[k] -= factor * row[k];
        }
    }
    return out;
}

bool Echelon::contains(std::span<const Rational> v) const {
    const auto r = residual(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Echelon::insert(std::span<const Rational> v) {
    if (reduced.cols() == 0 && reduced.rows() == 0) reduced = Matrix(0, v.size());
    auto r = residual(v);
    auto lead = std::find_if(r.begin(), r.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (lead == r.end()) return false;
    const std::size_t c = static_cast<std::size_t>(lead - r.begin());
    const Rational inv = 1 / r[c];
    for (auto& q : r) {
        if (sgn(q) != 0) q *= inv;
    }
    // Clear column c from the existing rows, then insert in pivot order.
    std::vector<RationalVector> rows;
    rows.reserve(pivots.size() + 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RationalVector row = reduced.row_vector(i);
        if (sgn(row[c]) != 0) {
            const Rational factor = row[c];
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (sgn(r[k]) != 0) row[k] -= factor * r[k];
            }
        }
        rows.push_back(std::move(row));
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots.begin(), pivots.end(), c) - pivots.begin());
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), c);
    reduced = Matrix::from_rows(rows, v.size());
    return true;
}

std::size_t rank(const Matrix& m) {
    return row_echelon(m).rank();
}

Matrix nullspace(const Matrix& m) {
    const std::size_t cols = m.cols();
    const Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            if (sgn(e.reduced(i, f)) != 0) v[e.pivots[i]] = -e.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return row_echelon(Matrix::from_rows(basis, cols)).reduced;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
        }
    }
    return det;
}

}  // namespace hyparr
