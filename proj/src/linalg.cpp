#include "polycyclic/linalg.hpp"

#include "polycyclic/error.hpp"

namespace polycyclic {

Matrix::Matrix(Field field, std::size_t cols, const std::vector<Vec>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(Errc::LengthMismatch, "ragged matrix rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) throw Error(Errc::LengthMismatch, "row length does not match matrix");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw Error(Errc::LengthMismatch, "matrix shapes do not conform");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    return out;
}

Vec vec_mat(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw Error(Errc::LengthMismatch, "vector/matrix shapes do not conform");
    const Field& f = m.field();
    Vec out(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
    }
    return out;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "vector lengths differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_scale(const Field& f, const Vec& a, Elem s) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], s);
    return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "vector lengths differ");
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::size_t hamming_weight(std::span<const Elem> v) {
    std::size_t w = 0;
    for (Elem x : v) w += x != 0;
    return w;
}

Matrix rref(const Matrix& in, std::vector<std::size_t>* pivots) {
    const Field& f = in.field();
    Matrix m = in;
    std::size_t lead_row = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t sel = lead_row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(lead_row, c));
        Elem s = f.inv(m(lead_row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m(lead_row, c) = f.mul(m(lead_row, c), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == 0) continue;
            Elem factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead_row, c)));
        }
        piv.push_back(col);
        ++lead_row;
    }
    Matrix out(f, lead_row, m.cols());
    for (std::size_t r = 0; r < lead_row; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix out(f, 0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, free));
        out.append_row(v);
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::LengthMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Elem determinant(const Matrix& in) {
    if (in.rows() != in.cols()) throw Error(Errc::LengthMismatch, "determinant of a non-square matrix");
    const Field& f = in.field();
    Matrix m = in;
    const std::size_t n = m.rows();
    Elem det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = f.neg(det);
        }
        det = f.mul(det, m(col, col));
        Elem s = f.inv(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Elem factor = f.mul(m(r, col), s);
            for (std::size_t c = col; c < n; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
        }
    }
    return det;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw Error(Errc::LengthMismatch, "cannot stack matrices of different width");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

}  // namespace polycyclic
