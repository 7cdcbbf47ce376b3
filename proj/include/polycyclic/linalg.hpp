#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polycyclic/gf.hpp"

namespace polycyclic {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(Field field, std::size_t cols, const std::vector<Vec>& rows);

    static Matrix identity(const Field& f, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
    std::vector<Vec> row_list() const;

    Matrix transpose() const;
    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void append_row(std::span<const Elem> r);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vec vec_mat(const Vec& v, const Matrix& m);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Vec& a, Elem s);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
std::size_t hamming_weight(std::span<const Elem> v);

/// Reduced row echelon form with zero rows removed; pivot columns are
/// written to `pivots` when given.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
/// Basis (as rows) of { x : m * x^T = 0 }.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Elem determinant(const Matrix& m);
/// Stacks the rows of a and b.
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace polycyclic
