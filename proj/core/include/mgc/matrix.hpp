// Dense exact rational matrices and row reduction.
#pragma once

#include "mgc/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mgc {

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> e; // row-major, size rows*cols

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    static Matrix zero(int r, int c) { return Matrix(r, c); }
    static Matrix identity(int n);
    // Column vector from entries.
    static Matrix column(const std::vector<Rational>& v);

    Rational& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }

    Matrix transposed() const;
    Matrix col(int j) const;
    // Matrix whose columns are the selected columns of *this.
    Matrix cols_subset(const std::vector<int>& idx) const;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);

// [a | b] side by side (equal row counts).
Matrix hstack(const Matrix& a, const Matrix& b);
// a over b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);
// Copy src into dst with top-left corner at (i0, j0).
void paste(Matrix& dst, const Matrix& src, int i0, int j0);

struct Reduced {
    int rank = 0;
    Matrix rref;                            // reduced row echelon form
    std::vector<std::pair<int, int>> pivots; // (row, col) of each pivot
    Matrix kernel;                          // columns span ker(m)
    Matrix image;                           // columns span im(m) (pivot columns of m)
};

// Exact Gauss-Jordan reduction.
Reduced reduce(const Matrix& m);

// Solve a X = b column-wise; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

int rank(const Matrix& m);
bool is_injective(const Matrix& m);

} // namespace mgc
