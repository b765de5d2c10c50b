#include "mgc/matrix.hpp"

#include <stdexcept>

namespace mgc {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::col(int j) const {
    Matrix c(rows, 1);
    for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Matrix Matrix::cols_subset(const std::vector<int>& idx) const {
    Matrix m(rows, static_cast<int>(idx.size()));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = at(i, idx[j]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.e) x *= s;
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix diff shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] -= b.e[i];
    return c;
}

Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.e) x = -x;
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
    Matrix c(a.rows, a.cols + b.cols);
    paste(c, a, 0, 0);
    paste(c, b, 0, a.cols);
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack col mismatch");
    Matrix c(a.rows + b.rows, a.cols);
    paste(c, a, 0, 0);
    paste(c, b, a.rows, 0);
    return c;
}

void paste(Matrix& dst, const Matrix& src, int i0, int j0) {
    if (i0 + src.rows > dst.rows || j0 + src.cols > dst.cols)
        throw std::invalid_argument("paste out of bounds");
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) dst.at(i0 + i, j0 + j) = src.at(i, j);
}

Reduced reduce(const Matrix& m) {
    Reduced out;
    out.rref = m;
    Matrix& a = out.rref;
    int r = 0;
    for (int j = 0; j < a.cols && r < a.rows; ++j) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, j) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < a.cols; ++k) std::swap(a.at(piv, k), a.at(r, k));
        Rational inv = Rational(1) / a.at(r, j);
        for (int k = j; k < a.cols; ++k) a.at(r, k) *= inv;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r) continue;
            Rational f = a.at(i, j);
            if (f == 0) continue;
            for (int k = j; k < a.cols; ++k) a.at(i, k) -= f * a.at(r, k);
        }
        out.pivots.emplace_back(r, j);
        ++r;
    }
    out.rank = r;

    // Kernel basis: one vector per free column.
    std::vector<int> pivot_of_col(m.cols, -1);
    for (auto [pr, pc] : out.pivots) pivot_of_col[pc] = pr;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j)
        if (pivot_of_col[j] < 0) free_cols.push_back(j);
    out.kernel = Matrix(m.cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fj = free_cols[k];
        out.kernel.at(fj, static_cast<int>(k)) = 1;
        for (auto [pr, pc] : out.pivots) out.kernel.at(pc, static_cast<int>(k)) = -a.at(pr, fj);
    }

    // Image basis: pivot columns of the original matrix.
    std::vector<int> pivot_cols;
    for (auto [pr, pc] : out.pivots) pivot_cols.push_back(pc);
    out.image = m.cols_subset(pivot_cols);
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve shape mismatch");
    Reduced red = reduce(hstack(a, b));
    // Inconsistent when some pivot falls in the b block.
    for (auto [pr, pc] : red.pivots)
        if (pc >= a.cols) return std::nullopt;
    Matrix x(a.cols, b.cols);
    for (auto [pr, pc] : red.pivots)
        for (int j = 0; j < b.cols; ++j) x.at(pc, j) = red.rref.at(pr, a.cols + j);
    return x;
}

int rank(const Matrix& m) { return reduce(m).rank; }

bool is_injective(const Matrix& m) { return rank(m) == m.cols; }

} // namespace mgc
