#include "hue/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace hue {

Matrix::Matrix(FieldPtr spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
    a_.assign(static_cast<size_t>(rows) * cols, spec_->zero());
}

Matrix Matrix::identity(const FieldPtr& spec, int n) {
    Matrix m(spec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = spec->one();
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix m(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix m(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix m(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElem& y = o.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

Matrix Matrix::operator*(const FieldElem& s) const {
    Matrix m(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

std::vector<FieldElem> Matrix::operator*(const std::vector<FieldElem>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<FieldElem> out(rows_, spec_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::pow(int64_t e) const {
    assert(rows_ == cols_ && e >= 0);
    Matrix r = identity(spec_, rows_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix m(spec_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
    return m;
}

std::vector<FieldElem> Matrix::row(int r) const {
    std::vector<FieldElem> out(cols_, spec_->zero());
    for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

int rref(Matrix& m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        FieldElem inv = m.at(rank, col).inv();
        for (int j = 0; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FieldElem f = m.at(r, col);
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Matrix kernel_basis(const Matrix& m) {
    Matrix red = m;
    int rank = rref(red);
    // locate pivot columns
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!red.at(r, c).is_zero()) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
    Matrix out(m.spec(), m.cols() - rank, m.cols());
    int k = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        out.at(k, c) = m.spec()->one();
        for (int r = 0; r < rank; ++r) out.at(k, pivot_col[r]) = -red.at(r, c);
        ++k;
    }
    return out;
}

Subspace::Subspace(FieldPtr spec, int ambient_dim) : spec_(std::move(spec)), n_(ambient_dim) {}

bool Subspace::insert(std::vector<FieldElem> v) {
    assert(static_cast<int>(v.size()) == n_);
    // reduce against existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = v[pivots_[r]];
        if (!c.is_zero())
            for (int j = 0; j < n_; ++j) v[j] -= c * rows_[r][j];
    }
    int piv = -1;
    for (int j = 0; j < n_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    FieldElem inv = v[piv].inv();
    for (int j = 0; j < n_; ++j) v[j] *= inv;
    // back-substitute into existing rows, then insert keeping pivot order
    for (size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = rows_[r][piv];
        if (!c.is_zero())
            for (int j = 0; j < n_; ++j) rows_[r][j] -= c * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool Subspace::contains(std::vector<FieldElem> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = v[pivots_[r]];
        if (!c.is_zero())
            for (int j = 0; j < n_; ++j) v[j] -= c * rows_[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return n_ == o.n_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

}  // namespace hue
