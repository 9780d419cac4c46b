// Dense exact linear algebra over a FieldSpec: matrices, canonical reduced
// echelon forms, kernels. Dimensions here are tiny (<= ~100), so everything
// is straightforward O(n^3) elimination with exact pivots.

#pragma once

#include <cstdint>
#include <vector>

#include "hue/field.hpp"

namespace hue {

class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr spec, int rows, int cols);  // zero-filled

    static Matrix identity(const FieldPtr& spec, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& spec() const { return spec_; }

    FieldElem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const FieldElem& s) const;
    std::vector<FieldElem> operator*(const std::vector<FieldElem>& v) const;
    Matrix pow(int64_t e) const;

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_diagonal() const;

    /// Entries between the selected rows/cols, in the given order.
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::vector<FieldElem> row(int r) const;

  private:
    FieldPtr spec_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

/// In-place reduction to canonical reduced row echelon form; returns the rank.
int rref(Matrix& m);

/// Basis of the right kernel {v : m v = 0}, as columns gathered into a matrix
/// with one row per basis vector.
Matrix kernel_basis(const Matrix& m);

/// A subspace of K^n held as a canonical RREF basis. Supports incremental
/// closure computations (spinning).
class Subspace {
  public:
    Subspace(FieldPtr spec, int ambient_dim);

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Reduce v against the basis; if a new pivot remains, insert it and
    /// return true. Keeps the basis in canonical RREF.
    bool insert(std::vector<FieldElem> v);

    bool contains(std::vector<FieldElem> v) const;
    bool contains(const Subspace& other) const;

    const std::vector<std::vector<FieldElem>>& basis() const { return rows_; }
    const FieldPtr& spec() const { return spec_; }

    bool operator==(const Subspace& o) const;

  private:
    FieldPtr spec_;
    int n_;
    std::vector<std::vector<FieldElem>> rows_;  // RREF, pivots strictly increasing
    std::vector<int> pivots_;
};

}  // namespace hue
