#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a4cx/field.hpp"
#include "a4cx/kernels.hpp"

namespace a4cx {

// Dense matrix over F2 or GF(4), rows bit-packed in 64-bit words.
// GF(4) uses two planes per row: plane a and plane b for entries a + b*w.
// Matrices act on column vectors: (A*x)_i = sum_j A(i,j) x_j.
class MatrixF {
  public:
    MatrixF() : field_(Field::F2), rows_(0), cols_(0), wpr_(0) {}
    MatrixF(Field f, int rows, int cols);

    static MatrixF identity(Field f, int n);
    static MatrixF zero(Field f, int rows, int cols) {
        return MatrixF(f, rows, cols);
    }

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    Scalar get(int i, int j) const;
    void set(int i, int j, Scalar v);

    kern::Word* row_a(int i) { return a_.data() + wpr_ * i; }
    const kern::Word* row_a(int i) const { return a_.data() + wpr_ * i; }
    kern::Word* row_b(int i) { return b_.data() + wpr_ * i; }
    const kern::Word* row_b(int i) const { return b_.data() + wpr_ * i; }

    bool is_zero() const;
    bool row_is_zero(int i) const;
    bool operator==(const MatrixF& o) const;

    MatrixF operator+(const MatrixF& o) const;
    MatrixF operator*(const MatrixF& o) const;
    MatrixF transpose() const;

    MatrixF row(int i) const;              // 1 x cols
    void copy_row_from(int i, const MatrixF& src, int src_row);
    void swap_rows(int i, int j);
    // row_i += c * row_j
    void axpy_row(int i, int j, Scalar c);
    void scale_row(int i, Scalar c);

    MatrixF vstack(const MatrixF& below) const;
    MatrixF rows_slice(int lo, int n) const;  // n rows starting at lo

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_in_place();
    std::pair<MatrixF, std::vector<int>> rref() const;
    int rank() const;

    // Basis rows of {x : A x = 0}.
    MatrixF kernel() const;

    // Solve A x = b, with b and the result as 1 x n row vectors.
    std::optional<MatrixF> solve(const MatrixF& b) const;

    // y = A x for column vector x given as a 1 x cols row; result 1 x rows.
    MatrixF apply(const MatrixF& v) const;

    std::string str() const;

  private:
    Field field_;
    int rows_, cols_;
    std::size_t wpr_;
    std::vector<kern::Word> a_, b_;
};

}  // namespace a4cx
