#pragma once

#include <initializer_list>
#include <vector>

#include "gromzeta/rational.hpp"

namespace gromzeta {

// Dense matrix over Q, row-major, immutable after construction. The 0x0
// matrix is allowed; graded maps use it for degrees of rank zero. The
// integral flag is recomputed from the entries, never taken from a caller.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), integral_(true) {}
    Matrix(int rows, int cols);  // zero matrix
    Matrix(int rows, int cols, std::vector<Rat> entries);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_integral() const { return integral_; }

    const Rat& at(int i, int j) const;
    const std::vector<Rat>& entries() const { return entries_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;
    Matrix pow(unsigned long n) const;  // square only; n = 0 gives I

    Rat trace() const;  // square only

    bool operator==(const Matrix& o) const = default;

  private:
    int rows_, cols_;
    std::vector<Rat> entries_;
    bool integral_;

    void recompute_integral();
    void require_same_shape(const Matrix& o) const;
};

}  // namespace gromzeta
