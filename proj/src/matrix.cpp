#include "gromzeta/matrix.hpp"

#include <string>

#include "gromzeta/errors.hpp"

namespace gromzeta {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), integral_(true) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    if (rows == 0 || cols == 0) {
        rows_ = cols_ = 0;
        return;
    }
    entries_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

Matrix::Matrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), integral_(true) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    if (rows == 0 || cols == 0) {
        if (!entries_.empty()) throw DimensionError("entries supplied for an empty matrix");
        rows_ = cols_ = 0;
        return;
    }
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionError("entry count does not match matrix shape");
    recompute_integral();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0), integral_(true) {
    if (rows.size() == 0) {
        rows_ = cols_ = 0;
        return;
    }
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ == 0) throw DimensionError("matrix row with no entries");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionError("ragged matrix rows");
        for (long v : r) entries_.emplace_back(v);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries_[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

const Rat& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix shapes " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " and " + std::to_string(o.rows_) + "x" +
                             std::to_string(o.cols_) + " do not match");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(o);
    std::vector<Rat> e(entries_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = entries_[k] + o.entries_[k];
    return Matrix(rows_, cols_, std::move(e));
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(o);
    std::vector<Rat> e(entries_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = entries_[k] - o.entries_[k];
    return Matrix(rows_, cols_, std::move(e));
}

Matrix Matrix::operator-() const { return scaled(Rat(-1)); }

Matrix Matrix::scaled(const Rat& c) const {
    std::vector<Rat> e(entries_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = c * entries_[k];
    return Matrix(rows_, cols_, std::move(e));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matrix product of " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " by " + std::to_string(o.rows_) + "x" +
                             std::to_string(o.cols_));
    if (is_empty() || o.is_empty()) return Matrix(rows_, o.cols_);
    std::vector<Rat> e(static_cast<std::size_t>(rows_) * o.cols_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = entries_[static_cast<std::size_t>(i) * cols_ + k];
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                e[static_cast<std::size_t>(i) * o.cols_ + j] +=
                    a * o.entries_[static_cast<std::size_t>(k) * o.cols_ + j];
        }
    return Matrix(rows_, o.cols_, std::move(e));
}

Matrix Matrix::transpose() const {
    if (is_empty()) return *this;
    std::vector<Rat> e(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            e[static_cast<std::size_t>(j) * rows_ + i] =
                entries_[static_cast<std::size_t>(i) * cols_ + j];
    return Matrix(cols_, rows_, std::move(e));
}

Matrix Matrix::pow(unsigned long n) const {
    if (!is_square()) throw DimensionError("power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Rat Matrix::trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += entries_[static_cast<std::size_t>(i) * cols_ + i];
    return t;
}

void Matrix::recompute_integral() {
    integral_ = true;
    for (const Rat& r : entries_)
        if (!is_integer(r)) {
            integral_ = false;
            return;
        }
}

}  // namespace gromzeta
