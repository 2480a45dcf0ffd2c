#pragma once

#include <vector>

#include "errors.hpp"

namespace salvetti {

// Minimal dense matrix over an exact coefficient ring.
template <class R>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, R(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ComputationError("matrix shape mismatch in product");
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const R& v = at(i, k);
                if (v == R(0)) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    bool is_zero() const {
        for (const R& v : a_)
            if (!(v == R(0))) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    int rows_, cols_;
    std::vector<R> a_;
};

}  // namespace salvetti
