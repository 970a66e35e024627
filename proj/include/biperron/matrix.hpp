#ifndef BIPERRON_MATRIX_HPP
#define BIPERRON_MATRIX_HPP

#include <vector>

#include "biperron/numeric.hpp"
#include "biperron/poly.hpp"

namespace biperron {

/// Dense matrix over an exact scalar (Int or Rat).
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool operator==(const Matrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix m = *this;
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T& v = (*this)(i, k);
                if (v == T(0)) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) += v * o(k, j);
            }
        return m;
    }

    Matrix operator*(const T& k) const {
        Matrix m = *this;
        for (auto& v : m.a_) v *= k;
        return m;
    }

    Matrix transposed() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_square() const { return r_ == c_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T(0))) return false;
        return true;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

IntMat to_int_matrix(const RatMat& m);  // throws if non-integral
RatMat to_rat_matrix(const IntMat& m);
bool is_integral(const RatMat& m);
/// least common multiple of entry denominators
Int common_denominator(const RatMat& m);

/// Exact determinant, Bareiss fraction-free elimination.
Int det_bareiss(IntMat m);
Rat det(const RatMat& m);

/// Characteristic polynomial det(tI - m), Berkowitz division-free algorithm.
/// Monic of degree n, exact.
IntPoly charpoly(const IntMat& m);
RatPoly charpoly(const RatMat& m);
/// charpoly of a rational matrix, denominators cleared to a primitive
/// integer polynomial with positive leading coefficient (same roots).
IntPoly charpoly_cleared(const RatMat& m);

RatMat inverse(const RatMat& m);  // throws if singular

}  // namespace biperron

#endif
