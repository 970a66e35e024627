#include "biperron/matrix.hpp"

namespace biperron {

IntMat to_int_matrix(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw std::invalid_argument("to_int_matrix: non-integer entry");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

RatMat to_rat_matrix(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

bool is_integral(const RatMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

Int common_denominator(const RatMat& m) {
    Int l = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    return l;
}

Int det_bareiss(IntMat m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sign(m(k, k)) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (sign(m(i, k)) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sgn > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    Int d = common_denominator(m);
    IntMat mi(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j) * Rat(d);
            mi(i, j) = v.get_num();
        }
    Int dd;
    mpz_pow_ui(dd.get_mpz_t(), d.get_mpz_t(), m.rows());
    return make_rat(det_bareiss(mi), dd);
}

namespace {

/// Berkowitz: characteristic polynomial coefficients over any exact scalar.
/// Returns ascending coefficients of det(tI - m), degree n.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& m) {
    int n = m.rows();
    std::vector<T> poly{T(1)};  // charpoly of the empty matrix
    // Iterate over leading principal submatrices.
    for (int k = 0; k < n; ++k) {
        // For submatrix of size k+1 build the Toeplitz column:
        // c = [1, -m_kk, -(R*S), -(R*A*S), ...] where R = row k (0..k-1),
        // S = column k (0..k-1), A = leading k x k block.
        std::vector<T> col(k + 2);
        col[0] = T(1);
        col[1] = -m(k, k);
        if (k > 0) {
            std::vector<T> v(k);  // v = A^j * S
            for (int i = 0; i < k; ++i) v[i] = m(i, k);
            for (int j = 2; j <= k + 1; ++j) {
                T dot = T(0);
                for (int i = 0; i < k; ++i) dot += m(k, i) * v[i];
                col[j] = -dot;
                if (j <= k) {
                    std::vector<T> w(k, T(0));
                    for (int i = 0; i < k; ++i)
                        for (int jj = 0; jj < k; ++jj) w[i] += m(i, jj) * v[jj];
                    v = std::move(w);
                }
            }
        }
        // poly = toeplitz(col) * poly  (polynomial-style convolution)
        std::vector<T> next(poly.size() + 1, T(0));
        for (size_t i = 0; i < poly.size(); ++i)
            for (size_t j = 0; j < col.size() && i + j < next.size(); ++j)
                next[i + j] += col[j] * poly[i];
        poly = std::move(next);
    }
    // poly holds descending coefficients [t^n, ..., const]; flip to ascending
    std::vector<T> asc(poly.rbegin(), poly.rend());
    return asc;
}

}  // namespace

IntPoly charpoly(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: not square");
    return IntPoly(berkowitz<Int>(m));
}

RatPoly charpoly(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: not square");
    return RatPoly(berkowitz<Rat>(m));
}

IntPoly charpoly_cleared(const RatMat& m) { return charpoly(m).clear_denominators(); }

RatMat inverse(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (sign(a(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat d = 1 / a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || sign(a(i, col)) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace biperron
