#pragma once

#include <stdexcept>
#include <vector>

#include "qtheta/ratfunc.hpp"

namespace qtheta {

// q-integers in both conventions used for quantum algebras:
//   [m]_q = (q^m - q^-m)/(q - q^-1)        (symmetric)
//   (m)_q = (q^2m - 1)/(q^2 - 1)           (one-sided; (m)_q = q^(m-1) [m]_q)
// plus the factorials and the q-binomial built from [.]_q.

inline LaurentQ q_bracket(int m) {
    // [−m] = −[m]; [0] = 0; [m] = q^(m−1) + q^(m−3) + ... + q^(1−m)
    if (m == 0) return LaurentQ();
    if (m < 0) return -q_bracket(-m);
    LaurentQ r;
    for (int e = m - 1; e >= 1 - m; e -= 2) r += LaurentQ::q_power(e);
    return r;
}

inline LaurentQ q_paren(int m) {
    // (m)_q = 1 + q^2 + ... + q^(2(m−1)) for m >= 0; Laurent for m < 0 too.
    if (m == 0) return LaurentQ();
    if (m > 0) {
        LaurentQ r;
        for (int k = 0; k < m; ++k) r += LaurentQ::q_power(2 * k);
        return r;
    }
    // (−m)_q = −q^(−2m) (m)_q gives (m)_q = −q^(2m) (−m)_q for m < 0.
    return -(q_paren(-m) * LaurentQ::q_power(2 * m));
}

inline LaurentQ q_bracket_factorial(int m) {
    if (m < 0) throw std::domain_error("q_bracket_factorial: negative argument");
    LaurentQ r(1);
    for (int s = 1; s <= m; ++s) r *= q_bracket(s);
    return r;
}

// (m)_q! = (1)_q (2)_q ... (m)_q ; this is the factorial in the q-exponential
// exp_q(x) = sum x^k / (k)_q!.
inline LaurentQ q_paren_factorial(int m) {
    if (m < 0) throw std::domain_error("q_paren_factorial: negative argument");
    LaurentQ r(1);
    for (int s = 1; s <= m; ++s) r *= q_paren(s);
    return r;
}

// Gaussian binomial [m choose k]_q; exact Laurent polynomial.
inline LaurentQ q_binomial(int m, int k) {
    if (k < 0 || k > m) throw std::domain_error("q_binomial: need 0 <= k <= m");
    LaurentQ num(1);
    for (int s = 1; s <= k; ++s) num *= q_bracket(m - s + 1);
    return LaurentQ::divide_exact(num, q_bracket_factorial(k));
}

// Cartan matrix of type A_n and its q-analogue C(q) = ([c_ij]_q).
inline int cartan_entry_A(int n, int i, int j) {
    (void)n;
    if (i == j) return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

using MatrixQ = std::vector<std::vector<RatFuncQ>>;

inline MatrixQ matrix_identity_q(int n) {
    MatrixQ m(n, std::vector<RatFuncQ>(n, RatFuncQ(0)));
    for (int i = 0; i < n; ++i) m[i][i] = RatFuncQ(1);
    return m;
}

inline MatrixQ matrix_mul_q(const MatrixQ& a, const MatrixQ& b) {
    int n = static_cast<int>(a.size());
    MatrixQ r(n, std::vector<RatFuncQ>(n, RatFuncQ(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (!a[i][k].is_zero())
                for (int j = 0; j < n; ++j)
                    r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Gauss-Jordan inverse over the field Q(q); throws if singular.
inline MatrixQ matrix_inverse_q(MatrixQ a) {
    int n = static_cast<int>(a.size());
    MatrixQ inv = matrix_identity_q(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("matrix_inverse_q: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatFuncQ d = a[col][col].inverse();
        for (int j = 0; j < n; ++j) { a[col][j] *= d; inv[col][j] *= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFuncQ f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Quantum Cartan matrix of type A_n, with its exact inverse.
struct QCartan {
    int n;
    MatrixQ C;       // [c_ij]_q
    MatrixQ C_tilde; // C(q)^{-1}

    explicit QCartan(int rank) : n(rank) {
        if (rank < 1) throw std::invalid_argument("QCartan: rank must be positive");
        C.assign(n, std::vector<RatFuncQ>(n, RatFuncQ(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = cartan_entry_A(n, i, j);
                if (c != 0) C[i][j] = RatFuncQ(q_bracket(c));
            }
        C_tilde = matrix_inverse_q(C);
        MatrixQ check = matrix_mul_q(C, C_tilde);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (check[i][j] != (i == j ? RatFuncQ(1) : RatFuncQ(0)))
                    throw std::logic_error("QCartan: C * C_tilde != identity");
    }
};

// C_tilde(q^s): the inverse quantum Cartan matrix with q replaced by q^s,
// verified against C(q^s) on construction.
inline MatrixQ quantum_cartan_inverse(int n, int s) {
    if (n < 1 || s < 1) throw std::invalid_argument("quantum_cartan_inverse: need n,s >= 1");
    QCartan qc(n);
    MatrixQ r(n, std::vector<RatFuncQ>(n));
    MatrixQ cs(n, std::vector<RatFuncQ>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r[i][j] = qc.C_tilde[i][j].substitute_power(s);
            cs[i][j] = qc.C[i][j].substitute_power(s);
        }
    MatrixQ check = matrix_mul_q(cs, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (check[i][j] != (i == j ? RatFuncQ(1) : RatFuncQ(0)))
                throw std::logic_error("quantum_cartan_inverse: product is not the identity");
    return r;
}

} // namespace qtheta
