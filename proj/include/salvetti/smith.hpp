#pragma once

#include <utility>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"
#include "numbers.hpp"

namespace salvetti {

// Euclidean-ring interfaces for the Smith normal form.  norm() is only
// compared between nonzero elements; divmod must strictly shrink the norm of
// a nonzero remainder; canonical() maps an element to its unit-normalized
// representative.

struct IntegerOps {
    using value = BigInt;
    static bool is_zero(const BigInt& x) { return x == 0; }
    static BigInt norm(const BigInt& x) { return boost::multiprecision::abs(x); }
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        BigInt q = a / b;  // truncation; |a - qb| < |b|
        return {q, a - q * b};
    }
    static BigInt canonical(const BigInt& d) { return boost::multiprecision::abs(d); }
};

struct LaurentOps {
    using value = LaurentQ;
    static bool is_zero(const LaurentQ& x) { return x.is_zero(); }
    static BigInt norm(const LaurentQ& x) { return BigInt(x.width()); }
    static std::pair<LaurentQ, LaurentQ> divmod(const LaurentQ& a, const LaurentQ& b) {
        return salvetti::divmod(a, b);
    }
    // monic with lowest exponent 0 (units are c*q^k)
    static LaurentQ canonical(const LaurentQ& d) {
        if (d.is_zero()) return d;
        Rational lead = d.coeff(d.highest_exponent());
        return d * LaurentQ::monomial(Rational(1) / lead, -d.lowest_exponent());
    }
};

struct RationalFieldOps {
    using value = Rational;
    static bool is_zero(const Rational& x) { return x == 0; }
    static BigInt norm(const Rational&) { return 1; }
    static std::pair<Rational, Rational> divmod(const Rational& a, const Rational& b) {
        return {a / b, Rational(0)};
    }
    static Rational canonical(const Rational& d) { return d == 0 ? d : Rational(1); }
};

template <class R>
struct SmithResult {
    std::vector<R> invariant_factors;  // canonical d_1 | d_2 | ... | d_r
    int rank = 0;
};

// Smith normal form over a Euclidean domain.  Pivots are chosen with minimal
// norm, which doubles as the fraction/degree growth mitigation.
template <class Ops>
SmithResult<typename Ops::value> smith_normal_form(Matrix<typename Ops::value> A) {
    using R = typename Ops::value;
    const int m = A.rows(), n = A.cols();
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(A.at(a, j), A.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(A.at(i, a), A.at(i, b));
    };

    SmithResult<R> out;
    int t = 0;
    while (t < m && t < n) {
        // minimal-norm pivot in the trailing submatrix
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (Ops::is_zero(A.at(i, j))) continue;
                BigInt nv = Ops::norm(A.at(i, j));
                if (pi < 0 || nv < best) {
                    best = nv;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (Ops::is_zero(A.at(i, t))) continue;
                auto [q, r] = Ops::divmod(A.at(i, t), A.at(t, t));
                if (!Ops::is_zero(q))
                    for (int j = t; j < n; ++j) A.at(i, j) -= q * A.at(t, j);
                if (!Ops::is_zero(r)) {
                    swap_rows(i, t);  // strictly smaller pivot norm
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < n; ++j) {
                if (Ops::is_zero(A.at(t, j))) continue;
                auto [q, r] = Ops::divmod(A.at(t, j), A.at(t, t));
                if (!Ops::is_zero(q))
                    for (int i = t; i < m; ++i) A.at(i, j) -= q * A.at(i, t);
                if (!Ops::is_zero(r)) {
                    swap_cols(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry for the divisibility chain
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j) {
                    if (Ops::is_zero(A.at(i, j))) continue;
                    auto [q, r] = Ops::divmod(A.at(i, j), A.at(t, t));
                    (void)q;
                    if (!Ops::is_zero(r)) {
                        for (int jj = t; jj < n; ++jj) A.at(t, jj) += A.at(i, jj);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        out.invariant_factors.push_back(Ops::canonical(A.at(t, t)));
        ++t;
    }
    out.rank = t;
    return out;
}

template <class Ops>
int matrix_rank(const Matrix<typename Ops::value>& A) {
    return smith_normal_form<Ops>(A).rank;
}

}  // namespace salvetti
