#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace salvetti {

// Univariate Laurent polynomial with exact coefficients, canonically trimmed:
// the stored leading and trailing coefficients are nonzero and the zero
// polynomial has an empty coefficient vector.
template <class R>
class Laurent {
  public:
    Laurent() = default;
    Laurent(int v) : Laurent(R(v)) {}  // NOLINT: implicit by design, constants read naturally
    Laurent(const R& v) {
        if (!(v == R(0))) c_.push_back(v);
    }

    static Laurent monomial(const R& coeff, long exp) {
        Laurent p;
        if (!(coeff == R(0))) {
            p.low_ = exp;
            p.c_.push_back(coeff);
        }
        return p;
    }
    static Laurent variable() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long lowest_exponent() const { return c_.empty() ? 0 : low_; }
    long highest_exponent() const {
        return c_.empty() ? 0 : low_ + static_cast<long>(c_.size()) - 1;
    }
    // Width of the support; -1 for the zero polynomial.  Units are exactly
    // the width-0 elements c*q^k.
    long width() const { return static_cast<long>(c_.size()) - 1; }

    R coeff(long exp) const {
        if (c_.empty() || exp < low_ || exp > highest_exponent()) return R(0);
        return c_[static_cast<size_t>(exp - low_)];
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (R& v : r.c_) v = -v;
        return r;
    }

    Laurent operator+(const Laurent& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        long lo = std::min(low_, o.low_);
        long hi = std::max(highest_exponent(), o.highest_exponent());
        Laurent r;
        r.low_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), R(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[low_ - lo + i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[o.low_ - lo + i] += o.c_[i];
        r.trim();
        return r;
    }

    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        if (is_zero() || o.is_zero()) return Laurent();
        Laurent r;
        r.low_ = low_ + o.low_;
        r.c_.assign(c_.size() + o.c_.size() - 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == R(0)) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent pow(unsigned e) const {
        Laurent r(R(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Evaluation at x; negative exponents require x invertible (field R).
    R evaluate(const R& x) const {
        if (is_zero()) return R(0);
        if (low_ < 0 && x == R(0)) throw ComputationError("cannot evaluate at 0: negative exponents");
        R acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        if (low_ > 0)
            for (long i = 0; i < low_; ++i) acc = acc * x;
        else
            for (long i = 0; i > low_; --i) acc = acc / x;
        return acc;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        if (a.c_.empty() && b.c_.empty()) return true;
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    const std::vector<R>& raw_coeffs() const { return c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
        size_t skip = 0;
        while (skip < c_.size() && c_[skip] == R(0)) ++skip;
        if (skip) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
            low_ += static_cast<long>(skip);
        }
        if (c_.empty()) low_ = 0;
    }

    long low_ = 0;
    std::vector<R> c_;
};

using LaurentQ = Laurent<Rational>;

// q-integer [k] = 1 + q + ... + q^{k-1}.
inline LaurentQ q_integer(int k) {
    if (k < 1) throw ValidationError("q-integer requires k >= 1");
    LaurentQ p;
    for (int i = 0; i < k; ++i) p += LaurentQ::monomial(Rational(1), i);
    return p;
}

inline LaurentQ q_factorial(int k) {
    if (k < 0) throw ValidationError("q-factorial requires k >= 0");
    LaurentQ p(1);
    for (int i = 1; i <= k; ++i) p *= q_integer(i);
    return p;
}

// Euclidean division for field coefficients: a = quot*b + rem with the
// remainder's support width strictly smaller than b's.
template <class R>
std::pair<Laurent<R>, Laurent<R>> divmod(const Laurent<R>& a, const Laurent<R>& b) {
    if (b.is_zero()) throw ComputationError("division by zero polynomial");
    if (a.is_zero()) return {Laurent<R>(), Laurent<R>()};
    std::vector<R> rem(a.raw_coeffs());
    const std::vector<R>& d = b.raw_coeffs();
    const long shift = a.lowest_exponent() - b.lowest_exponent();
    if (rem.size() < d.size()) return {Laurent<R>(), a};
    std::vector<R> quot(rem.size() - d.size() + 1, R(0));
    const R& lead = d.back();
    for (size_t k = quot.size(); k-- > 0;) {
        R c = rem[k + d.size() - 1];
        if (c == R(0)) continue;
        c = c / lead;
        quot[k] = c;
        for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
    }
    Laurent<R> q, r;
    for (size_t i = 0; i < quot.size(); ++i)
        q += Laurent<R>::monomial(quot[i], static_cast<long>(i) + shift);
    for (size_t i = 0; i < rem.size(); ++i)
        r += Laurent<R>::monomial(rem[i], static_cast<long>(i) + a.lowest_exponent());
    return {q, r};
}

template <class R>
Laurent<R> exact_divide(const Laurent<R>& a, const Laurent<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ComputationError("division is not exact");
    return q;
}

inline LaurentQ q_binomial(int k, int h) {
    if (h < 0 || h > k) throw ValidationError("q-binomial requires 0 <= h <= k");
    return exact_divide(q_factorial(k), q_factorial(h) * q_factorial(k - h));
}

// Canonical text rendering, ascending exponents: "q^-1 + 2 + q".
inline std::string to_string(const LaurentQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long e = p.lowest_exponent(); e <= p.highest_exponent(); ++e) {
        Rational c = p.coeff(e);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string coeff_str = mag.str();
        if (!is_integer(mag)) coeff_str = "(" + coeff_str + ")";
        if (e == 0) {
            out += coeff_str;
        } else {
            if (!(mag == 1)) out += coeff_str;
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace salvetti
