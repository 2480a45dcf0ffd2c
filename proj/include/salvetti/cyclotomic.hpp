#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace salvetti {

// The cyclotomic field Q(zeta_L) in the power basis 1, zeta, ..., zeta^{d-1},
// d = deg Phi_L.  Shared immutable object; one instance per level.
class CycloField {
  public:
    static std::shared_ptr<const CycloField> get(int level) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const CycloField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(level);
        if (it != cache.end()) return it->second;
        auto f = std::shared_ptr<const CycloField>(new CycloField(level));
        cache.emplace(level, f);
        return f;
    }

    int level() const { return level_; }
    int degree() const { return degree_; }

    // Row i expresses x^{degree+i} in the power basis, i = 0..degree-2.
    const std::vector<std::vector<BigInt>>& reduction_rows() const { return rows_; }

  private:
    explicit CycloField(int level) : level_(level) {
        if (level < 1) throw ValidationError("cyclotomic level must be >= 1");
        modulus_ = cyclotomic_polynomial(level);
        degree_ = static_cast<int>(modulus_.size()) - 1;
        // x^degree = -(c_0 + c_1 x + ...) since Phi is monic
        std::vector<BigInt> row(degree_);
        for (int i = 0; i < degree_; ++i) row[i] = -modulus_[i];
        rows_.push_back(row);
        for (int i = 1; i + 1 < degree_; ++i) {
            std::vector<BigInt> next(degree_, 0);
            const std::vector<BigInt>& prev = rows_.back();
            // multiply by x, then fold the overflowing top power
            BigInt top = prev[degree_ - 1];
            for (int j = degree_ - 1; j >= 1; --j) next[j] = prev[j - 1];
            next[0] = 0;
            if (top != 0)
                for (int j = 0; j < degree_; ++j) next[j] += top * rows_[0][j];
            rows_.push_back(std::move(next));
        }
    }

    // Phi_L by exact division of x^L - 1 by the Phi_d for proper divisors d.
    static std::vector<BigInt> cyclotomic_polynomial(int L) {
        static std::mutex mu;
        static std::map<int, std::vector<BigInt>> cache;
        std::lock_guard<std::mutex> lock(mu);
        for (int d = 1; d <= L; ++d) {
            if (L % d != 0 || cache.count(d)) continue;
            std::vector<BigInt> p(static_cast<size_t>(d) + 1, 0);
            p[0] = -1;
            p[d] = 1;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) p = divide_monic(p, cache.at(e));
            cache.emplace(d, std::move(p));
        }
        return cache.at(L);
    }

    // Exact division by a monic divisor over Z; remainder must vanish.
    static std::vector<BigInt> divide_monic(const std::vector<BigInt>& num,
                                            const std::vector<BigInt>& div) {
        std::vector<BigInt> rem = num;
        const int dn = static_cast<int>(num.size()) - 1;
        const int dd = static_cast<int>(div.size()) - 1;
        std::vector<BigInt> quot(static_cast<size_t>(dn - dd) + 1, 0);
        for (int k = dn - dd; k >= 0; --k) {
            BigInt c = rem[k + dd];
            if (c == 0) continue;
            quot[k] = c;
            for (int j = 0; j <= dd; ++j) rem[k + j] -= c * div[j];
        }
        for (const BigInt& c : rem)
            if (c != 0) throw ComputationError("cyclotomic division not exact");
        return quot;
    }

    int level_;
    int degree_;
    std::vector<BigInt> modulus_;
    std::vector<std::vector<BigInt>> rows_;
};

// One element of a cyclotomic field, always stored reduced.
class Cyclo {
  public:
    Cyclo() = default;  // zero with no field attached; absorbed by any op

    static Cyclo zero(std::shared_ptr<const CycloField> f) {
        Cyclo c;
        c.field_ = std::move(f);
        c.c_.assign(static_cast<size_t>(c.field_->degree()), Rational(0));
        return c;
    }

    static Cyclo from_rational(std::shared_ptr<const CycloField> f, const Rational& v) {
        Cyclo c = zero(std::move(f));
        c.c_[0] = v;
        return c;
    }

    // zeta^k, k arbitrary (reduced mod level).
    static Cyclo root_power(std::shared_ptr<const CycloField> f, long k) {
        const int L = f->level();
        k %= L;
        if (k < 0) k += L;
        Cyclo c = from_rational(std::move(f), Rational(1));
        for (long i = 0; i < k; ++i) c.shift_up();
        return c;
    }

    // 2 cos(pi/m) = zeta^{L/(2m)} + zeta^{-L/(2m)}; requires 2m | L.
    static Cyclo two_cos_pi_over(std::shared_ptr<const CycloField> f, int m) {
        const int L = f->level();
        if (L % (2 * m) != 0) throw ComputationError("field level does not contain 2m");
        long e = L / (2 * m);
        return root_power(f, e) + root_power(f, L - e);
    }

    bool is_zero() const {
        for (const Rational& v : c_)
            if (v != 0) return false;
        return true;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (Rational& v : r.c_) v = -v;
        return r;
    }

    Cyclo operator+(const Cyclo& o) const {
        if (!field_) return o;
        if (!o.field_) return *this;
        Cyclo r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    Cyclo operator-(const Cyclo& o) const { return *this + (-o); }

    Cyclo operator*(const Cyclo& o) const {
        if (!field_ || !o.field_) return Cyclo();
        const int d = field_->degree();
        std::vector<Rational> buf(static_cast<size_t>(2 * d - 1), Rational(0));
        for (int i = 0; i < d; ++i) {
            if (c_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (o.c_[j] == 0) continue;
                buf[i + j] += c_[i] * o.c_[j];
            }
        }
        Cyclo r = zero(field_);
        for (int i = 0; i < d; ++i) r.c_[i] = buf[i];
        const auto& rows = field_->reduction_rows();
        for (int k = d; k <= 2 * d - 2; ++k) {
            if (buf[k] == 0) continue;
            const auto& row = rows[static_cast<size_t>(k - d)];
            for (int j = 0; j < d; ++j)
                if (row[j] != 0) r.c_[j] += buf[k] * Rational(row[j]);
        }
        return r;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (!a.field_) return b.is_zero();
        if (!b.field_) return a.is_zero();
        return a.c_ == b.c_;
    }

  private:
    // multiply by zeta in place
    void shift_up() {
        const int d = field_->degree();
        Rational top = c_[static_cast<size_t>(d - 1)];
        for (int j = d - 1; j >= 1; --j) c_[j] = c_[j - 1];
        c_[0] = 0;
        if (top != 0) {
            const auto& row = field_->reduction_rows()[0];
            for (int j = 0; j < d; ++j)
                if (row[j] != 0) c_[j] += top * Rational(row[j]);
        }
    }

    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> c_;
};

}  // namespace salvetti
