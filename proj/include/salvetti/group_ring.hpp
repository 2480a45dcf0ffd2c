#pragma once

#include <map>
#include <string>

#include "group_table.hpp"
#include "laurent.hpp"
#include "numbers.hpp"

namespace salvetti {

// Element of the integral group ring Z[W_J], pinned to one GroupTable.
// Mixed-table arithmetic goes through embedded_in().
class GroupRingElement {
  public:
    explicit GroupRingElement(const GroupTable& t) : tab_(&t) {}

    static GroupRingElement unit(const GroupTable& t) {
        GroupRingElement e(t);
        e.add(0, 1);
        return e;
    }

    const GroupTable& table() const { return *tab_; }
    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int element, const BigInt& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(element);
        if (it == terms_.end()) {
            terms_.emplace(element, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement operator+(const GroupRingElement& o) const {
        require_same_table(o);
        GroupRingElement r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, c);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r(*tab_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    GroupRingElement operator-(const GroupRingElement& o) const { return *this + (-o); }

    GroupRingElement operator*(const GroupRingElement& o) const {
        require_same_table(o);
        GroupRingElement r(*tab_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add(tab_->mult(a, b), ca * cb);
        return r;
    }

    GroupRingElement scaled(const BigInt& c) const {
        GroupRingElement r(*tab_);
        if (c == 0) return r;
        for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
        return r;
    }

    // Augmentation w -> 1.
    BigInt augmented() const {
        BigInt s = 0;
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    // Image under g -> -q on each letter of a reduced word, i.e.
    // w -> (-q)^{l(w)}.
    LaurentQ q_image() const {
        LaurentQ p;
        for (const auto& [w, c] : terms_) {
            int l = tab_->length(w);
            Rational sign = (l % 2 == 0) ? Rational(c) : Rational(-c);
            p += LaurentQ::monomial(sign, l);
        }
        return p;
    }

    // Re-express inside a larger parabolic's table via reduced words.
    GroupRingElement embedded_in(const GroupTable& big) const {
        GroupRingElement r(big);
        for (const auto& [w, c] : terms_) r.add(big.element_of_word(tab_->reduced_word(w)), c);
        return r;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.tab_ == b.tab_ && a.terms_ == b.terms_;
    }

  private:
    void require_same_table(const GroupRingElement& o) const {
        if (tab_ != o.tab_) throw ComputationError("group ring elements from different tables");
    }

    const GroupTable* tab_;
    std::map<int, BigInt> terms_;
};

}  // namespace salvetti
