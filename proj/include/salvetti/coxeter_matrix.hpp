#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace salvetti {

// Bond label m(s,t) of a Coxeter matrix: a finite integer or the distinguished
// infinity token.  Off-diagonal finite labels must be >= 2.
class Bond {
  public:
    Bond() : raw_(2) {}

    static Bond finite(int m) {
        if (m < 1) throw ValidationError("bond label must be >= 1, got " + std::to_string(m));
        return Bond(m);
    }
    static Bond infinity() { return Bond(0); }

    bool is_finite() const { return raw_ != 0; }
    int value() const {
        if (!is_finite()) throw ValidationError("infinite bond has no finite value");
        return raw_;
    }

    std::string str() const { return is_finite() ? std::to_string(raw_) : "inf"; }

    friend bool operator==(const Bond&, const Bond&) = default;

  private:
    explicit Bond(int raw) : raw_(raw) {}
    int raw_;  // 0 encodes infinity; the encoding never leaks through the API
};

// Symmetric matrix of bond labels defining a Coxeter system (W,S).
// Generators are indexed 0..rank-1 in input order; that order is also the
// linear order used by the resolution's sign bookkeeping.
class CoxeterMatrix {
  public:
    explicit CoxeterMatrix(int rank) : n_(rank), m_(static_cast<size_t>(rank) * rank, Bond()) {
        if (rank < 0) throw ValidationError("rank must be nonnegative");
        for (int s = 0; s < rank; ++s) m_[idx(s, s)] = Bond::finite(1);
    }

    int rank() const { return n_; }

    Bond label(int s, int t) const {
        check_index(s);
        check_index(t);
        return m_[idx(s, t)];
    }

    void set_label(int s, int t, Bond b) {
        check_index(s);
        check_index(t);
        if (s == t) {
            if (!(b == Bond::finite(1))) throw ValidationError("diagonal labels must equal 1");
            return;
        }
        if (b.is_finite() && b.value() < 2)
            throw ValidationError("off-diagonal label must be >= 2 or inf");
        m_[idx(s, t)] = b;
        m_[idx(t, s)] = b;
    }

    // Matrix obtained by renaming generator s to perm[s].
    CoxeterMatrix relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw ValidationError("permutation size mismatch");
        CoxeterMatrix out(n_);
        for (int s = 0; s < n_; ++s)
            for (int t = s + 1; t < n_; ++t) out.set_label(perm[s], perm[t], label(s, t));
        return out;
    }

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

  private:
    size_t idx(int s, int t) const { return static_cast<size_t>(s) * n_ + t; }
    void check_index(int s) const {
        if (s < 0 || s >= n_) throw ValidationError("generator index out of range");
    }

    int n_;
    std::vector<Bond> m_;
};

// Subset of the generator set S, kept strictly increasing in the fixed input
// order of S.
class GeneratorSubset {
  public:
    GeneratorSubset() = default;
    explicit GeneratorSubset(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.front() < 0)
            throw ValidationError("negative generator index");
    }

    static GeneratorSubset full(int rank) {
        std::vector<int> v(rank);
        for (int i = 0; i < rank; ++i) v[i] = i;
        return GeneratorSubset(std::move(v));
    }

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    int operator[](int i) const { return members_[static_cast<size_t>(i)]; }

    bool contains(int s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    // Position of s inside the subset, -1 if absent.
    int index_of(int s) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), s);
        if (it == members_.end() || *it != s) return -1;
        return static_cast<int>(it - members_.begin());
    }

    GeneratorSubset without(int s) const {
        std::vector<int> v;
        v.reserve(members_.size());
        for (int m : members_)
            if (m != s) v.push_back(m);
        return GeneratorSubset(std::move(v));
    }

    GeneratorSubset with(int s) const {
        std::vector<int> v(members_);
        v.push_back(s);
        return GeneratorSubset(std::move(v));
    }

    bool subset_of(const GeneratorSubset& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }

    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    // Display label with 1-based generator numbers, e.g. "{1,3}".
    std::string label() const {
        std::string out = "{";
        for (size_t i = 0; i < members_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(members_[i] + 1);
        }
        return out + "}";
    }

    friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
    friend bool operator<(const GeneratorSubset& a, const GeneratorSubset& b) {
        return a.members_ < b.members_;
    }

  private:
    std::vector<int> members_;
};

}  // namespace salvetti
