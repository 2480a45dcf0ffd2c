#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coxeter_matrix.hpp"
#include "cyclotomic.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace salvetti {

// Square matrix over a cyclotomic field; acts on the span of the simple
// roots indexed by a generator subset.
class CycloMatrix {
  public:
    CycloMatrix(std::shared_ptr<const CycloField> f, int n)
        : field_(std::move(f)), n_(n), a_(static_cast<size_t>(n) * n, Cyclo::zero(field_)) {}

    static CycloMatrix identity(std::shared_ptr<const CycloField> f, int n) {
        CycloMatrix m(std::move(f), n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo::from_rational(m.field_, Rational(1));
        return m;
    }

    int size() const { return n_; }
    Cyclo& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Cyclo& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    CycloMatrix operator*(const CycloMatrix& o) const {
        CycloMatrix out(field_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Cyclo& v = at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    const Cyclo& w = o.at(k, j);
                    if (w.is_zero()) continue;
                    out.at(i, j) = out.at(i, j) + v * w;
                }
            }
        return out;
    }

    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }

    // Exact dedup key: the concatenated power-basis coefficients.
    std::vector<Rational> flatten() const {
        std::vector<Rational> key;
        key.reserve(a_.size() * static_cast<size_t>(field_->degree()));
        for (const Cyclo& c : a_)
            for (const Rational& v : c.coeffs()) key.push_back(v);
        return key;
    }

  private:
    std::shared_ptr<const CycloField> field_;
    int n_;
    std::vector<Cyclo> a_;
};

// Level of the cyclotomic field carrying the reflection representation of
// W_J: lcm of 2*m(s,t) over pairs in J.
inline int cyclotomic_level(const CoxeterMatrix& m, const GeneratorSubset& J) {
    long L = 1;
    for (int a = 0; a < J.size(); ++a)
        for (int b = a + 1; b < J.size(); ++b) {
            Bond bond = m.label(J[a], J[b]);
            if (!bond.is_finite()) throw ValidationError("infinite label inside subset " + J.label());
            L = std::lcm(L, 2L * bond.value());
            if (L > 100000) throw ComputationError("cyclotomic level too large");
        }
    return static_cast<int>(L);
}

// Geometric reflection representation restricted to J: columns are images of
// the simple roots, sigma_s(alpha_s) = -alpha_s and
// sigma_s(alpha_t) = alpha_t + 2cos(pi/m(s,t)) alpha_s.
inline std::vector<CycloMatrix> generator_matrices(const CoxeterMatrix& m,
                                                   const GeneratorSubset& J) {
    auto field = CycloField::get(cyclotomic_level(m, J));
    const int n = J.size();
    std::vector<CycloMatrix> out;
    out.reserve(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        CycloMatrix sigma = CycloMatrix::identity(field, n);
        sigma.at(p, p) = Cyclo::from_rational(field, Rational(-1));
        for (int t = 0; t < n; ++t) {
            if (t == p) continue;
            int label = m.label(J[p], J[t]).value();
            sigma.at(p, t) = Cyclo::two_cos_pi_over(field, label);
        }
        out.push_back(std::move(sigma));
    }
    return out;
}

inline constexpr long kDefaultBudget = 200000;

// Exhaustive table of a finite parabolic W_J: elements enumerated
// breadth-first from the identity with exact matrix dedup, so BFS depth is
// the length function.  Index 0 is the identity.
class GroupTable {
  public:
    GroupTable(const CoxeterMatrix& matrix, GeneratorSubset J, long budget = kDefaultBudget)
        : J_(std::move(J)) {
        const int n = J_.size();
        std::vector<CycloMatrix> gens = generator_matrices(matrix, J_);
        auto field = CycloField::get(cyclotomic_level(matrix, J_));

        std::map<std::vector<Rational>, int> index;
        elements_.push_back(CycloMatrix::identity(field, n));
        index.emplace(elements_[0].flatten(), 0);
        length_.push_back(0);
        word_.emplace_back();
        right_mult_.emplace_back(n, -1);

        for (size_t w = 0; w < elements_.size(); ++w) {
            for (int p = 0; p < n; ++p) {
                if (right_mult_[w][p] >= 0) continue;
                CycloMatrix prod = elements_[w] * gens[p];
                auto key = prod.flatten();
                auto it = index.find(key);
                int idx;
                if (it != index.end()) {
                    idx = it->second;
                } else {
                    if (static_cast<long>(elements_.size()) >= budget)
                        throw BudgetExceeded("enumeration budget " + std::to_string(budget) +
                                             " exceeded for subset " + J_.label());
                    idx = static_cast<int>(elements_.size());
                    elements_.push_back(std::move(prod));
                    index.emplace(std::move(key), idx);
                    length_.push_back(length_[w] + 1);
                    std::vector<int> word = word_[w];
                    word.push_back(J_[p]);
                    word_.push_back(std::move(word));
                    right_mult_.emplace_back(n, -1);
                }
                right_mult_[w][p] = idx;
                right_mult_[static_cast<size_t>(idx)][p] = static_cast<int>(w);
            }
        }

        gen_elem_.assign(static_cast<size_t>(n), 0);
        for (int p = 0; p < n; ++p) gen_elem_[p] = right_mult_[0][p];

        inverse_.assign(elements_.size(), 0);
        for (size_t w = 0; w < elements_.size(); ++w) {
            int x = 0;
            const std::vector<int>& word = word_[w];
            for (size_t i = word.size(); i-- > 0;) x = right_mult_gen(x, word[i]);
            inverse_[w] = x;
        }

        longest_ = 0;
        for (size_t w = 0; w < elements_.size(); ++w)
            if (length_[w] > length_[longest_]) longest_ = static_cast<int>(w);
    }

    const GeneratorSubset& generators() const { return J_; }
    long size() const { return static_cast<long>(elements_.size()); }
    int length(int w) const { return length_[static_cast<size_t>(w)]; }
    int max_length() const { return length_[static_cast<size_t>(longest_)]; }
    int longest_element() const { return longest_; }
    int inverse(int w) const { return inverse_[static_cast<size_t>(w)]; }
    const CycloMatrix& matrix_of(int w) const { return elements_[static_cast<size_t>(w)]; }

    // One stored reduced expression (the BFS discovery path), global ids.
    const std::vector<int>& reduced_word(int w) const { return word_[static_cast<size_t>(w)]; }

    // w * s for the generator at position pos inside J.
    int right_mult(int w, int pos) const { return right_mult_[static_cast<size_t>(w)][pos]; }
    int right_mult_gen(int w, int global_gen) const {
        int pos = J_.index_of(global_gen);
        if (pos < 0) throw ValidationError("generator not in subset");
        return right_mult(w, pos);
    }

    bool right_descent(int w, int pos) const {
        return length(right_mult(w, pos)) < length(w);
    }
    bool left_descent(int w, int pos) const { return right_descent(inverse(w), pos); }

    int generator_element(int pos) const { return gen_elem_[static_cast<size_t>(pos)]; }

    int mult(int a, int b) const {
        int x = a;
        for (int g : word_[static_cast<size_t>(b)]) x = right_mult_gen(x, g);
        return x;
    }

    // Element of a word in global generator ids (must lie in J).
    int element_of_word(const std::vector<int>& word) const {
        int x = 0;
        for (int g : word) x = right_mult_gen(x, g);
        return x;
    }

    // Lexicographically least reduced word; canonical across ambient groups
    // since descent sets are intrinsic.
    std::vector<int> canonical_word(int w) const {
        std::vector<int> out;
        int x = w;
        while (x != 0) {
            for (int pos = 0; pos < J_.size(); ++pos) {
                if (left_descent(x, pos)) {
                    out.push_back(J_[pos]);
                    x = mult(gen_elem_[static_cast<size_t>(pos)], x);
                    break;
                }
            }
        }
        return out;
    }

  private:
    GeneratorSubset J_;
    std::vector<CycloMatrix> elements_;
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<std::vector<int>> right_mult_;
    std::vector<int> gen_elem_;
    std::vector<int> inverse_;
    int longest_ = 0;
};

inline GroupTable enumerate_group(const CoxeterMatrix& m, const GeneratorSubset& J,
                                  long budget = kDefaultBudget) {
    return GroupTable(m, J, budget);
}

// Minimal-length representatives of the cosets beta * W_I inside W_J:
// elements with no right descent in I.
inline std::vector<int> minimal_coset_reps(const GroupTable& t, const GeneratorSubset& I) {
    if (!I.subset_of(t.generators())) throw ValidationError("I must be a subset of J");
    std::vector<int> positions;
    for (int s : I) positions.push_back(t.generators().index_of(s));
    std::vector<int> out;
    for (int w = 0; w < t.size(); ++w) {
        bool ok = true;
        for (int pos : positions)
            if (t.right_descent(w, pos)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

// Minimal-length representatives of the cosets W_I * beta: no left descent
// in I, read off the right descents of the inverse.
inline std::vector<int> minimal_left_reps(const GroupTable& t, const GeneratorSubset& I) {
    if (!I.subset_of(t.generators())) throw ValidationError("I must be a subset of J");
    std::vector<int> positions;
    for (int s : I) positions.push_back(t.generators().index_of(s));
    std::vector<int> out;
    for (int w = 0; w < t.size(); ++w) {
        bool ok = true;
        for (int pos : positions)
            if (t.left_descent(w, pos)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

// Poincare polynomial: sum of q^{l(w)} over the table.
inline LaurentQ poincare_poly(const GroupTable& t) {
    std::vector<long> counts(static_cast<size_t>(t.max_length()) + 1, 0);
    for (int w = 0; w < t.size(); ++w) ++counts[static_cast<size_t>(t.length(w))];
    LaurentQ p;
    for (size_t k = 0; k < counts.size(); ++k)
        p += LaurentQ::monomial(Rational(counts[k]), static_cast<long>(k));
    return p;
}

// Closed form from the classification: product of [d] over the degrees of
// each component.
inline LaurentQ poincare_poly_closed_form(const std::vector<TypeLabel>& labels) {
    LaurentQ p(1);
    for (const TypeLabel& t : labels)
        for (int d : t.degrees()) p *= q_integer(d);
    return p;
}

// Word in Artin generators attached to w through its stored reduced
// expression; well-defined independently of the chosen expression.
inline std::vector<int> section_psi(const GroupTable& t, int w) { return t.reduced_word(w); }

// Single-generator conjugation: the generator u with beta^{-1} s beta = u,
// if any.
inline std::optional<int> conjugated_generator(const GroupTable& t, int beta, int s) {
    int pos = t.generators().index_of(s);
    if (pos < 0) throw ValidationError("generator not in subset");
    int x = t.mult(t.mult(t.inverse(beta), t.generator_element(pos)), beta);
    for (int p = 0; p < t.generators().size(); ++p)
        if (x == t.generator_element(p)) return t.generators()[p];
    return std::nullopt;
}

// If beta^{-1} K beta lies inside the generator set of the table, the set of
// target generators; absent otherwise.
inline std::optional<GeneratorSubset> conjugate_subset(const GroupTable& t, int beta,
                                                       const GeneratorSubset& K) {
    std::vector<int> image;
    for (int s : K) {
        auto u = conjugated_generator(t, beta, s);
        if (!u) return std::nullopt;
        image.push_back(*u);
    }
    return GeneratorSubset(std::move(image));
}

// Memoized group tables per subset, sharing one Coxeter matrix and budget.
class TableCache {
  public:
    explicit TableCache(CoxeterMatrix m, long budget = kDefaultBudget)
        : m_(std::move(m)), budget_(budget) {}

    const CoxeterMatrix& matrix() const { return m_; }
    long budget() const { return budget_; }

    // Classification is consulted before enumerating, so a budget overflow
    // inside the BFS would be an internal error for a claimed-finite group.
    const GroupTable& table(const GeneratorSubset& J) {
        auto it = tables_.find(J);
        if (it == tables_.end()) {
            auto labels = classify_finite(m_, J);
            if (!labels)
                throw BudgetExceeded("subset " + J.label() + " is not finite-type");
            if (finite_order(*labels) > budget_)
                throw BudgetExceeded("group order " + finite_order(*labels).str() +
                                     " exceeds the budget " + std::to_string(budget_));
            it = tables_.emplace(J, std::make_unique<GroupTable>(m_, J, budget_)).first;
        }
        return *it->second;
    }

  private:
    CoxeterMatrix m_;
    long budget_;
    std::map<GeneratorSubset, std::unique_ptr<GroupTable>> tables_;
};

}  // namespace salvetti
