#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artin_complex.hpp"  // parallel_for
#include "diagram.hpp"
#include "group_ring.hpp"
#include "group_table.hpp"
#include "homology.hpp"

namespace salvetti {

// Weakly decreasing chain of nonempty generator subsets with finite-type top;
// the free resolution has one generator per flag, graded by total size.
struct Flag {
    std::vector<GeneratorSubset> parts;

    int degree() const {
        int d = 0;
        for (const GeneratorSubset& p : parts) d += p.size();
        return d;
    }
    int depth() const { return static_cast<int>(parts.size()); }

    std::string label() const {
        std::string out = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += " >= ";
            out += parts[i].label();
        }
        return out + ")";
    }

    friend bool operator==(const Flag&, const Flag&) = default;
    friend bool operator<(const Flag& a, const Flag& b) { return a.parts < b.parts; }
};

namespace detail {

inline void extend_flags(const GeneratorSubset& last, int remaining, int depth_left,
                         std::vector<GeneratorSubset>& chain, std::vector<Flag>& out) {
    if (remaining == 0) {
        out.push_back(Flag{chain});
        return;
    }
    if (depth_left == 0) return;
    // nonempty subsets of the last part, by bitmask over its members
    const int k = last.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> mem;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) mem.push_back(last[i]);
        GeneratorSubset next(std::move(mem));
        if (next.size() > remaining) continue;
        chain.push_back(next);
        extend_flags(next, remaining - next.size(), depth_left - 1, chain, out);
        chain.pop_back();
    }
}

}  // namespace detail

// All flags of the given degree with depth <= max_depth (-1 for unbounded),
// in lexicographic order by parts.  Degree 0 yields the single empty flag.
inline std::vector<Flag> enumerate_flags(const CoxeterMatrix& m, int degree, int max_depth = -1) {
    if (degree < 0) throw ValidationError("flag degree must be >= 0");
    std::vector<Flag> out;
    if (degree == 0) {
        out.push_back(Flag{});
        return out;
    }
    if (max_depth == 0) return out;
    for (const GeneratorSubset& top : finite_parabolics(m)) {
        if (top.empty() || top.size() > degree) continue;
        std::vector<GeneratorSubset> chain{top};
        detail::extend_flags(top, degree - top.size(), max_depth < 0 ? -1 : max_depth - 1, chain,
                             out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of members of the subset that are <= tau in the fixed linear order
// (the 1-based position of tau).
inline int position_weight(const GeneratorSubset& g, int tau) {
    if (!g.contains(tau)) throw ValidationError("tau must belong to the subset");
    return g.index_of(tau) + 1;
}

// Inversions of the order-preserving comparison under conjugation
// x -> beta^{-1} x beta on the subset; defined only when every member
// conjugates to a generator.
inline long conjugation_inversions(const GroupTable& t, int beta, const GeneratorSubset& part) {
    std::vector<int> image;
    for (int s : part) {
        auto u = conjugated_generator(t, beta, s);
        if (!u) throw ComputationError("conjugation does not preserve the generator set");
        image.push_back(*u);
    }
    long inv = 0;
    for (size_t a = 0; a < image.size(); ++a)
        for (size_t b = a + 1; b < image.size(); ++b)
            if (image[a] > image[b]) ++inv;
    return inv;
}

// Sign exponent of one boundary term: i*l(beta) + sum of earlier part sizes
// + position of tau + inversion counts over the later parts.
inline long boundary_exponent(const GroupTable& t_i, const Flag& f, int i, int tau, int beta) {
    long a = static_cast<long>(i) * t_i.length(beta);
    for (int j = 0; j + 1 < i; ++j) a += f.parts[static_cast<size_t>(j)].size();
    a += position_weight(f.parts[static_cast<size_t>(i) - 1], tau);
    for (size_t j = static_cast<size_t>(i); j < f.parts.size(); ++j)
        a += conjugation_inversions(t_i, beta, f.parts[j]);
    return a;
}

// Boundary of the flag generator: strip one generator tau from a part whose
// size strictly drops, sum over the minimal coset representatives beta whose
// conjugate pulls the tail inside, with the alternating sign above.
// Coefficients land in Z[W_{top part}].
inline std::vector<std::pair<Flag, GroupRingElement>> flag_boundary(TableCache& cache,
                                                                    const Flag& f) {
    std::vector<std::pair<Flag, GroupRingElement>> out;
    if (f.parts.empty()) return out;
    const GroupTable& big = cache.table(f.parts[0]);
    const int r = f.depth();

    std::map<Flag, GroupRingElement> acc;
    for (int i = 1; i <= r; ++i) {
        const GeneratorSubset& part = f.parts[static_cast<size_t>(i) - 1];
        const int next_size = (i < r) ? f.parts[static_cast<size_t>(i)].size() : 0;
        if (part.size() <= next_size) continue;
        const GroupTable& t_i = cache.table(part);
        for (int tau : part) {
            GeneratorSubset stripped = part.without(tau);
            for (int beta : minimal_coset_reps(t_i, stripped)) {
                std::vector<GeneratorSubset> parts(f.parts.begin(),
                                                   f.parts.begin() + (i - 1));
                if (!stripped.empty()) parts.push_back(stripped);
                bool ok = true;
                for (int j = i; j < r && ok; ++j) {
                    auto conj = conjugate_subset(t_i, beta, f.parts[static_cast<size_t>(j)]);
                    if (!conj || !conj->subset_of(stripped))
                        ok = false;
                    else
                        parts.push_back(*conj);
                }
                if (!ok) continue;
                long a = boundary_exponent(t_i, f, i, tau, beta);
                BigInt sign = (a % 2 == 0) ? 1 : -1;
                Flag target{std::move(parts)};
                auto it = acc.find(target);
                if (it == acc.end())
                    it = acc.emplace(std::move(target), GroupRingElement(big)).first;
                int beta_big = big.element_of_word(t_i.reduced_word(beta));
                it->second.add(beta_big, sign);
            }
        }
    }
    for (auto& [g, coeff] : acc) out.emplace_back(g, std::move(coeff));
    return out;
}

// Integer chain complex of the resolution after applying the augmentation
// w -> 1 entry-wise (coefficients in the trivial module).
inline ChainComplex<BigInt> build_flag_complex_augmented(TableCache& cache, int k_max,
                                                         int max_depth = -1, int threads = 1) {
    if (k_max < 0) throw ValidationError("k_max must be >= 0");
    std::vector<std::vector<Flag>> flags;
    for (int k = 0; k <= k_max; ++k) flags.push_back(enumerate_flags(cache.matrix(), k, max_depth));

    for (const GeneratorSubset& J : finite_parabolics(cache.matrix())) cache.table(J);

    std::vector<std::vector<std::string>> basis;
    for (const auto& layer : flags) {
        std::vector<std::string> names;
        for (const Flag& f : layer) names.push_back(f.label());
        basis.push_back(std::move(names));
    }

    std::vector<Matrix<BigInt>> boundaries;
    for (int k = 1; k <= k_max; ++k) {
        const auto& cols = flags[static_cast<size_t>(k)];
        const auto& rows = flags[static_cast<size_t>(k) - 1];
        std::map<Flag, int> row_of;
        for (size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<int>(i));
        Matrix<BigInt> d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        detail::parallel_for(static_cast<int>(cols.size()), threads, [&](int j) {
            for (auto& [g, coeff] : flag_boundary(cache, cols[static_cast<size_t>(j)])) {
                // boundary targets never exceed the source depth, so they are
                // always inside the truncated basis
                auto it = row_of.find(g);
                if (it == row_of.end())
                    throw ComputationError("boundary left the flag basis at " + g.label());
                d.at(it->second, j) = coeff.augmented();
            }
        });
        boundaries.push_back(std::move(d));
    }
    ChainComplex<BigInt> complex(std::move(basis), std::move(boundaries));
    complex.verify_composition();
    return complex;
}

// Integral homology of W up to degree k_max - 1 (degree k needs the
// degree-(k+1) boundary, so the top slot is not reported).
inline std::vector<HomologyModule<BigInt>> homology_coxeter(TableCache& cache, int k_max,
                                                            int max_depth = -1, int threads = 1) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    auto all = homology<IntegerOps>(build_flag_complex_augmented(cache, k_max, max_depth, threads));
    all.resize(static_cast<size_t>(k_max));  // degrees 0 .. k_max-1
    return all;
}

// Symbolic d∘d = 0 in Z[W_{top}] for every flag of degree <= max_degree;
// the decisive check of the sign and coset conventions.
inline bool flag_boundary_squares_to_zero(TableCache& cache, int max_degree, int max_depth = -1) {
    for (int k = 2; k <= max_degree; ++k) {
        for (const Flag& f : enumerate_flags(cache.matrix(), k, max_depth)) {
            const GroupTable& big = cache.table(f.parts[0]);
            std::map<Flag, GroupRingElement> acc;
            for (auto& [g, c1] : flag_boundary(cache, f)) {
                for (auto& [h, c2] : flag_boundary(cache, g)) {
                    GroupRingElement term = c1 * c2.embedded_in(big);
                    auto it = acc.find(h);
                    if (it == acc.end())
                        acc.emplace(h, std::move(term));
                    else
                        it->second = it->second + term;
                }
            }
            for (const auto& [h, total] : acc)
                if (!total.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace salvetti
