#pragma once

#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "group_ring.hpp"
#include "group_table.hpp"
#include "homology.hpp"
#include "laurent.hpp"
#include "matrix.hpp"

namespace salvetti {

namespace detail {

// Parallel map over [0, n); chunks of columns, results written to disjoint
// locations by the body.
template <class Fn>
void parallel_for(int n, int threads, Fn&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    threads = std::min(threads, n);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t]() {
            for (int i = t; i < n; i += threads) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Incidence sign between a cell and one of its facets: (-1)^{position of the
// removed generator inside J}.
inline int incidence_sign(const GeneratorSubset& I, const GeneratorSubset& J) {
    if (I.size() + 1 != J.size() || !I.subset_of(J))
        throw ValidationError("incidence sign needs I a facet of J");
    for (int pos = 0; pos < J.size(); ++pos)
        if (!I.contains(J[pos])) return pos % 2 == 0 ? 1 : -1;
    throw ValidationError("facet mismatch");
}

// Boundary of the cell e_J with coefficients in Z[W_J]: one term per facet I,
// with the alternating sum over minimal coset representatives.
inline std::vector<std::pair<GeneratorSubset, GroupRingElement>> boundary_group_ring(
    TableCache& cache, const GeneratorSubset& J) {
    std::vector<std::pair<GeneratorSubset, GroupRingElement>> out;
    if (J.empty()) return out;
    const GroupTable& t = cache.table(J);
    for (int pos = 0; pos < J.size(); ++pos) {
        GeneratorSubset I = J.without(J[pos]);
        int sign = incidence_sign(I, J);
        GroupRingElement coeff(t);
        for (int beta : minimal_coset_reps(t, I)) {
            BigInt c = (t.length(beta) % 2 == 0) ? sign : -sign;
            coeff.add(beta, c);
        }
        out.emplace_back(std::move(I), std::move(coeff));
    }
    return out;
}

// Boundary of e_J in the rank-one q-specialization: coefficient
// sign * W_J(q)/W_I(q), an honest polynomial.
inline std::vector<std::pair<GeneratorSubset, LaurentQ>> boundary_q(TableCache& cache,
                                                                    const GeneratorSubset& J) {
    std::vector<std::pair<GeneratorSubset, LaurentQ>> out;
    if (J.empty()) return out;
    LaurentQ top = poincare_poly(cache.table(J));
    for (int pos = 0; pos < J.size(); ++pos) {
        GeneratorSubset I = J.without(J[pos]);
        int sign = incidence_sign(I, J);
        LaurentQ coeff = exact_divide(top, poincare_poly(cache.table(I)));
        if (sign < 0) coeff = -coeff;
        out.emplace_back(std::move(I), std::move(coeff));
    }
    return out;
}

// The full algebraic complex over Q[q^{+-1}]: degree-k basis cells are the
// finite-type subsets of size k.  d∘d = 0 is verified, not assumed.
inline ChainComplex<LaurentQ> build_complex_q(TableCache& cache, int threads = 1) {
    std::vector<GeneratorSubset> cells = finite_parabolics(cache.matrix());
    int top = 0;
    for (const GeneratorSubset& J : cells) top = std::max(top, J.size());

    std::vector<std::vector<GeneratorSubset>> by_deg(static_cast<size_t>(top) + 1);
    std::map<GeneratorSubset, int> row_of;
    for (const GeneratorSubset& J : cells) {
        row_of[J] = static_cast<int>(by_deg[static_cast<size_t>(J.size())].size());
        by_deg[static_cast<size_t>(J.size())].push_back(J);
    }
    for (const GeneratorSubset& J : cells) cache.table(J);  // warm before parallel reads

    std::vector<std::vector<std::string>> basis(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k)
        for (const GeneratorSubset& J : by_deg[static_cast<size_t>(k)])
            basis[static_cast<size_t>(k)].push_back(J.label());

    std::vector<Matrix<LaurentQ>> boundaries;
    for (int k = 1; k <= top; ++k) {
        const auto& cols = by_deg[static_cast<size_t>(k)];
        Matrix<LaurentQ> d(static_cast<int>(by_deg[static_cast<size_t>(k) - 1].size()),
                           static_cast<int>(cols.size()));
        detail::parallel_for(static_cast<int>(cols.size()), threads, [&](int j) {
            for (auto& [I, coeff] : boundary_q(cache, cols[static_cast<size_t>(j)]))
                d.at(row_of.at(I), j) = coeff;
        });
        boundaries.push_back(std::move(d));
    }

    ChainComplex<LaurentQ> complex(std::move(basis), std::move(boundaries));
    complex.verify_composition();
    return complex;
}

// Entry-wise evaluation at q0 != 0; q0 = -1 is the trivial rational local
// system.
inline ChainComplex<Rational> specialize(const ChainComplex<LaurentQ>& C, const Rational& q0) {
    if (q0 == 0) throw ValidationError("q0 must be nonzero");
    std::vector<std::vector<std::string>> basis;
    for (int k = 0; k <= C.top_degree(); ++k) basis.push_back(C.basis(k));
    std::vector<Matrix<Rational>> mats;
    for (int k = 1; k <= C.top_degree(); ++k) {
        const Matrix<LaurentQ>& d = C.boundary(k);
        Matrix<Rational> e(d.rows(), d.cols());
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) e.at(i, j) = d.at(i, j).evaluate(q0);
        mats.push_back(std::move(e));
    }
    return ChainComplex<Rational>(std::move(basis), std::move(mats));
}

inline std::vector<HomologyModule<LaurentQ>> homology_artin_q(TableCache& cache,
                                                              int threads = 1) {
    return homology<LaurentOps>(build_complex_q(cache, threads));
}

inline std::vector<long> betti_numbers(const std::vector<HomologyModule<Rational>>& h) {
    std::vector<long> b;
    for (const auto& m : h) b.push_back(m.free_rank);
    return b;
}

inline long euler_characteristic(const CoxeterMatrix& m) {
    long chi = 0;
    for (const GeneratorSubset& J : finite_parabolics(m)) chi += (J.size() % 2 == 0) ? 1 : -1;
    return chi;
}

// d∘d = 0 with q coefficients, checked entry by entry on the assembled
// matrices.
inline bool artin_boundary_squares_to_zero_q(TableCache& cache) {
    ChainComplex<LaurentQ> C = build_complex_q(cache);
    for (int k = 2; k <= C.top_degree(); ++k)
        if (!(C.boundary(k - 1) * C.boundary(k)).is_zero()) return false;
    return true;
}

// d∘d = 0 with Z[W_J] coefficients: for each cell the composite through all
// intermediate facets must cancel inside the finite group ring of W_J.
inline bool artin_boundary_squares_to_zero_group_ring(TableCache& cache) {
    for (const GeneratorSubset& J : finite_parabolics(cache.matrix())) {
        if (J.size() < 2) continue;
        const GroupTable& big = cache.table(J);
        std::map<GeneratorSubset, GroupRingElement> acc;
        for (auto& [I, c1] : boundary_group_ring(cache, J)) {
            for (auto& [H, c2] : boundary_group_ring(cache, I)) {
                GroupRingElement term = c1 * c2.embedded_in(big);
                auto it = acc.find(H);
                if (it == acc.end())
                    acc.emplace(H, std::move(term));
                else
                    it->second = it->second + term;
            }
        }
        for (const auto& [H, total] : acc)
            if (!total.is_zero()) return false;
    }
    return true;
}

}  // namespace salvetti
