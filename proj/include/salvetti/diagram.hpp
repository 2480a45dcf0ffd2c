#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxeter_matrix.hpp"
#include "numbers.hpp"

namespace salvetti {

// Canonical isomorphism class of a connected finite-type Coxeter diagram.
// Rank-2 diagrams collapse to one label each: bond 3 -> A2, bond 4 -> B2,
// bond >= 5 -> I2(bond).
struct TypeLabel {
    enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

    Family family;
    int rank;
    int bond = 0;  // used by I2 only

    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
    friend bool operator<(const TypeLabel& a, const TypeLabel& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.bond < b.bond;
    }

    std::string name() const {
        switch (family) {
            case Family::A: return "A" + std::to_string(rank);
            case Family::B: return "B" + std::to_string(rank);
            case Family::D: return "D" + std::to_string(rank);
            case Family::E6: return "E6";
            case Family::E7: return "E7";
            case Family::E8: return "E8";
            case Family::F4: return "F4";
            case Family::H3: return "H3";
            case Family::H4: return "H4";
            case Family::I2: return "I2(" + std::to_string(bond) + ")";
        }
        return "?";
    }

    BigInt order() const {
        switch (family) {
            case Family::A: return factorial(rank + 1);
            case Family::B: return factorial(rank) << rank;
            case Family::D: return factorial(rank) << (rank - 1);
            case Family::E6: return 51840;
            case Family::E7: return 2903040;
            case Family::E8: return 696729600;
            case Family::F4: return 1152;
            case Family::H3: return 120;
            case Family::H4: return 14400;
            case Family::I2: return 2 * bond;
        }
        return 0;
    }

    // Degrees of the fundamental invariants; the Poincare polynomial is the
    // product of the q-integers [d] over this list.
    std::vector<int> degrees() const {
        std::vector<int> d;
        switch (family) {
            case Family::A:
                for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
                break;
            case Family::B:
                for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
                break;
            case Family::D:
                for (int i = 1; i < rank; ++i) d.push_back(2 * i);
                d.push_back(rank);
                break;
            case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
            case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
            case Family::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
            case Family::F4: d = {2, 6, 8, 12}; break;
            case Family::H3: d = {2, 6, 10}; break;
            case Family::H4: d = {2, 12, 20, 30}; break;
            case Family::I2: d = {2, bond}; break;
        }
        return d;
    }
};

// Connected components of the Coxeter diagram restricted to J (edges where
// m(s,t) >= 3 or infinite), sorted by smallest member.
inline std::vector<GeneratorSubset> components(const CoxeterMatrix& m, const GeneratorSubset& J) {
    std::vector<GeneratorSubset> out;
    std::vector<bool> used(static_cast<size_t>(J.size()), false);
    auto connected = [&](int s, int t) {
        Bond b = m.label(s, t);
        return !b.is_finite() || b.value() >= 3;
    };
    for (int start = 0; start < J.size(); ++start) {
        if (used[start]) continue;
        std::vector<int> comp, stack{start};
        used[start] = true;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            comp.push_back(J[i]);
            for (int k = 0; k < J.size(); ++k)
                if (!used[k] && connected(J[i], J[k])) {
                    used[k] = true;
                    stack.push_back(k);
                }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

namespace detail {

// Match one connected diagram against the finite-type list.
inline std::optional<TypeLabel> classify_component(const CoxeterMatrix& m,
                                                   const GeneratorSubset& comp) {
    using F = TypeLabel::Family;
    const int k = comp.size();
    if (k == 1) return TypeLabel{F::A, 1};

    struct E {
        int a, b, label;
    };
    std::vector<E> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Bond b = m.label(comp[i], comp[j]);
            if (!b.is_finite()) return std::nullopt;
            if (b.value() >= 3) edges.push_back({i, j, b.value()});
        }
    if (static_cast<int>(edges.size()) != k - 1) return std::nullopt;  // cycle

    if (k == 2) {
        int v = edges[0].label;
        if (v == 3) return TypeLabel{F::A, 2};
        if (v == 4) return TypeLabel{F::B, 2};
        return TypeLabel{F::I2, 2, v};
    }

    std::vector<std::vector<int>> adj(k);
    for (const E& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    int branch = -1;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() >= 4) return std::nullopt;
        if (adj[i].size() == 3) {
            if (branch >= 0) return std::nullopt;
            branch = i;
        }
    }

    if (branch < 0) {
        // path: walk from one endpoint and collect the label sequence
        int end = -1;
        for (int i = 0; i < k && end < 0; ++i)
            if (adj[i].size() == 1) end = i;
        std::vector<int> labels;
        int prev = -1, cur = end;
        while (static_cast<int>(labels.size()) < k - 1) {
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            int lab = 3;
            for (const E& e : edges)
                if ((e.a == cur && e.b == next) || (e.a == next && e.b == cur)) lab = e.label;
            labels.push_back(lab);
            prev = cur;
            cur = next;
        }
        int heavy = -1;
        for (int i = 0; i < k - 1; ++i)
            if (labels[i] != 3) {
                if (heavy >= 0) return std::nullopt;
                heavy = i;
            }
        if (heavy < 0) return TypeLabel{F::A, k};
        const bool at_end = (heavy == 0 || heavy == k - 2);
        switch (labels[heavy]) {
            case 4:
                if (at_end) return TypeLabel{F::B, k};
                if (k == 4) return TypeLabel{F::F4, 4};
                return std::nullopt;
            case 5:
                if (!at_end) return std::nullopt;
                if (k == 3) return TypeLabel{F::H3, 3};
                if (k == 4) return TypeLabel{F::H4, 4};
                return std::nullopt;
            default:
                return std::nullopt;
        }
    }

    // exactly one degree-3 vertex: D or E shape, all labels must be 3
    for (const E& e : edges)
        if (e.label != 3) return std::nullopt;
    std::vector<int> arms;
    for (int nb : adj[branch]) {
        int len = 1, prev = branch, cur = nb;
        while (adj[cur].size() == 2) {
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return TypeLabel{F::D, k};
    if (arms == std::vector<int>{1, 2, 2}) return TypeLabel{F::E6, 6};
    if (arms == std::vector<int>{1, 2, 3}) return TypeLabel{F::E7, 7};
    if (arms == std::vector<int>{1, 2, 4}) return TypeLabel{F::E8, 8};
    return std::nullopt;
}

}  // namespace detail

// Type labels of the components of J, in component order, if every component
// is finite-type; absent otherwise.
inline std::optional<std::vector<TypeLabel>> classify_finite(const CoxeterMatrix& m,
                                                             const GeneratorSubset& J) {
    std::vector<TypeLabel> out;
    for (const GeneratorSubset& comp : components(m, J)) {
        auto t = detail::classify_component(m, comp);
        if (!t) return std::nullopt;
        out.push_back(*t);
    }
    return out;
}

inline BigInt finite_order(const std::vector<TypeLabel>& labels) {
    BigInt o = 1;
    for (const TypeLabel& t : labels) o *= t.order();
    return o;
}

// All subsets J of S with W_J finite, sorted by (size, members).  Always
// contains the empty subset.
inline std::vector<GeneratorSubset> finite_parabolics(const CoxeterMatrix& m) {
    const int n = m.rank();
    if (n > 24) throw ComputationError("rank too large for subset enumeration");
    std::vector<GeneratorSubset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> mem;
        for (int s = 0; s < n; ++s)
            if (mask & (1u << s)) mem.push_back(s);
        GeneratorSubset J(std::move(mem));
        if (classify_finite(m, J)) out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end(), [](const GeneratorSubset& a, const GeneratorSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace salvetti
