#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "group_table.hpp"

namespace salvetti {

// One face of the polyhedral complex Q: the coset is recorded through its
// unique minimal-length element (as a canonical reduced word, ambient
// independent) and the subset labelling its orbit class.
struct QCell {
    std::vector<int> min_word;  // canonical reduced word of the minimal element
    GeneratorSubset orbit;      // the parabolic type of the cell

    int dim() const { return orbit.size(); }

    std::string word_label() const {
        if (min_word.empty()) return "e";
        std::string out;
        for (size_t i = 0; i < min_word.size(); ++i) {
            if (i) out += ".";
            out += "s" + std::to_string(min_word[i] + 1);
        }
        return out;
    }

    friend bool operator==(const QCell&, const QCell&) = default;
    friend bool operator<(const QCell& a, const QCell& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        if (!(a.orbit == b.orbit)) return a.orbit < b.orbit;
        return a.min_word < b.min_word;
    }
};

// Combinatorial face poset of Q together with the identification data of the
// quotient complex: covering pairs, orbit classes, and the quotient's cell
// list (one cell per finite-type subset).
struct FacePoset {
    std::vector<QCell> cells;                   // sorted by (dim, orbit, word)
    std::vector<std::pair<int, int>> covering;  // (face index, cell index)
    std::vector<GeneratorSubset> quotient_cells;

    std::map<int, long> cells_by_dim() const {
        std::map<int, long> out;
        for (const QCell& c : cells) ++out[c.dim()];
        return out;
    }

    std::map<GeneratorSubset, long> orbit_sizes() const {
        std::map<GeneratorSubset, long> out;
        for (const QCell& c : cells) ++out[c.orbit];
        return out;
    }

    std::vector<int> faces_of(int cell) const {
        std::vector<int> out;
        for (const auto& [f, c] : covering)
            if (c == cell) out.push_back(f);
        return out;
    }
};

namespace detail {

// Greedy descent to the minimal element of x * W_I.
inline int descend_to_coset_min(const GroupTable& t, int x, const GeneratorSubset& I) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s : I) {
            int pos = t.generators().index_of(s);
            if (t.right_descent(x, pos)) {
                x = t.right_mult(x, pos);
                moved = true;
            }
        }
    }
    return x;
}

}  // namespace detail

// Face poset of Q.  For infinite W only the cells lying inside the
// finite-type polyhedra exist; the maximal finite parabolics carry all of
// them, and minimal coset elements agree across ambients, so the union is
// assembled by canonical words.
inline FacePoset face_poset_Q(TableCache& cache) {
    FacePoset out;
    out.quotient_cells = finite_parabolics(cache.matrix());

    // maximal finite-type subsets
    std::vector<GeneratorSubset> tops;
    for (const GeneratorSubset& J : out.quotient_cells) {
        bool maximal = true;
        for (const GeneratorSubset& K : out.quotient_cells)
            if (!(K == J) && J.subset_of(K)) {
                maximal = false;
                break;
            }
        if (maximal) tops.push_back(J);
    }

    std::map<QCell, GeneratorSubset> witness;  // cell -> some ambient top containing it
    for (const GeneratorSubset& T : tops) {
        const GroupTable& t = cache.table(T);
        for (const GeneratorSubset& G : out.quotient_cells) {
            if (!G.subset_of(T)) continue;
            for (int beta : minimal_coset_reps(t, G))
                witness.emplace(QCell{t.canonical_word(beta), G}, T);
        }
    }

    std::map<QCell, int> index;
    for (const auto& [cell, top] : witness) {
        index.emplace(cell, static_cast<int>(out.cells.size()));
        out.cells.push_back(cell);
    }

    std::set<std::pair<int, int>> covers;
    for (const auto& [cell, top] : witness) {
        if (cell.dim() == 0) continue;
        const GroupTable& t = cache.table(top);
        int b = t.element_of_word(cell.min_word);
        for (int s : cell.orbit) {
            GeneratorSubset I = cell.orbit.without(s);
            const GroupTable& small = cache.table(cell.orbit);
            for (int u : minimal_coset_reps(small, I)) {
                int x = t.mult(b, t.element_of_word(small.reduced_word(u)));
                int f = detail::descend_to_coset_min(t, x, I);
                QCell face{t.canonical_word(f), I};
                covers.emplace(index.at(face), index.at(cell));
            }
        }
    }
    out.covering.assign(covers.begin(), covers.end());
    return out;
}

}  // namespace salvetti
