#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "coxeter_matrix.hpp"

namespace salvetti {

// Presentation of the Artin group attached to (W,S): one braid relation per
// unordered pair with finite label, both sides alternating words of m(s,t)
// letters.
struct ArtinPresentation {
    struct Relation {
        std::vector<int> lhs, rhs;  // generator indices, 0-based
    };
    std::vector<std::string> generators;
    std::vector<Relation> relations;
};

inline ArtinPresentation artin_presentation(const CoxeterMatrix& m) {
    ArtinPresentation p;
    for (int s = 0; s < m.rank(); ++s) p.generators.push_back("g" + std::to_string(s + 1));
    for (int s = 0; s < m.rank(); ++s)
        for (int t = s + 1; t < m.rank(); ++t) {
            Bond b = m.label(s, t);
            if (!b.is_finite()) continue;
            int len = b.value();
            ArtinPresentation::Relation r;
            for (int i = 0; i < len; ++i) {
                r.lhs.push_back(i % 2 == 0 ? s : t);
                r.rhs.push_back(i % 2 == 0 ? t : s);
            }
            p.relations.push_back(std::move(r));
        }
    return p;
}

// Rank of the abelianization of the Artin group: generators s,t are
// identified exactly when m(s,t) is finite and odd.
inline int abelianization_rank(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            Bond b = m.label(s, t);
            if (b.is_finite() && b.value() % 2 == 1) parent[find(s)] = find(t);
        }
    int classes = 0;
    for (int s = 0; s < n; ++s)
        if (find(s) == s) ++classes;
    return classes;
}

}  // namespace salvetti
