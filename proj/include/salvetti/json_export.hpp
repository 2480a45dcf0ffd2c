#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "artin_complex.hpp"
#include "face_poset.hpp"
#include "flag_complex.hpp"
#include "homology.hpp"
#include "presentation.hpp"

namespace salvetti {

using ordered_json = nlohmann::ordered_json;

inline std::vector<int> one_based(const std::vector<int>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int g : word) out.push_back(g + 1);
    return out;
}

inline std::vector<int> one_based(const GeneratorSubset& g) { return one_based(g.members()); }

template <class R, class Render>
ordered_json json_complex(const ChainComplex<R>& C, const std::string& ring, Render render) {
    ordered_json j;
    j["ring"] = ring;
    ordered_json basis = ordered_json::array();
    for (int k = 0; k <= C.top_degree(); ++k) basis.push_back(C.basis(k));
    j["basis"] = basis;
    ordered_json bnd = ordered_json::array();
    for (int k = 1; k <= C.top_degree(); ++k) {
        const Matrix<R>& d = C.boundary(k);
        ordered_json m;
        m["degree"] = k;
        m["rows"] = d.rows();
        m["cols"] = d.cols();
        ordered_json entries = ordered_json::array();
        for (int i = 0; i < d.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < d.cols(); ++jj) row.push_back(render(d.at(i, jj)));
            entries.push_back(row);
        }
        m["entries"] = entries;
        bnd.push_back(m);
    }
    j["boundaries"] = bnd;
    return j;
}

inline ordered_json json_complex_q(const ChainComplex<LaurentQ>& C) {
    return json_complex(C, "Q[q^±1]", [](const LaurentQ& p) { return to_string(p); });
}

inline ordered_json json_complex_z(const ChainComplex<BigInt>& C) {
    return json_complex(C, "Z", [](const BigInt& v) { return v.str(); });
}

template <class R>
ordered_json json_homology(const std::vector<HomologyModule<R>>& hs,
                           std::string (*factor_str)(const R&)) {
    ordered_json out = ordered_json::array();
    for (const auto& h : hs) {
        ordered_json j;
        j["degree"] = h.degree;
        j["free_rank"] = h.free_rank;
        ordered_json t = ordered_json::array();
        for (const R& d : h.torsion) t.push_back(factor_str(d));
        j["invariant_factors"] = t;
        j["module"] = module_str(h);
        out.push_back(j);
    }
    return out;
}

inline ordered_json json_homology_z(const std::vector<HomologyModule<BigInt>>& hs) {
    return json_homology<BigInt>(hs, +[](const BigInt& d) { return d.str(); });
}

inline ordered_json json_homology_q(const std::vector<HomologyModule<LaurentQ>>& hs) {
    return json_homology<LaurentQ>(hs, +[](const LaurentQ& d) { return to_string(d); });
}

inline ordered_json json_face_poset(const FacePoset& p) {
    ordered_json j;
    ordered_json cells = ordered_json::array();
    for (const QCell& c : p.cells) {
        ordered_json cj;
        cj["dim"] = c.dim();
        cj["min_word"] = one_based(c.min_word);
        cj["orbit"] = one_based(c.orbit);
        cells.push_back(cj);
    }
    j["cells"] = cells;
    ordered_json cov = ordered_json::array();
    for (const auto& [f, c] : p.covering) cov.push_back(ordered_json::array({f, c}));
    j["covering"] = cov;
    ordered_json quot = ordered_json::array();
    for (const GeneratorSubset& g : p.quotient_cells) quot.push_back(one_based(g));
    j["quotient_cells"] = quot;
    return j;
}

// The group-ring Salvetti boundary exported symbolically: coefficients as
// signed words in the Artin generators (the section of each group element).
inline ordered_json json_artin_group_ring(TableCache& cache) {
    ordered_json out;
    out["ring"] = "Z[G]";
    ordered_json cells = ordered_json::array();
    for (const GeneratorSubset& J : finite_parabolics(cache.matrix())) {
        ordered_json cj;
        cj["cell"] = J.label();
        cj["degree"] = J.size();
        ordered_json bnd = ordered_json::array();
        if (!J.empty()) {
            const GroupTable& t = cache.table(J);
            for (auto& [I, coeff] : boundary_group_ring(cache, J)) {
                ordered_json term;
                term["face"] = I.label();
                ordered_json words = ordered_json::array();
                for (const auto& [w, c] : coeff.terms()) {
                    ordered_json wj;
                    wj["coeff"] = c.str();
                    wj["word"] = one_based(section_psi(t, w));
                    words.push_back(wj);
                }
                term["terms"] = words;
                bnd.push_back(term);
            }
        }
        cj["boundary"] = bnd;
        cells.push_back(cj);
    }
    out["cells"] = cells;
    return out;
}

inline ordered_json json_presentation(const ArtinPresentation& p) {
    ordered_json j;
    j["generators"] = p.generators;
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.relations) {
        ordered_json rj;
        rj["lhs"] = one_based(r.lhs);
        rj["rhs"] = one_based(r.rhs);
        rels.push_back(rj);
    }
    j["relations"] = rels;
    return j;
}

}  // namespace salvetti
