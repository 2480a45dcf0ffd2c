#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "smith.hpp"

namespace salvetti {

// H_k presented as a free rank plus the ordered nontrivial invariant factors
// of the incoming boundary.
template <class R>
struct HomologyModule {
    int degree = 0;
    long free_rank = 0;
    std::vector<R> torsion;  // canonical factors, each a non-unit

    friend bool operator==(const HomologyModule&, const HomologyModule&) = default;
};

// Graded basis labels plus boundary matrices d_k : C_k -> C_{k-1}.
template <class R>
class ChainComplex {
  public:
    ChainComplex(std::vector<std::vector<std::string>> basis, std::vector<Matrix<R>> boundaries)
        : basis_(std::move(basis)), d_(std::move(boundaries)) {
        if (d_.size() + 1 != basis_.size())
            throw ComputationError("chain complex needs one boundary per positive degree");
        for (int k = 1; k <= top_degree(); ++k) {
            const Matrix<R>& b = boundary(k);
            if (b.cols() != dim(k) || b.rows() != dim(k - 1))
                throw ComputationError("boundary shape mismatch in degree " + std::to_string(k));
        }
    }

    int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
    int dim(int k) const {
        if (k < 0 || k > top_degree()) return 0;
        return static_cast<int>(basis_[static_cast<size_t>(k)].size());
    }
    const std::vector<std::string>& basis(int k) const { return basis_[static_cast<size_t>(k)]; }
    // d_k for 1 <= k <= top_degree()
    const Matrix<R>& boundary(int k) const { return d_[static_cast<size_t>(k) - 1]; }

    void verify_composition() const {
        for (int k = 2; k <= top_degree(); ++k)
            if (!(boundary(k - 1) * boundary(k)).is_zero())
                throw ComputationError("boundary composition nonzero in degree " +
                                       std::to_string(k));
    }

  private:
    std::vector<std::vector<std::string>> basis_;
    std::vector<Matrix<R>> d_;
};

// Homology of a complex over the PID given by Ops.  In degree k the free rank
// is dim C_k - rank d_k - rank d_{k+1} and the torsion is read off the
// invariant factors of d_{k+1}.
template <class Ops>
std::vector<HomologyModule<typename Ops::value>> homology(
    const ChainComplex<typename Ops::value>& C) {
    using R = typename Ops::value;
    C.verify_composition();
    const int top = C.top_degree();
    std::vector<SmithResult<R>> snf(static_cast<size_t>(top) + 2);
    for (int k = 1; k <= top; ++k)
        snf[static_cast<size_t>(k)] = smith_normal_form<Ops>(C.boundary(k));
    std::vector<HomologyModule<R>> out;
    for (int k = 0; k <= top; ++k) {
        HomologyModule<R> h;
        h.degree = k;
        h.free_rank = C.dim(k) - snf[static_cast<size_t>(k)].rank -
                      snf[static_cast<size_t>(k) + 1].rank;
        if (h.free_rank < 0) throw ComputationError("negative free rank: corrupt complex");
        for (const R& d : snf[static_cast<size_t>(k) + 1].invariant_factors)
            if (!(d == R(1))) h.torsion.push_back(d);
        out.push_back(std::move(h));
    }
    return out;
}

// Renderers for the two coefficient rings in use.
inline std::string module_str(const HomologyModule<BigInt>& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1) parts.push_back("Z");
    else if (h.free_rank > 1) parts.push_back("Z^" + std::to_string(h.free_rank));
    for (const BigInt& d : h.torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

inline std::string module_str(const HomologyModule<LaurentQ>& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1) parts.push_back("R");
    else if (h.free_rank > 1) parts.push_back("R^" + std::to_string(h.free_rank));
    for (const LaurentQ& d : h.torsion) parts.push_back("R/(" + to_string(d) + ")");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

inline std::string module_str(const HomologyModule<Rational>& h) {
    if (h.free_rank == 0) return "0";
    if (h.free_rank == 1) return "Q";
    return "Q^" + std::to_string(h.free_rank);
}

}  // namespace salvetti
