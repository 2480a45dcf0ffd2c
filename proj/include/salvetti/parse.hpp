#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter_matrix.hpp"
#include "errors.hpp"

namespace salvetti {

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline CoxeterMatrix path_matrix(const std::vector<Bond>& bonds) {
    CoxeterMatrix m(static_cast<int>(bonds.size()) + 1);
    for (size_t i = 0; i < bonds.size(); ++i)
        m.set_label(static_cast<int>(i), static_cast<int>(i) + 1, bonds[i]);
    return m;
}

struct Edge {
    int a, b;
    Bond m;
};

inline CoxeterMatrix edge_matrix(int rank, const std::vector<Edge>& edges) {
    CoxeterMatrix m(rank);
    for (const Edge& e : edges) m.set_label(e.a, e.b, e.m);
    return m;
}

inline Bond b3() { return Bond::finite(3); }
inline Bond b4() { return Bond::finite(4); }

// Finite families.  Node numbering is the input order of S.
inline CoxeterMatrix finite_family(char family, int rank, int i2_bond, bool i2_infinite) {
    std::vector<Bond> bonds;
    switch (family) {
        case 'A':
            if (rank < 1) throw ParseError("type A requires rank >= 1");
            return path_matrix(std::vector<Bond>(rank - 1, b3()));
        case 'B':
        case 'C':
            if (rank < 2) throw ParseError("type B/C requires rank >= 2");
            bonds.assign(rank - 1, b3());
            bonds.back() = b4();
            return path_matrix(bonds);
        case 'D': {
            if (rank < 4) throw ParseError("type D requires rank >= 4");
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({rank - 3, rank - 1, b3()});
            return edge_matrix(rank, edges);
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw ParseError("type E requires rank 6, 7 or 8");
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({2, rank - 1, b3()});
            return edge_matrix(rank, edges);
        }
        case 'F':
            if (rank != 4) throw ParseError("type F requires rank 4");
            return path_matrix({b3(), b4(), b3()});
        case 'G':
            if (rank != 2) throw ParseError("type G requires rank 2");
            return path_matrix({Bond::finite(6)});
        case 'H':
            if (rank != 3 && rank != 4) throw ParseError("type H requires rank 3 or 4");
            bonds.assign(rank - 1, b3());
            bonds.front() = Bond::finite(5);
            return path_matrix(bonds);
        case 'I': {
            if (rank != 2) throw ParseError("dihedral type is written I2(m)");
            if (i2_infinite) return path_matrix({Bond::infinity()});
            if (i2_bond < 2) throw ParseError("I2(m) requires m >= 2");
            return path_matrix({Bond::finite(i2_bond)});
        }
        default:
            throw ParseError(std::string("unknown family '") + family + "'");
    }
}

// Affine families; ~Xn has n+1 generators.
inline CoxeterMatrix affine_family(char family, int rank) {
    std::vector<Edge> edges;
    switch (family) {
        case 'A':
            if (rank < 1) throw ParseError("type ~A requires rank >= 1");
            if (rank == 1) return path_matrix({Bond::infinity()});
            // cycle on rank+1 nodes
            for (int i = 0; i < rank; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({0, rank, b3()});
            return edge_matrix(rank + 1, edges);
        case 'B':
            if (rank == 2) return affine_family('C', 2);
            if (rank < 3) throw ParseError("type ~B requires rank >= 2");
            edges.push_back({0, 2, b3()});
            edges.push_back({1, 2, b3()});
            for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({rank - 1, rank, b4()});
            return edge_matrix(rank + 1, edges);
        case 'C': {
            if (rank < 2) throw ParseError("type ~C requires rank >= 2");
            std::vector<Bond> bonds(rank, b3());
            bonds.front() = b4();
            bonds.back() = b4();
            return path_matrix(bonds);
        }
        case 'D':
            if (rank < 4) throw ParseError("type ~D requires rank >= 4");
            edges.push_back({0, 2, b3()});
            edges.push_back({1, 2, b3()});
            for (int i = 2; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({rank - 2, rank - 1, b3()});
            edges.push_back({rank - 2, rank, b3()});
            return edge_matrix(rank + 1, edges);
        case 'E': {
            if (rank < 6 || rank > 8) throw ParseError("type ~E requires rank 6, 7 or 8");
            for (int i = 0; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1, b3()});
            edges.push_back({2, rank - 1, b3()});
            // extra node: on the short branch for ~E6, at the long end otherwise
            if (rank == 6) edges.push_back({5, 6, b3()});
            if (rank == 7) edges.push_back({0, 7, b3()});
            if (rank == 8) edges.push_back({6, 8, b3()});
            return edge_matrix(rank + 1, edges);
        }
        case 'F':
            if (rank != 4) throw ParseError("type ~F requires rank 4");
            return path_matrix({b3(), b3(), b4(), b3()});
        case 'G':
            if (rank != 2) throw ParseError("type ~G requires rank 2");
            return path_matrix({Bond::finite(6), b3()});
        default:
            throw ParseError(std::string("no affine family '~") + family + "'");
    }
}

inline CoxeterMatrix parse_named(const std::string& name) {
    std::string s = name;
    bool affine = false;
    if (!s.empty() && s[0] == '~') {
        affine = true;
        s = s.substr(1);
    }
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw ParseError("cannot parse system name '" + name + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::string rest = s.substr(1);

    // dihedral syntax I2(m) / I2(inf)
    int i2_bond = 0;
    bool i2_infinite = false;
    if (family == 'I') {
        if (affine) throw ParseError("no affine family ~I");
        if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
            throw ParseError("dihedral type is written I2(m), got '" + name + "'");
        std::string arg = rest.substr(2, rest.size() - 3);
        if (arg == "inf") {
            i2_infinite = true;
        } else {
            try {
                size_t pos = 0;
                i2_bond = std::stoi(arg, &pos);
                if (pos != arg.size()) throw ParseError("");
            } catch (...) {
                throw ParseError("bad dihedral bond '" + arg + "'");
            }
        }
        return finite_family('I', 2, i2_bond, i2_infinite);
    }

    int rank = 0;
    try {
        size_t pos = 0;
        rank = std::stoi(rest, &pos);
        if (pos != rest.size() || rest.empty()) throw ParseError("");
    } catch (...) {
        throw ParseError("cannot parse rank in '" + name + "'");
    }
    return affine ? affine_family(family, rank) : finite_family(family, rank, 0, false);
}

inline CoxeterMatrix parse_block(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ';') c = '\n';
    std::istringstream in(normalized);
    std::string line;
    int rank = -1;
    CoxeterMatrix m(0);
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "rank") {
            if (rank >= 0) throw ParseError("duplicate rank declaration");
            if (!(ls >> rank) || rank < 0) throw ParseError("bad rank in '" + line + "'");
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens in '" + line + "'");
            m = CoxeterMatrix(rank);
            seen.assign(static_cast<size_t>(rank) * rank, false);
        } else if (head == "m") {
            if (rank < 0) throw ParseError("entry before rank declaration");
            int i = 0, j = 0;
            std::string eq, lab;
            if (!(ls >> i >> j >> eq >> lab) || eq != "=")
                throw ParseError("bad entry line '" + line + "'");
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens in '" + line + "'");
            if (i < 1 || i > rank || j < 1 || j > rank)
                throw ParseError("index out of range in '" + line + "'");
            if (i == j) throw ParseError("diagonal labels are fixed to 1");
            Bond b = Bond::infinity();
            if (lab != "inf") {
                try {
                    size_t pos = 0;
                    int v = std::stoi(lab, &pos);
                    if (pos != lab.size()) throw ParseError("");
                    b = Bond::finite(v);
                } catch (ParseError&) {
                    throw ParseError("bad label '" + lab + "'");
                } catch (...) {
                    throw ParseError("bad label '" + lab + "'");
                }
            }
            size_t key = static_cast<size_t>(std::min(i, j) - 1) * rank + (std::max(i, j) - 1);
            if (seen[key]) throw ParseError("duplicate entry for pair " + std::to_string(i) +
                                            "," + std::to_string(j));
            seen[key] = true;
            m.set_label(i - 1, j - 1, b);
        } else {
            throw ParseError("unrecognized line '" + line + "'");
        }
    }
    if (rank < 0) throw ParseError("missing rank declaration");
    return m;
}

}  // namespace detail

// Parse a Coxeter system description: either a named family ("A3", "B4",
// "I2(7)", "~A2", ...) or an explicit block
//   rank <n>; m <i> <j> = <label>; ...
// with 1-based indices, label "inf" for infinity and unspecified pairs
// defaulting to 2 (commuting generators).
inline CoxeterMatrix parse_coxeter_spec(const std::string& text) {
    std::string s = detail::trim(text);
    if (s.empty()) throw ParseError("empty system description");
    if (s.rfind("rank", 0) == 0) return detail::parse_block(s);
    return detail::parse_named(s);
}

}  // namespace salvetti
