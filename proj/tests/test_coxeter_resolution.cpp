#include <map>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <salvetti/flag_complex.hpp>
#include <salvetti/parse.hpp>

#include "oracles.hpp"

using namespace salvetti;

static oracle::ZModule to_oracle(const HomologyModule<BigInt>& h) {
    oracle::ZModule z;
    z.free_rank = h.free_rank;
    for (const BigInt& t : h.torsion) z.torsion.push_back(t.convert_to<long long>());
    return z;
}

TEST_CASE("flag enumeration") {
    CoxeterMatrix a1 = parse_coxeter_spec("A1");
    for (int k = 1; k <= 6; ++k) {
        auto flags = enumerate_flags(a1, k);
        REQUIRE(flags.size() == 1);
        REQUIRE(flags[0].depth() == k);  // the tower ({s} >= ... >= {s})
    }

    CoxeterMatrix a2 = parse_coxeter_spec("A2");
    auto deg2 = enumerate_flags(a2, 2);
    REQUIRE(deg2.size() == 3);
    REQUIRE(deg2[0].parts == std::vector<GeneratorSubset>({GeneratorSubset({0}), GeneratorSubset({0})}));
    REQUIRE(deg2[1].parts == std::vector<GeneratorSubset>({GeneratorSubset({0, 1})}));
    REQUIRE(deg2[2].parts == std::vector<GeneratorSubset>({GeneratorSubset({1}), GeneratorSubset({1})}));

    REQUIRE(enumerate_flags(a2, 0).size() == 1);
    REQUIRE(enumerate_flags(a2, 0)[0].parts.empty());
}

TEST_CASE("flag counts match the binomial formula") {
    for (const char* name : {"A1", "A2", "B2", "I2(5)", "A3", "B3", "H3"}) {
        CAPTURE(name);
        CoxeterMatrix m = parse_coxeter_spec(name);
        long n = m.rank();
        for (int k = 0; k <= 7; ++k)
            REQUIRE(BigInt(enumerate_flags(m, k).size()) == binomial(n + k - 1, k));
    }
}

TEST_CASE("depth truncation") {
    CoxeterMatrix a2 = parse_coxeter_spec("A2");
    auto full = enumerate_flags(a2, 3);
    auto shallow = enumerate_flags(a2, 3, 2);
    REQUIRE(shallow.size() < full.size());
    for (const Flag& f : shallow) REQUIRE(f.depth() <= 2);
    std::set<Flag> all(full.begin(), full.end());
    for (const Flag& f : shallow) REQUIRE(all.count(f) == 1);
    // towers of depth k are the only flags excluded at depth 2, degree 3
    REQUIRE(full.size() - shallow.size() == 2);
}

TEST_CASE("position weight inside a subset") {
    GeneratorSubset g({0, 1, 2});
    REQUIRE(position_weight(g, 0) == 1);
    REQUIRE(position_weight(g, 2) == 3);
    REQUIRE(position_weight(GeneratorSubset({1, 4}), 4) == 2);
    REQUIRE_THROWS_AS(position_weight(g, 5), ValidationError);
}

TEST_CASE("conjugation inversions") {
    TableCache cache(parse_coxeter_spec("A2"));
    const GroupTable& t = cache.table(GeneratorSubset::full(2));
    REQUIRE(conjugation_inversions(t, 0, GeneratorSubset::full(2)) == 0);
    REQUIRE(conjugation_inversions(t, 0, GeneratorSubset({0})) == 0);
    // the longest element of A2 swaps the two generators
    int w0 = t.longest_element();
    REQUIRE(conjugate_subset(t, w0, GeneratorSubset({0})) == GeneratorSubset({1}));
    REQUIRE(conjugation_inversions(t, w0, GeneratorSubset::full(2)) == 1);
}

TEST_CASE("boundary sign exponent") {
    TableCache cache(parse_coxeter_spec("A1"));
    const GroupTable& t = cache.table(GeneratorSubset({0}));

    Flag single{{GeneratorSubset({0})}};
    REQUIRE(boundary_exponent(t, single, 1, 0, 0) == 1);  // mu only

    Flag tower{{GeneratorSubset({0}), GeneratorSubset({0})}};
    REQUIRE(boundary_exponent(t, tower, 2, 0, 0) == 2);  // |G1| + mu

    // parity flips with the length of beta
    int s = t.generator_element(0);
    REQUIRE((boundary_exponent(t, single, 1, 0, s) - boundary_exponent(t, single, 1, 0, 0)) % 2 !=
            0);
}

TEST_CASE("boundary sign exponent flips parity on an inverted tail part") {
    TableCache cache(parse_coxeter_spec("A2"));
    const GroupTable& t = cache.table(GeneratorSubset::full(2));
    int w0 = t.longest_element();  // conjugation by w0 swaps the two generators
    Flag flat{{GeneratorSubset::full(2)}};
    Flag tailed{{GeneratorSubset::full(2), GeneratorSubset::full(2)}};
    long a = boundary_exponent(t, flat, 1, 0, w0);
    long b = boundary_exponent(t, tailed, 1, 0, w0);
    REQUIRE(b - a == conjugation_inversions(t, w0, GeneratorSubset::full(2)));
    REQUIRE((b - a) % 2 != 0);
}

TEST_CASE("flag boundary reproduces the mod-2 periodic resolution") {
    TableCache cache(parse_coxeter_spec("A1"));
    const GroupTable& t = cache.table(GeneratorSubset({0}));
    int s = t.generator_element(0);

    Flag single{{GeneratorSubset({0})}};
    auto d1 = flag_boundary(cache, single);
    REQUIRE(d1.size() == 1);
    REQUIRE(d1[0].first.parts.empty());
    REQUIRE(d1[0].second.terms().at(0) == -1);
    REQUIRE(d1[0].second.terms().at(s) == 1);  // -(1 - s)

    Flag tower{{GeneratorSubset({0}), GeneratorSubset({0})}};
    auto d2 = flag_boundary(cache, tower);
    REQUIRE(d2.size() == 1);
    REQUIRE(d2[0].first == single);
    REQUIRE(d2[0].second.terms().at(0) == 1);
    REQUIRE(d2[0].second.terms().at(s) == 1);  // 1 + s
}

TEST_CASE("flag boundary squares to zero") {
    for (const char* name : {"A2", "B2", "A3", "~A1"}) {
        CAPTURE(name);
        TableCache cache(parse_coxeter_spec(name));
        REQUIRE(flag_boundary_squares_to_zero(cache, 6));
    }
}

TEST_CASE("truncated complexes restrict consistently") {
    TableCache cache(parse_coxeter_spec("A2"));
    for (int d = 1; d <= 3; ++d) {
        ChainComplex<BigInt> small = build_flag_complex_augmented(cache, 4, d);
        ChainComplex<BigInt> large = build_flag_complex_augmented(cache, 4, d + 1);
        for (int k = 1; k <= 4; ++k) {
            auto small_flags = enumerate_flags(cache.matrix(), k, d);
            auto large_flags = enumerate_flags(cache.matrix(), k, d + 1);
            auto small_rows = enumerate_flags(cache.matrix(), k - 1, d);
            auto large_rows = enumerate_flags(cache.matrix(), k - 1, d + 1);
            std::map<Flag, int> col_of, row_of;
            for (size_t i = 0; i < large_flags.size(); ++i) col_of[large_flags[i]] = static_cast<int>(i);
            for (size_t i = 0; i < large_rows.size(); ++i) row_of[large_rows[i]] = static_cast<int>(i);
            for (size_t j = 0; j < small_flags.size(); ++j) {
                if (small_flags[j].depth() > d - 1) continue;  // boundary may leave the truncation
                for (size_t i = 0; i < small_rows.size(); ++i)
                    REQUIRE(small.boundary(k).at(static_cast<int>(i), static_cast<int>(j)) ==
                            large.boundary(k).at(row_of.at(small_rows[i]),
                                                 col_of.at(small_flags[j])));
            }
        }
    }
}

TEST_CASE("coxeter homology of the two-element group") {
    TableCache cache(parse_coxeter_spec("A1"));
    auto h = homology_coxeter(cache, 7);
    auto expected = oracle::z2_homology(6);
    REQUIRE(h.size() == 7);
    for (size_t k = 0; k < h.size(); ++k) {
        CAPTURE(k);
        REQUIRE(to_oracle(h[k]) == expected[k]);
    }
}

TEST_CASE("coxeter homology of S3 matches the bar resolution") {
    TableCache cache(parse_coxeter_spec("A2"));
    auto h = homology_coxeter(cache, 4);
    auto bar = oracle::bar_homology_s3(3);
    REQUIRE(h.size() == 4);
    for (size_t k = 0; k < h.size(); ++k) {
        CAPTURE(k);
        REQUIRE(to_oracle(h[k]) == bar[k]);
    }
}

TEST_CASE("coxeter homology of the infinite dihedral group") {
    TableCache cache(parse_coxeter_spec("~A1"));
    auto h = homology_coxeter(cache, 5);
    auto expected = oracle::free_product_z2_z2_homology(4);
    REQUIRE(h.size() == 5);
    for (size_t k = 0; k < h.size(); ++k) {
        CAPTURE(k);
        REQUIRE(to_oracle(h[k]) == expected[k]);
    }
}

TEST_CASE("threaded flag assembly matches serial") {
    TableCache cache(parse_coxeter_spec("B2"));
    ChainComplex<BigInt> serial = build_flag_complex_augmented(cache, 5, -1, 1);
    ChainComplex<BigInt> parallel = build_flag_complex_augmented(cache, 5, -1, 4);
    for (int k = 1; k <= 5; ++k) REQUIRE(serial.boundary(k) == parallel.boundary(k));
}

// exactness of the resolution itself, checked over Q through the regular
// representation: each Z[W]-boundary becomes a |W|n_k x |W|n_{k-1} rational
// matrix and consecutive ranks must fill each chain group
TEST_CASE("resolution is exact at small scale") {
    for (const char* name : {"A1", "A2"}) {
        CAPTURE(name);
        TableCache cache(parse_coxeter_spec(name));
        const CoxeterMatrix& m = cache.matrix();
        const GroupTable& t = cache.table(GeneratorSubset::full(m.rank()));
        const int order = static_cast<int>(t.size());
        const int kmax = 5;

        std::vector<std::vector<Flag>> flags;
        for (int k = 0; k <= kmax; ++k) flags.push_back(enumerate_flags(m, k));

        auto regular = [&](const GroupRingElement& c, Matrix<Rational>& into, int bi, int bj) {
            // a left-module map x e(G) -> (x c) e(G') acts on the w-basis by
            // right multiplication: e_w -> e_{w g}
            for (const auto& [g, coeff] : c.terms())
                for (int w = 0; w < order; ++w)
                    into.at(bi + t.mult(w, g), bj + w) += Rational(coeff);
        };

        std::vector<Matrix<Rational>> mats;
        for (int k = 1; k <= kmax; ++k) {
            std::map<Flag, int> row_of;
            for (size_t i = 0; i < flags[static_cast<size_t>(k) - 1].size(); ++i)
                row_of[flags[static_cast<size_t>(k) - 1][i]] = static_cast<int>(i);
            Matrix<Rational> d(order * static_cast<int>(flags[static_cast<size_t>(k) - 1].size()),
                               order * static_cast<int>(flags[static_cast<size_t>(k)].size()));
            for (size_t j = 0; j < flags[static_cast<size_t>(k)].size(); ++j)
                for (auto& [g, coeff] : flag_boundary(cache, flags[static_cast<size_t>(k)][j]))
                    regular(coeff.embedded_in(t), d, order * row_of.at(g),
                            order * static_cast<int>(j));
            mats.push_back(std::move(d));
        }

        std::vector<int> rank;
        for (const auto& d : mats) rank.push_back(matrix_rank<RationalFieldOps>(d));
        // augmented complex: C_0 = Z[W] surjects onto Z, so rank d_1 = |W| - 1
        REQUIRE(rank[0] == order - 1);
        for (int k = 1; k + 1 <= kmax; ++k)
            REQUIRE(rank[static_cast<size_t>(k) - 1] + rank[static_cast<size_t>(k)] ==
                    order * static_cast<int>(flags[static_cast<size_t>(k)].size()));
    }
}
