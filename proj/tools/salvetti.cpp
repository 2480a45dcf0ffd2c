// Command-line front end: parse a Coxeter system, dispatch computations,
// emit aligned text, JSON or CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <salvetti/json_export.hpp>
#include <salvetti/salvetti.hpp>

using namespace salvetti;

namespace {

struct Options {
    std::string format = "text";
    std::string output;
    int threads = 1;
    long budget = kDefaultBudget;
    bool verify = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw ComputationError("cannot open output file " + opt.output);
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

GeneratorSubset parse_subset(const std::string& arg, int rank) {
    if (arg.empty()) return GeneratorSubset::full(rank);
    std::vector<int> members;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            size_t pos = 0;
            v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw ParseError("");
        } catch (...) {
            throw ParseError("bad subset entry '" + tok + "'");
        }
        if (v < 1 || v > rank) throw ParseError("subset index out of range: " + tok);
        members.push_back(v - 1);
    }
    return GeneratorSubset(std::move(members));
}

std::string classification_str(const CoxeterMatrix& m, const GeneratorSubset& J) {
    auto labels = classify_finite(m, J);
    if (!labels) return "not finite-type";
    if (labels->empty()) return "trivial";
    std::string out;
    for (size_t i = 0; i < labels->size(); ++i) {
        if (i) out += " x ";
        out += (*labels)[i].name();
    }
    return out;
}

// factorized Poincare polynomial: type-A components as [k]!, otherwise the
// degree product
std::string poincare_factored(const std::vector<TypeLabel>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out += " ";
        if (labels[i].family == TypeLabel::Family::A) {
            out += "[" + std::to_string(labels[i].rank + 1) + "]!";
        } else {
            for (int d : labels[i].degrees()) out += "[" + std::to_string(d) + "]";
        }
    }
    return out.empty() ? "1" : out;
}

std::string word_str(const std::vector<int>& word, const std::vector<std::string>& names) {
    if (word.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += names[static_cast<size_t>(word[i])];
    }
    return out;
}

int run_classify(const Options& opt, const CoxeterMatrix& m, const std::string& subset) {
    GeneratorSubset J = parse_subset(subset, m.rank());
    auto comps = components(m, J);
    auto paras = finite_parabolics(m);
    if (opt.format == "json") {
        ordered_json j;
        j["rank"] = m.rank();
        j["subset"] = one_based(J);
        ordered_json cj = ordered_json::array();
        for (const auto& c : comps) {
            ordered_json e;
            e["members"] = one_based(c);
            e["type"] = classification_str(m, c);
            cj.push_back(e);
        }
        j["components"] = cj;
        j["classification"] = classification_str(m, J);
        auto labels = classify_finite(m, J);
        if (labels) j["order"] = finite_order(*labels).str();
        ordered_json pj = ordered_json::array();
        for (const auto& p : paras) pj.push_back(one_based(p));
        j["finite_parabolics"] = pj;
        emit(opt, dump(j));
        return 0;
    }
    std::ostringstream out;
    out << "subset " << J.label() << ": " << classification_str(m, J) << "\n";
    auto labels = classify_finite(m, J);
    if (labels) out << "order: " << finite_order(*labels).str() << "\n";
    out << "components:\n";
    for (const auto& c : comps)
        out << "  " << c.label() << "  " << classification_str(m, c) << "\n";
    std::vector<long> by_size(static_cast<size_t>(m.rank()) + 1, 0);
    for (const auto& p : paras) ++by_size[static_cast<size_t>(p.size())];
    out << "finite parabolic subsets: " << paras.size() << " (by size:";
    for (long c : by_size) out << " " << c;
    out << ")\n";
    emit(opt, out.str());
    return 0;
}

int run_presentation(const Options& opt, const CoxeterMatrix& m) {
    ArtinPresentation p = artin_presentation(m);
    if (opt.format == "json") {
        emit(opt, dump(json_presentation(p)));
        return 0;
    }
    std::ostringstream out;
    out << "generators:";
    for (const auto& g : p.generators) out << " " << g;
    out << "\n";
    if (p.relations.empty()) {
        out << "relations: none\n";
    } else {
        out << "relations:\n";
        for (const auto& r : p.relations)
            out << "  " << word_str(r.lhs, p.generators) << " = " << word_str(r.rhs, p.generators)
                << "\n";
    }
    emit(opt, out.str());
    return 0;
}

int run_enumerate(const Options& opt, TableCache& cache, const std::string& subset) {
    GeneratorSubset J = parse_subset(subset, cache.matrix().rank());
    const GroupTable& t = cache.table(J);
    LaurentQ poly = poincare_poly(t);
    if (opt.format == "json") {
        ordered_json j;
        j["subset"] = one_based(J);
        j["order"] = t.size();
        j["max_length"] = t.max_length();
        j["length_polynomial"] = to_string(poly);
        j["longest_element"] = one_based(t.reduced_word(t.longest_element()));
        emit(opt, dump(j));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "length,count\n";
        for (long e = 0; e <= poly.highest_exponent(); ++e)
            out << e << "," << poly.coeff(e) << "\n";
        emit(opt, out.str());
        return 0;
    }
    std::ostringstream out;
    out << "subset " << J.label() << "\n";
    out << "order: " << t.size() << "\n";
    out << "length polynomial: " << to_string(poly) << "\n";
    std::vector<std::string> names;
    for (int s = 0; s < cache.matrix().rank(); ++s) names.push_back("s" + std::to_string(s + 1));
    out << "longest element: " << word_str(t.reduced_word(t.longest_element()), names) << " (length "
        << t.max_length() << ")\n";
    emit(opt, out.str());
    return 0;
}

int run_poincare(const Options& opt, TableCache& cache, const std::string& subset) {
    GeneratorSubset J = parse_subset(subset, cache.matrix().rank());
    auto labels = classify_finite(cache.matrix(), J);
    if (!labels)
        throw ComputationError("subset " + J.label() + " is not finite-type: Poincare series is not a polynomial");
    LaurentQ closed = poincare_poly_closed_form(*labels);
    if (opt.format == "json") {
        ordered_json j;
        j["subset"] = one_based(J);
        j["factored"] = poincare_factored(*labels);
        j["polynomial"] = to_string(closed);
        j["order"] = finite_order(*labels).str();
        emit(opt, dump(j));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "exponent,coefficient\n";
        for (long e = 0; e <= closed.highest_exponent(); ++e)
            out << e << "," << closed.coeff(e) << "\n";
        emit(opt, out.str());
        return 0;
    }
    std::ostringstream out;
    out << "W_J(q) = " << poincare_factored(*labels) << "\n";
    out << "       = " << to_string(closed) << "\n";
    out << "order:   " << finite_order(*labels).str() << "\n";
    emit(opt, out.str());
    return 0;
}

int run_cells(const Options& opt, TableCache& cache) {
    FacePoset p = face_poset_Q(cache);
    if (opt.format == "json") {
        emit(opt, dump(json_face_poset(p)));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "dimension,count\n";
        for (const auto& [d, c] : p.cells_by_dim()) out << d << "," << c << "\n";
        emit(opt, out.str());
        return 0;
    }
    std::ostringstream out;
    out << "cells of Q by dimension:\n";
    for (const auto& [d, c] : p.cells_by_dim()) out << "  dim " << d << ": " << c << "\n";
    out << "orbit classes:\n";
    for (const auto& [g, c] : p.orbit_sizes())
        out << "  " << g.label() << ": " << c << " cells\n";
    std::map<int, long> quot;
    for (const auto& g : p.quotient_cells) ++quot[g.size()];
    out << "cells of the quotient complex by dimension:\n";
    for (const auto& [d, c] : quot) out << "  dim " << d << ": " << c << "\n";
    out << "euler characteristic: " << euler_characteristic(cache.matrix()) << "\n";
    emit(opt, out.str());
    return 0;
}

int run_artin_homology(const Options& opt, TableCache& cache, const std::string& coeff,
                       const std::string& qval) {
    if (opt.verify) {
        if (!artin_boundary_squares_to_zero_q(cache))
            throw ComputationError("verification failed: d∘d != 0 over Q[q^±1]");
        if (!artin_boundary_squares_to_zero_group_ring(cache))
            throw ComputationError("verification failed: d∘d != 0 over Z[W]");
    }
    if (coeff == "laurent") {
        auto h = homology_artin_q(cache, opt.threads);
        if (opt.format == "json") {
            emit(opt, dump(json_homology_q(h)));
            return 0;
        }
        if (opt.format == "csv") {
            std::ostringstream out;
            out << "degree,free_rank,invariant_factors\n";
            for (const auto& x : h) {
                out << x.degree << "," << x.free_rank << ",";
                for (size_t i = 0; i < x.torsion.size(); ++i)
                    out << (i ? ";" : "") << to_string(x.torsion[i]);
                out << "\n";
            }
            emit(opt, out.str());
            return 0;
        }
        std::ostringstream out;
        out << "homology with coefficients in Q[q^±1] (g -> -q):\n";
        for (const auto& x : h) out << "  H_" << x.degree << " = " << module_str(x) << "\n";
        emit(opt, out.str());
        return 0;
    }
    if (coeff != "rational") throw ParseError("--coeff must be laurent or rational");
    Rational q0(-1);
    if (!qval.empty()) q0 = Rational(qval);
    auto C = specialize(build_complex_q(cache, opt.threads), q0);
    auto h = homology<RationalFieldOps>(C);
    if (opt.format == "json") {
        ordered_json j;
        j["q"] = q0.str();
        ordered_json arr = ordered_json::array();
        for (const auto& x : h) {
            ordered_json e;
            e["degree"] = x.degree;
            e["betti"] = x.free_rank;
            arr.push_back(e);
        }
        j["homology"] = arr;
        emit(opt, dump(j));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "degree,betti\n";
        for (const auto& x : h) out << x.degree << "," << x.free_rank << "\n";
        emit(opt, out.str());
        return 0;
    }
    std::ostringstream out;
    out << "rational homology at q = " << q0.str() << ":\n";
    for (const auto& x : h) out << "  H_" << x.degree << " = " << module_str(x) << "\n";
    emit(opt, out.str());
    return 0;
}

int run_coxeter_homology(const Options& opt, TableCache& cache, int kmax, int depth,
                         bool allow_large) {
    if (cache.matrix().rank() > 4 && !allow_large)
        throw ParseError("rank > 4: flag bases grow combinatorially; pass --allow-large to proceed");
    if (opt.verify && !flag_boundary_squares_to_zero(cache, std::min(kmax, 6), depth))
        throw ComputationError("verification failed: d∘d != 0 in the resolution");
    auto h = homology_coxeter(cache, kmax, depth, opt.threads);
    if (opt.format == "json") {
        ordered_json j;
        j["k_max"] = kmax;
        j["depth"] = depth < 0 ? ordered_json(nullptr) : ordered_json(depth);
        j["homology"] = json_homology_z(h);
        emit(opt, dump(j));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "degree,free_rank,invariant_factors\n";
        for (const auto& x : h) {
            out << x.degree << "," << x.free_rank << ",";
            for (size_t i = 0; i < x.torsion.size(); ++i)
                out << (i ? ";" : "") << x.torsion[i].str();
            out << "\n";
        }
        emit(opt, out.str());
        return 0;
    }
    std::ostringstream out;
    out << "integral homology of W (degrees 0.." << (kmax - 1) << "):\n";
    for (const auto& x : h) out << "  H_" << x.degree << " = " << module_str(x) << "\n";
    emit(opt, out.str());
    return 0;
}

int run_export(const Options& opt, TableCache& cache, const std::string& what, int kmax,
               int depth) {
    ordered_json j;
    if (what == "artin-q") {
        j = json_complex_q(build_complex_q(cache, opt.threads));
    } else if (what == "artin-w") {
        j = json_artin_group_ring(cache);
    } else if (what == "coxeter") {
        j = json_complex_z(build_flag_complex_augmented(cache, kmax, depth, opt.threads));
    } else if (what == "poset") {
        j = json_face_poset(face_poset_Q(cache));
    } else {
        throw ParseError("--what must be one of artin-q, artin-w, coxeter, poset");
    }
    emit(opt, dump(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"salvetti: exact complexes and homology for Artin and Coxeter groups"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("SALVETTI_THREADS")) opt.threads = std::atoi(env);
    app.add_option("--format", opt.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", opt.output, "write output to a file instead of stdout");
    app.add_option("--threads", opt.threads, "worker threads for complex assembly");
    app.add_option("--budget", opt.budget, "element budget for group enumeration");
    app.add_flag("--verify", opt.verify, "run the d∘d = 0 suites before reporting");

    std::string system, subset, coeff = "laurent", qval, what = "artin-q";
    int kmax = 8, depth = -1;
    bool allow_large = false;

    auto add_system = [&](CLI::App* cmd) {
        cmd->fallthrough();  // global options may follow the subcommand
        cmd->add_option("system", system, "Coxeter system (name or explicit block)")->required();
    };
    CLI::App* classify = app.add_subcommand("classify", "classify a system or subset");
    add_system(classify);
    classify->add_option("--subset", subset, "comma-separated 1-based generator indices");

    CLI::App* present = app.add_subcommand("presentation", "Artin group presentation");
    add_system(present);

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate a finite parabolic");
    add_system(enumerate);
    enumerate->add_option("--subset", subset, "comma-separated 1-based generator indices");

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial of a parabolic");
    add_system(poincare);
    poincare->add_option("--subset", subset, "comma-separated 1-based generator indices");

    CLI::App* cells = app.add_subcommand("cells", "face poset of Q and quotient cell counts");
    add_system(cells);

    CLI::App* artin = app.add_subcommand("artin-homology", "homology of the Artin complex");
    add_system(artin);
    artin->add_option("--coeff", coeff, "coefficients: laurent or rational")
        ->check(CLI::IsMember({"laurent", "rational"}));
    artin->add_option("--q", qval, "rational value of q for --coeff rational (default -1)");

    CLI::App* coxeter = app.add_subcommand("coxeter-homology", "integral homology of W");
    add_system(coxeter);
    coxeter->add_option("--kmax", kmax, "build boundaries up to this degree (reports kmax-1)");
    coxeter->add_option("--depth", depth, "flag depth truncation (default unbounded)");
    coxeter->add_flag("--allow-large", allow_large, "lift the rank <= 4 guard");

    CLI::App* exp = app.add_subcommand("export", "export complexes or the face poset as JSON");
    add_system(exp);
    exp->add_option("--what", what, "artin-q, artin-w, coxeter or poset");
    exp->add_option("--kmax", kmax, "degree bound for the coxeter export");
    exp->add_option("--depth", depth, "flag depth truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CoxeterMatrix m = parse_coxeter_spec(system);
        TableCache cache(m, opt.budget);
        if (classify->parsed()) return run_classify(opt, m, subset);
        if (present->parsed()) return run_presentation(opt, m);
        if (enumerate->parsed()) return run_enumerate(opt, cache, subset);
        if (poincare->parsed()) return run_poincare(opt, cache, subset);
        if (cells->parsed()) return run_cells(opt, cache);
        if (artin->parsed()) return run_artin_homology(opt, cache, coeff, qval);
        if (coxeter->parsed()) return run_coxeter_homology(opt, cache, kmax, depth, allow_large);
        if (exp->parsed()) return run_export(opt, cache, what, kmax, depth);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
