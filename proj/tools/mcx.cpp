// Command-line front end: generate graph families, build Morse complexes,
// compute integral homology, and run the theorem verification suites.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcx/facets_io.hpp"
#include "mcx/verification.hpp"

namespace {

using nlohmann::ordered_json;

mcx::StarVariant parse_star(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw mcx::parse_error("expected LEAVES,ARMS but got '" + text + "'");
    try {
        mcx::StarVariant sv;
        sv.leaves = std::stoi(text.substr(0, comma));
        sv.arms = std::stoi(text.substr(comma + 1));
        return sv;
    } catch (const std::exception&) {
        throw mcx::parse_error("expected LEAVES,ARMS but got '" + text + "'");
    }
}

void emit_complex(const mcx::SimplicialComplex& K, const std::string& out_path) {
    if (out_path.empty())
        mcx::write_facets(std::cout, K);
    else
        mcx::write_facets_file(out_path, K);
}

long long to_ll(const mcx::Int& v) { return v.convert_to<long long>(); }

ordered_json homology_json(const std::string& name, const mcx::SimplicialComplex& K,
                           const mcx::HomologyProfile& h) {
    ordered_json torsion = ordered_json::array();
    for (int p = 0; p <= K.dim(); ++p) {
        ordered_json row = ordered_json::array();
        if (p < static_cast<int>(h.torsion.size()))
            for (const auto& t : h.torsion[static_cast<std::size_t>(p)]) row.push_back(to_ll(t));
        torsion.push_back(std::move(row));
    }
    ordered_json betti = ordered_json::array();
    for (auto b : h.betti) betti.push_back(b);
    return ordered_json{{"complex", name},
                        {"dims", K.dim()},
                        {"reduced_betti", std::move(betti)},
                        {"torsion", std::move(torsion)},
                        {"euler", h.euler}};
}

ordered_json row_json(const mcx::VerificationRow& r) {
    return ordered_json{{"theorem", r.theorem},   {"instance", r.instance},
                        {"predicted", r.predicted}, {"computed", r.computed},
                        {"detail", r.detail},     {"status", r.status}};
}

void print_rows(const std::vector<mcx::VerificationRow>& rows, bool as_json) {
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : rows) {
        std::cout << "[" << r.status << "] " << r.theorem << " " << r.instance
                  << ": predicted " << r.predicted << ", computed " << r.computed;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
    }
    std::size_t bad = 0;
    for (const auto& r : rows)
        if (!r.passed()) ++bad;
    std::cout << rows.size() << " row(s), " << (rows.size() - bad) << " pass/degenerate, " << bad
              << " fail\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse complexes of graphs: construction, homology, verification"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a graph family as a .facets file");
    std::string gen_family, gen_left = "0,0", gen_right = "0,0", gen_out;
    int gen_len = 1, gen_m = 0, gen_n = 1, gen_t = 0;
    gen->add_option("--family", gen_family, "path | ext-star | p-wedge")->required();
    gen->add_option("--len", gen_len, "path: edge count");
    gen->add_option("--m", gen_m, "ext-star: leaf count");
    gen->add_option("--n", gen_n, "ext-star: arm count");
    gen->add_option("--t", gen_t, "p-wedge: path edge count");
    gen->add_option("--left", gen_left, "p-wedge: LEAVES,ARMS of the left star");
    gen->add_option("--right", gen_right, "p-wedge: LEAVES,ARMS of the right star");
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    // morse
    auto* mor = app.add_subcommand("morse", "Build the Morse complex of a graph");
    std::string mor_in, mor_out;
    mcx::MorseComplexOptions mopts;
    mor->add_option("--in", mor_in, "input .facets file")->required();
    mor->add_option("--out", mor_out, "output .facets file")->required();
    mor->add_option("--cap", mopts.vertex_cap, "largest allowed number of primitive pairs");
    mor->add_option("--budget", mopts.simplex_budget, "largest allowed number of simplices");

    // homology
    auto* hom = app.add_subcommand("homology", "Reduced integral homology of a complex");
    std::string hom_in;
    bool hom_json = false;
    hom->add_option("--in", hom_in, "input .facets file")->required();
    hom->add_flag("--json", hom_json, "emit the JSON report");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a theorem verification suite");
    std::string ver_theorem;
    bool ver_json = false;
    int ver_maxlen = 7, ver_t = 0, ver_n = 0, ver_l = 0;
    unsigned long long ver_seed = 1;
    ver->add_option("--theorem", ver_theorem,
                    "kozlov | s0n | s1n | main | s1s1 | s1s0 | suspension | join | strong-collapse")
        ->required();
    ver->add_option("--max-len", ver_maxlen, "kozlov: largest path length");
    ver->add_option("--t", ver_t, "path edge count");
    ver->add_option("--n", ver_n, "left arm count");
    ver->add_option("--l", ver_l, "right arm count");
    ver->add_option("--seed", ver_seed, "seed for the greedy matching restarts");
    ver->add_option("--cap", mopts.vertex_cap, "largest allowed number of primitive pairs");
    ver->add_option("--budget", mopts.simplex_budget, "largest allowed number of simplices");
    ver->add_flag("--json", ver_json, "emit rows as JSON");

    // core
    auto* cor = app.add_subcommand("core", "Strong collapse a complex to its core");
    std::string cor_in;
    cor->add_option("--in", cor_in, "input .facets file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            mcx::SimplicialComplex K;
            if (gen_family == "path") {
                K = mcx::path(gen_len);
            } else if (gen_family == "ext-star") {
                K = mcx::extended_star(gen_m, gen_n);
            } else if (gen_family == "p-wedge") {
                K = mcx::p_wedge(gen_t, parse_star(gen_left), parse_star(gen_right));
            } else {
                throw mcx::parse_error("unknown family: " + gen_family);
            }
            emit_complex(K, gen_out);
            return 0;
        }

        if (mor->parsed()) {
            mcx::SimplicialComplex K = mcx::read_facets_file(mor_in);
            mcx::SimplicialComplex M = mcx::morse_complex(K, mopts);
            emit_complex(M, mor_out);
            std::cout << "simplices by dimension:";
            for (int p = 0; p <= M.dim(); ++p) std::cout << " " << M.count(p);
            std::cout << " (total " << M.simplex_count() << ")\n";
            return 0;
        }

        if (hom->parsed()) {
            mcx::SimplicialComplex K = mcx::read_facets_file(hom_in);
            mcx::HomologyProfile h = mcx::reduced_homology(K);
            std::string name = std::filesystem::path(hom_in).stem().string();
            if (hom_json) {
                std::cout << homology_json(name, K, h).dump(2) << "\n";
            } else {
                std::cout << name << ": dim " << K.dim() << "\n";
                for (int p = 0; p <= K.dim(); ++p) {
                    std::cout << "  b~" << p << " = " << h.betti_at(p);
                    if (p < static_cast<int>(h.torsion.size()) &&
                        !h.torsion[static_cast<std::size_t>(p)].empty()) {
                        std::cout << "  torsion:";
                        for (const auto& t : h.torsion[static_cast<std::size_t>(p)])
                            std::cout << " " << t.str();
                    }
                    std::cout << "\n";
                }
                std::cout << "  euler = " << h.euler << "\n";
            }
            return 0;
        }

        if (ver->parsed()) {
            std::vector<mcx::VerificationRow> rows;
            mcx::GreedyOptions gopts;
            gopts.seed = ver_seed;
            bool has_tnl = ver->count("--t") && ver->count("--n") && ver->count("--l");
            if (ver_theorem == "kozlov") {
                rows = mcx::run_kozlov(ver_maxlen, mopts);
            } else if (ver_theorem == "s0n") {
                rows = ver->count("--n") ? mcx::run_s0n({ver_n}, mopts, gopts)
                                         : mcx::run_s0n({1, 2, 3}, mopts, gopts);
            } else if (ver_theorem == "s1n") {
                rows = ver->count("--n") ? mcx::run_s1n({ver_n}, mopts)
                                         : mcx::run_s1n({1, 2, 3}, mopts);
            } else if (ver_theorem == "main") {
                rows = has_tnl ? mcx::run_main({{ver_t, ver_n, ver_l}}, mopts, gopts)
                               : mcx::run_main({{0, 2, 2}, {3, 2, 2}, {1, 2, 2}, {2, 2, 2},
                                                {2, 2, 3}, {2, 1, 1}},
                                               mopts, gopts);
            } else if (ver_theorem == "s1s1") {
                rows = has_tnl ? mcx::run_s1s1({{ver_t, ver_n, ver_l}}, mopts)
                               : mcx::run_s1s1({{3, 1, 1}, {1, 1, 1}, {2, 1, 1}}, mopts);
            } else if (ver_theorem == "s1s0") {
                rows = has_tnl ? mcx::run_s1s0({{ver_t, ver_n, ver_l}}, mopts)
                               : mcx::run_s1s0({{3, 1, 1}, {1, 1, 2}, {2, 1, 2}}, mopts);
            } else if (ver_theorem == "suspension") {
                rows = mcx::run_suspension(mopts);
            } else if (ver_theorem == "join") {
                rows = mcx::run_join(mopts);
            } else if (ver_theorem == "strong-collapse") {
                rows = mcx::run_strong_collapse({{2, 1}, {2, 2}}, mopts);
            } else {
                throw mcx::parse_error("unknown theorem: " + ver_theorem);
            }
            print_rows(rows, ver_json);
            for (const auto& r : rows)
                if (!r.passed()) return 1;
            return 0;
        }

        if (cor->parsed()) {
            mcx::SimplicialComplex K = mcx::read_facets_file(cor_in);
            mcx::CollapseResult cr = mcx::strong_collapse_core(K);
            for (const auto& step : cr.steps)
                std::cout << "delete " << step.witness.dominated << "  (dominated by "
                          << step.witness.dominator << ")\n";
            std::cout << "core facets:\n";
            for (const auto& f : cr.core.facets()) std::cout << "  " << cr.core.render(f) << "\n";
            if (cr.core.vertex_count() == 1 && cr.core.simplex_count() == 1)
                std::cout << "strongly collapsible\n";
            else
                std::cout << "core has " << cr.core.vertex_count() << " vertices, "
                          << cr.core.simplex_count() << " simplices\n";
            return 0;
        }
    } catch (const mcx::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mcx::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mcx::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
