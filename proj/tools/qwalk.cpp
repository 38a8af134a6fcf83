// qwalk: construct discrete-time quantum walk operators on graphs, compute
// their spectra by the discriminant reduction and by direct eigendecomposition,
// verify the two agree, and simulate quantum search.
//
// Subcommands: grover | szegedy | sqw | search | verify
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qwalk/corpus.hpp>
#include <qwalk/report_json.hpp>
#include <qwalk/search.hpp>
#include <qwalk/spectra.hpp>
#include <qwalk/verification.hpp>

namespace {

using namespace qwalk;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;

double match_tolerance() {
    if (const char* env = std::getenv("QWALK_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end != env && tol > 0.0) return tol;
        throw ValidationError("QWALK_TOL is not a positive number");
    }
    return 1e-6;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write '" + out_path + "'");
        out << text;
    }
}

EdgeWeighting load_weighting(const BipartiteGraph& bg, const std::string& path) {
    const std::string text = read_file(path);
    EdgeWeighting w;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double p, q;
        if (ls >> p) {
            if (!(ls >> q)) throw ParseError("expected 'p q'", lineno);
            w.p.push_back(p);
            w.q.push_back(q);
        }
    }
    validate_weighting(bg, w);
    return w;
}

AmplitudeAssignment load_amplitudes(const BipartiteGraph& h, const std::string& path) {
    const std::string text = read_file(path);
    AmplitudeAssignment amps;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double ar, ai, br, bi;
        if (ls >> ar) {
            if (!(ls >> ai >> br >> bi))
                throw ParseError("expected 'a_re a_im b_re b_im'", lineno);
            amps.a.emplace_back(ar, ai);
            amps.b.emplace_back(br, bi);
        }
    }
    validate_amplitudes(h, amps);
    return amps;
}

// Shared tail of every spectrum subcommand: compare, serialize, pick the exit
// code from the match verdict.
int emit_comparison(Json j, const SpectrumReport& formula, const Matrix& op,
                    const std::string& out_path) {
    const double tol = match_tolerance();
    const SpectrumReport direct = direct_spectrum(op);
    j.update(spectrum_comparison_json(formula, direct, tol));
    const bool ok = j["match"]["ok"].get<bool>();
    write_output(j, out_path);
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_grover(const std::string& graph_path, bool support, const std::string& out_path) {
    const Multigraph g = parse_multigraph(read_file(graph_path));
    Json j;
    j["walk"] = "grover";
    j["graph"] = Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};

    const WalkOperator op = grover_matrix(g);
    if (!support) return emit_comparison(j, grover_spectrum(g), op.matrix, out_path);

    const int code = emit_comparison(j, grover_spectrum(g), op.matrix, "");

    // With --support: a second report for the positive support (regular only).
    Json sj;
    sj["walk"] = "grover-positive-support";
    const Matrix up = positive_support(op.matrix);
    const int scode = emit_comparison(sj, positive_support_spectrum(g), up, out_path);
    return std::max(code, scode);
}

int cmd_szegedy(const std::string& graph_path, const std::string& weights_path,
                const std::string& out_path) {
    const BipartiteGraph bg = parse_bipartite(read_file(graph_path));
    const EdgeWeighting w =
        weights_path.empty() ? uniform_weighting(bg) : load_weighting(bg, weights_path);
    Json j;
    j["walk"] = "szegedy";
    j["graph"] = Json{{"vertices", bg.graph().vertex_count()},
                      {"edges", bg.graph().edge_count()},
                      {"m", bg.m()},
                      {"n", bg.n()}};
    const SpectrumReport formula = szegedy_spectrum(bg, w);
    const auto iso = szegedy_isometries(bg, w);
    const Discriminant disc = bg.m() <= bg.n() ? discriminant_ap(iso.k, iso.l)
                                               : discriminant_aq(iso.k, iso.l);
    Json deig = Json::array();
    for (double lam : eig_hermitian(disc.matrix).values) deig.push_back(round_sig12(lam));
    j["discriminant"] = Json{{"side", bg.m() <= bg.n() ? "A_p" : "A_q"},
                             {"eigenvalues", std::move(deig)}};
    return emit_comparison(j, formula, szegedy_walk(iso.k, iso.l).matrix, out_path);
}

int cmd_sqw(const std::string& graph_path, const std::string& amps_path,
            const std::string& out_path) {
    const BipartiteGraph h = parse_bipartite(read_file(graph_path));
    const AmplitudeAssignment amps =
        amps_path.empty() ? uniform_amplitudes(h) : load_amplitudes(h, amps_path);
    const Multigraph walked = line_graph(h.graph());
    Json j;
    j["walk"] = "sqw";
    j["root_graph"] = Json{{"vertices", h.graph().vertex_count()},
                           {"edges", h.graph().edge_count()}};
    j["walked_graph"] = Json{{"vertices", walked.vertex_count()}, {"edges", walked.edge_count()}};
    const SqwOperators ops = sqw_operators(h, amps);
    return emit_comparison(j, sqw_spectrum(h, amps), ops.walk.matrix, out_path);
}

int cmd_search(const std::string& graph_path, const std::vector<std::size_t>& marked,
               const std::string& weights_path, std::size_t hitting_cap,
               const std::string& trajectory_path, const std::string& out_path) {
    const Multigraph g = parse_multigraph(read_file(graph_path));
    const BipartiteGraph dup = duplication(g);
    const EdgeWeighting w =
        weights_path.empty() ? uniform_weighting(dup) : load_weighting(dup, weights_path);
    const SearchInstance si(g, w, marked);

    Json j;
    j["walk"] = "search";
    j["graph"] = Json{{"vertices", si.n()}, {"edges", si.eps()}};
    Json marked_json = Json::array();
    for (std::size_t v : si.marked()) marked_json.push_back(v);
    j["marked"] = std::move(marked_json);
    j["edge_space"] = Json{{"size", si.edge_space_size()},
                           {"r", si.r()},
                           {"s", si.s()},
                           {"eps_prime", si.eps_prime()},
                           {"f2", si.f2_count()}};

    const SearchOperators ops = search_operators(si);
    Json deig = Json::array();
    for (double lam : eig_hermitian(ops.ahat_p.matrix).values) deig.push_back(round_sig12(lam));
    j["discriminant"] = Json{{"side", "A'_p"}, {"eigenvalues", std::move(deig)}};

    if (const auto pi = detailed_balance(si)) {
        Json pj = Json::array();
        for (double x : *pi) pj.push_back(round_sig12(x));
        j["detailed_balance"] = Json{{"holds", true}, {"pi", std::move(pj)}};
    } else {
        j["detailed_balance"] = Json{{"holds", false}};
    }

    const std::size_t cap = hitting_cap > 0 ? hitting_cap : default_hitting_cap(si);
    const HittingReport hit = quantum_hitting_time(si, cap);
    j["hitting"] = hitting_report_to_json(hit);

    if (!trajectory_path.empty()) {
        std::ofstream csv(trajectory_path, std::ios::binary);
        if (!csv) throw ValidationError("cannot write '" + trajectory_path + "'");
        csv << "T,F\n";
        for (std::size_t t = 0; t < hit.f_values.size(); ++t)
            csv << t << "," << round_sig12(hit.f_values[t]) << "\n";
    }
    return emit_comparison(j, search_spectrum(si), ops.walk.matrix, out_path);
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    if (suite == "key-identity") {
        res = run_key_identity_suite(trials, seed);
    } else if (suite == "lemma32") {
        res = run_lemma32_suite(trials, seed);
    } else if (suite == "remark33") {
        res = run_remark33_suite(trials, seed);
    } else if (suite == "grover-charpoly") {
        res = run_grover_charpoly_suite(20, seed);
    } else if (suite == "formula-vs-direct") {
        res = run_formula_vs_direct_suite(std::max<std::size_t>(1, trials / 100), seed,
                                          match_tolerance());
    } else {
        throw ValidationError("unknown suite '" + suite + "'");
    }
    std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.name << ": " << res.cases
              << " cases, " << res.detail << "\n";
    return res.pass ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum walk spectra on graphs: Grover, Szegedy, staggered, and search walks"};
    app.require_subcommand(1);

    std::string graph_path, weights_path, amps_path, out_path, trajectory_path, suite;
    std::vector<std::size_t> marked;
    bool support = false;
    std::size_t hitting_cap = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;

    auto* grover = app.add_subcommand("grover", "coin walk on the arc space");
    grover->add_option("graph", graph_path, "edge-list file")->required();
    grover->add_flag("--support", support,
                     "also report the positive-support spectrum (regular graphs)");
    grover->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* szegedy = app.add_subcommand("szegedy", "bipartite walk on the edge space");
    szegedy->add_option("graph", graph_path, "bipartite edge-list file with an X: header")
        ->required();
    szegedy->add_option("--weights", weights_path,
                        "weighting file, one 'p q' line per edge (default: 1/deg)");
    szegedy->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* sqw = app.add_subcommand("sqw", "2-tessellation staggered walk from a bipartite root");
    sqw->add_option("graph", graph_path,
                    "root graph H (bipartite edge-list); the walk runs on L(H)")
        ->required();
    sqw->add_option("--amps", amps_path, "amplitude file, one 'a_re a_im b_re b_im' line per edge");
    sqw->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* search = app.add_subcommand("search", "marked-vertex search walk on the duplication");
    search->add_option("graph", graph_path, "edge-list file")->required();
    search->add_option("--marked", marked, "marked vertex indices")->required()->delimiter(',');
    search->add_option("--weights", weights_path, "weighting on the duplication edges");
    search->add_option("--hitting-cap", hitting_cap, "step cap (default 10 n^2)");
    search->add_option("--trajectory", trajectory_path, "write the (T, F) trajectory as CSV");
    search->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "randomized verification suites");
    verify
        ->add_option("--suite", suite,
                     "key-identity | lemma32 | remark33 | grover-charpoly | formula-vs-direct")
        ->required();
    verify->add_option("--trials", trials, "number of random trials");
    verify->add_option("--seed", seed, "RNG seed (fixed seed gives byte-identical output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or error text
        return code == 0 ? 0 : 2;
    }

    try {
        if (grover->parsed()) return cmd_grover(graph_path, support, out_path);
        if (szegedy->parsed()) return cmd_szegedy(graph_path, weights_path, out_path);
        if (sqw->parsed()) return cmd_sqw(graph_path, amps_path, out_path);
        if (search->parsed())
            return cmd_search(graph_path, marked, weights_path, hitting_cap, trajectory_path,
                              out_path);
        if (verify->parsed()) return cmd_verify(suite, trials, seed);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
