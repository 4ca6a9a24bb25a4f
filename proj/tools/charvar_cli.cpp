#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/charvar.hpp"
#include "charvar/generator.hpp"
#include "charvar/homology.hpp"
#include "charvar/hypotheses.hpp"
#include "charvar/json_io.hpp"
#include "charvar/pi1.hpp"
#include "charvar/pushoff.hpp"

namespace {

using namespace charvar;

int g_exit = 0;

nlohmann::json int_field(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return nlohmann::json(v.convert_to<std::int64_t>());
    return nlohmann::json(v.str());
}

void write_file(const std::string& path, const std::string& text, const char* what) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    std::cout << what << " written to " << path << "\n";
}

void print_answer(const HomotopyAnswer& answer) {
    switch (answer.kind) {
        case HomotopyAnswer::Kind::GROUP:
            std::cout << group_to_json(*answer.group);
            if (!answer.range_note.empty()) std::cout << "note: " << answer.range_note << "\n";
            break;
        case HomotopyAnswer::Kind::FINITE_UNKNOWN:
            std::cout << nlohmann::json{{"kind", "finite-unknown"}, {"note", answer.range_note}}
                             .dump()
                      << "\n";
            break;
        case HomotopyAnswer::Kind::OUT_OF_RANGE:
            std::cout << nlohmann::json{{"kind", "out-of-range"}, {"note", answer.range_note}}
                             .dump()
                      << "\n";
            break;
    }
}

PoincareMethod method_from(const std::string& name) {
    if (name == "rational") return PoincareMethod::Rational;
    if (name == "series") return PoincareMethod::Series;
    if (name == "both") return PoincareMethod::Both;
    throw DomainError("unknown method '" + name + "' (use rational, series or both)");
}

void run_poincare(long r, long r_to, int jobs, const std::string& method, bool duality,
                  bool as_json, bool as_table) {
    PoincareMethod m = method_from(method);
    if (r_to >= 0) {
        if (r_to < r) throw DomainError("--r-to must be at least --r");
        const int count = int(r_to - r + 1);
        std::vector<std::string> lines(static_cast<std::size_t>(count));
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i; (i = next.fetch_add(1)) < count;) {
                long rr = r + i;
                lines[std::size_t(i)] =
                    "r=" + std::to_string(rr) + ": " + poincare_su2(rr, m).to_string();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        for (const auto& line : lines) std::cout << line << "\n";
        return;
    }
    IntPolynomial p = poincare_su2(r, m);
    if (as_json) {
        std::cout << polynomial_to_json(p);
    } else if (as_table) {
        std::printf("%-8s%s\n", "degree", "coefficient");
        for (long k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) std::printf("%-8ld%s\n", k, p.coeff(k).str().c_str());
    } else {
        std::cout << p.to_string() << "\n";
    }
    if (duality) {
        DualityReport report = duality_check(r);
        if (report.symmetric()) {
            std::cout << "duality: symmetric about degree " << report.m << "\n";
        } else {
            std::cout << "duality: " << report.mismatches.size() << " mismatches about degree "
                      << report.m << "\n";
            for (const auto& mm : report.mismatches)
                std::cout << "  b_" << mm.k << " = " << mm.b_k << " but b_" << (report.m - mm.k)
                          << " = " << mm.b_mk << "\n";
        }
    }
}

void run_pushoff(const std::string& cx, const std::string& cy, const std::string& cs,
                 const std::string& cf, int budget, const std::string& out_path,
                 const std::string& cert_path) {
    PushoffProblem problem = PushoffProblem::make(load_complex_file(cx), load_subcomplex_file(cy),
                                                  load_surface_file(cs), load_map_file(cf));
    PushoffResult result = pushoff(problem, budget);
    if (!result.cleared) {
        const Obstruction& ob = *result.obstruction;
        std::cout << "OBSTRUCTED at vertex '" << ob.vertex << "' mapping to '" << ob.image
                  << "'\n";
        std::cout << "  " << ob.note << "\n";
        std::cout << "  link walk:";
        for (const auto& v : ob.loop) std::cout << " " << v;
        std::cout << "\n  punctured star H_1: " << ob.punctured_h1.to_string() << "\n";
        g_exit = 3;
        return;
    }
    std::cout << "cleared: the pushed map misses the obstacle\n";
    std::cout << "certificate moves: " << result.certificate.moves.size() << "\n";
    const int d = result.surface.dim();
    std::cout << "final surface: " << result.surface.complex.vertices().size() << " vertices, "
              << (d >= 0 ? result.surface.complex.simplices_of_dim(d).size() : 0)
              << " top cells\n";
    write_file(out_path, pushed_map_to_json(result.map), "map");
    write_file(cert_path, certificate_to_json(result.certificate), "certificate");
}

void run_verify(const std::string& cx, const std::string& cy, const std::string& cs,
                const std::string& cf, const std::string& h_path, const std::string& cert_path) {
    PushoffProblem problem = PushoffProblem::make(load_complex_file(cx), load_subcomplex_file(cy),
                                                  load_surface_file(cs), load_map_file(cf));
    SimplicialMap h = load_pushed_map_file(h_path);
    PushoffCertificate cert = load_certificate_file(cert_path);
    VerifyResult vr = verify_certificate(problem, h, cert);
    if (vr.ok) {
        std::cout << "certificate verified\n";
    } else {
        std::cout << "certificate rejected: " << vr.reason << "\n";
        g_exit = 1;
    }
}

void run_check(const std::string& cx, const std::string& cy, int depth, int fill_budget) {
    SimplicialComplex X = load_complex_file(cx);
    Subcomplex Y = load_subcomplex_file(cy);
    HypothesisReport report = check_hypotheses(X, Y, depth, fill_budget);
    std::cout << hypothesis_report_to_json(report);
    if (!report.density || report.local_connectivity_status() == CheckStatus::FAIL ||
        report.punctured_star_status() == CheckStatus::FAIL)
        g_exit = 2;
}

void run_gen(std::uint64_t seed, int count, bool run, int budget) {
    std::vector<GeneratedProblem> suite = generate_problem_suite(seed, count);
    for (const auto& g : suite) {
        std::cout << g.label << ": surface "
                  << g.problem.surface.complex.maximal_simplices().size() << " top cells, space "
                  << g.problem.space.maximal_simplices().size() << " top cells"
                  << (g.already_clear ? ", already clear" : "") << "\n";
        if (!run) continue;
        PushoffResult result = pushoff(g.problem, budget);
        if (result.cleared)
            std::cout << "  cleared with " << result.certificate.moves.size() << " moves\n";
        else
            std::cout << "  OBSTRUCTED: " << result.obstruction->note << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-variety invariants and a simplicial push-off pipeline"};
    app.require_subcommand(1);

    // poincare su2
    auto* poincare = app.add_subcommand("poincare", "Poincare polynomials of character varieties");
    poincare->require_subcommand(1);
    auto* su2 = poincare->add_subcommand("su2", "rank-r SU(2) character variety");
    long p_r = 1, p_r_to = -1;
    int p_jobs = 1;
    std::string p_method = "both";
    bool p_duality = false, p_json = false, p_table = false;
    su2->add_option("--r", p_r, "number of free generators")->required();
    su2->add_option("--r-to", p_r_to, "batch mode: compute r, r+1, ..., r-to");
    su2->add_option("--jobs", p_jobs, "worker threads for batch mode");
    su2->add_option("--method", p_method, "rational, series or both (cross-checked)");
    su2->add_flag("--check-duality", p_duality, "report Poincare duality mismatches");
    auto* p_json_flag =
        su2->add_flag("--json", p_json, "emit coefficient JSON instead of the readable form");
    su2->add_flag("--table", p_table, "fixed-width degree/coefficient table")
        ->excludes(p_json_flag);
    su2->callback(
        [&] { run_poincare(p_r, p_r_to, p_jobs, p_method, p_duality, p_json, p_table); });

    // homotopy
    auto* homotopy = app.add_subcommand("homotopy", "homotopy groups of the irreducible locus");
    std::string h_family;
    long h_n = 2, h_r = 2, h_k = 2;
    homotopy->add_option("--family", h_family, "gl, sl, u or su")->required();
    homotopy->add_option("--n", h_n)->required();
    homotopy->add_option("--r", h_r)->required();
    homotopy->add_option("--k", h_k)->required();
    homotopy->callback([&] { print_answer(pi_k_irr(parse_family(h_family), h_n, h_r, h_k)); });

    // pi1
    auto* pi1 = app.add_subcommand("pi1", "fundamental groups of character varieties");
    std::string p1_family;
    long p1_n = 2, p1_r = 2;
    bool p1_irr = false;
    pi1->add_option("--family", p1_family, "gl, sl, u or su")->required();
    pi1->add_option("--r", p1_r)->required();
    pi1->add_option("--n", p1_n, "matrix size (default 2)");
    pi1->add_flag("--irr", p1_irr, "irreducible locus instead of the full variety");
    pi1->callback([&] {
        Family fam = parse_family(p1_family);
        if (p1_irr)
            print_answer(pi1_irr(fam, p1_n, p1_r));
        else
            std::cout << group_to_json(pi1_charvar(fam, p1_n, p1_r));
    });

    // codim
    auto* codim = app.add_subcommand("codim", "codimension bounds for special loci");
    std::string c_family;
    long c_n = 2, c_r = 2;
    codim->add_option("--family", c_family, "gl, sl, u or su")->required();
    codim->add_option("--n", c_n)->required();
    codim->add_option("--r", c_r)->required();
    codim->callback([&] {
        CodimBounds b = codim_bounds(parse_family(c_family), c_n, c_r);
        nlohmann::json out;
        out["r"] = b.r;
        out["n"] = b.n;
        out["reducible_lower_complex"] = int_field(b.reducible_lower_complex);
        out["reducible_lower_real"] = int_field(b.reducible_lower_real);
        out["singular"] = b.singular ? int_field(*b.singular) : nlohmann::json(nullptr);
        std::cout << out.dump() << "\n";
    });

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "simplicial homology of a complex");
    std::string hom_path;
    bool hom_json = false;
    homology_cmd->add_option("--complex", hom_path)->required();
    homology_cmd->add_flag("--json", hom_json);
    homology_cmd->callback([&] {
        std::vector<FgAbelianGroup> H = homology(load_complex_file(hom_path));
        if (hom_json) {
            std::cout << homology_to_json(H);
        } else {
            for (std::size_t k = 0; k < H.size(); ++k)
                std::cout << "H_" << k << ": " << H[k].to_string() << "\n";
        }
    });

    // pi1-complex
    auto* pi1c = app.add_subcommand("pi1-complex", "edge-path group of a complex");
    std::string pc_path, pc_base;
    pi1c->add_option("--complex", pc_path)->required();
    pi1c->add_option("--basepoint", pc_base, "default: least vertex");
    pi1c->callback([&] {
        SimplicialComplex X = load_complex_file(pc_path);
        if (X.empty()) throw ValidationError("pi1-complex: the complex is empty");
        Vertex base = pc_base.empty() ? X.vertices().front() : pc_base;
        GroupPresentation pres = pi1_presentation(X, base);
        std::cout << "basepoint: " << pres.basepoint << "\n";
        std::cout << "generators: " << pres.generators.size() << "\n";
        std::cout << "relators: " << pres.relators.size() << "\n";
        std::cout << "abelianization: " << abelianization(pres).to_string() << "\n";
    });

    // pushoff
    auto* push = app.add_subcommand("pushoff", "homotope a surface map off a subcomplex");
    std::string s_cx, s_cy, s_cs, s_cf, s_out, s_cert;
    int s_budget = 8;
    push->add_option("--complex", s_cx)->required();
    push->add_option("--subcomplex", s_cy)->required();
    push->add_option("--surface", s_cs)->required();
    push->add_option("--map", s_cf)->required();
    push->add_option("--budget", s_budget, "interior-vertex budget for disk searches");
    push->add_option("--out", s_out, "write the pushed map here");
    push->add_option("--certificate", s_cert, "write the replayable certificate here");
    push->callback([&] { run_pushoff(s_cx, s_cy, s_cs, s_cf, s_budget, s_out, s_cert); });

    // check-hypotheses
    auto* check = app.add_subcommand("check-hypotheses", "sufficient checks for the push-off");
    std::string ch_cx, ch_cy;
    int ch_depth = 0, ch_budget = 6;
    check->add_option("--complex", ch_cx)->required();
    check->add_option("--subcomplex", ch_cy)->required();
    check->add_option("--depth", ch_depth, "extra subdivision levels for connectivity probes");
    check->add_option("--fill-budget", ch_budget, "loop-filling search budget");
    check->callback([&] { run_check(ch_cx, ch_cy, ch_depth, ch_budget); });

    // verify-certificate
    auto* verify = app.add_subcommand("verify-certificate", "replay and check a certificate");
    std::string v_cx, v_cy, v_cs, v_cf, v_h, v_cert;
    verify->add_option("--complex", v_cx)->required();
    verify->add_option("--subcomplex", v_cy)->required();
    verify->add_option("--surface", v_cs)->required();
    verify->add_option("--map", v_cf)->required();
    verify->add_option("--pushed", v_h, "pushed map written by `pushoff --out`")->required();
    verify->add_option("--certificate", v_cert)->required();
    verify->callback([&] { run_verify(v_cx, v_cy, v_cs, v_cf, v_h, v_cert); });

    // gen-problems
    auto* gen = app.add_subcommand("gen-problems", "deterministic sample problem suite");
    std::uint64_t g_seed = 0;
    bool g_seed_set = false, g_run = false;
    int g_count = 7, g_budget = 12;
    gen->add_option("--seed", g_seed)->each([&](const std::string&) { g_seed_set = true; });
    gen->add_option("--count", g_count);
    gen->add_flag("--run", g_run, "run the pipeline on every instance");
    gen->add_option("--budget", g_budget);
    gen->callback([&] {
        std::uint64_t seed = g_seed;
        if (!g_seed_set) {
            const char* env = std::getenv("CHARVAR_SEED");
            seed = env ? std::strtoull(env, nullptr, 10) : 20240801u;
        }
        run_gen(seed, g_count, g_run, g_budget);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const DensityViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LocalConnectivityViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
