#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "eqd/spec_io.hpp"
#include "eqd/suites.hpp"

namespace {

using eqd::json;

struct GlobalOptions {
    double precision = 1e-12;
    int grid = 0;  // 0: per-dimension default
    int box = 32;
    std::uint64_t seed = 2024;
};

int env_workers() {
    if (const char* s = std::getenv("EQD_WORKERS")) {
        const int w = std::atoi(s);
        if (w >= 1) return w;
    }
    return 1;
}

void check_knobs(const GlobalOptions& g) {
    if (g.precision < 1e-15 || g.precision > 1e-6)
        throw eqd::Error("precision must lie in [1e-15, 1e-6]");
    if (g.grid != 0 && (g.grid < 16 || g.grid > 4096 || (g.grid & (g.grid - 1)) != 0))
        throw eqd::Error("grid size must be a power of two in [16, 4096]");
    if (g.box < 1) throw eqd::Error("box radius must be >= 1");
}

int grid_for(const GlobalOptions& g, int dimension) {
    if (g.grid != 0) return g.grid;
    if (dimension == 1) return 1024;
    if (dimension == 2) return 256;
    return 64;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        eqd::write_text_file(out_path, text);
}

json knobs_json(const GlobalOptions& g) {
    return {{"precision", g.precision}, {"box", g.box}, {"seed", g.seed}};
}

int cmd_height(const std::string& point_path, const std::string& method, const std::string& out,
               const GlobalOptions& g) {
    eqd::AlgebraicPointSpec spec = eqd::load_point_spec(point_path);
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec, g.precision);
    json j = eqd::report_envelope("height", {{point_path, eqd::file_digest(point_path)}});
    j["params"] = knobs_json(g);
    j["params"]["quadrature_nodes"] = 1 << 16;
    if (method == "roots" || method == "both")
        j["roots"] = to_json(eqd::point_height(spec, orbit, eqd::HeightMethod::Roots));
    if (method == "quadrature" || method == "both")
        j["quadrature"] = to_json(eqd::point_height(spec, orbit, eqd::HeightMethod::Quadrature));
    const char* primary = (method == "quadrature") ? "quadrature" : "roots";
    j["total_h"] = j[primary]["total_h"];
    emit(j, out);
    return 0;
}

int cmd_gendeg(const std::string& point_path, int radius, const std::string& out,
               const std::string& table_out, const GlobalOptions& g) {
    eqd::AlgebraicPointSpec spec = eqd::load_point_spec(point_path);
    eqd::GaloisOrbit orbit = eqd::enumerate_orbit(spec, g.precision);
    eqd::GenDegReport rep = eqd::generalized_degree(orbit);
    json j = eqd::report_envelope("gendeg", {{point_path, eqd::file_digest(point_path)}});
    j["params"] = knobs_json(g);
    j["report"] = to_json(rep);
    j["provenance"] = orbit.provenance;
    emit(j, out);
    if (!table_out.empty()) {
        const int R = radius > 0 ? radius : rep.search_radius;
        auto table = eqd::degree_search_table(orbit, R);
        std::ostringstream os;
        os << "n,deg,product\n";
        for (const auto& [n, deg] : table) {
            os << "(";
            int n1 = 0;
            for (std::size_t l = 0; l < n.size(); ++l) {
                os << (l ? ";" : "") << n[l];
                n1 += std::abs(n[l]);
            }
            os << ")," << deg << "," << static_cast<long long>(n1) * deg << "\n";
        }
        eqd::write_text_file(table_out, os.str());
    }
    return 0;
}

int cmd_fourier(const std::string& fn_path, const std::string& out, const GlobalOptions& g) {
    eqd::TestFunction f = eqd::load_function_spec(fn_path);
    const int M = grid_for(g, f.dimension());
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, M, std::min(g.box, M / 2 - 1));
    json j = eqd::report_envelope("fourier", {{fn_path, eqd::file_digest(fn_path)}});
    j["params"] = knobs_json(g);
    j["params"]["grid"] = M;
    j["lip"] = f.lip();
    j["unverified_smoothness"] = f.unverified_smoothness();
    j["spectrum"] = to_json(table);
    eqd::COfF c = eqd::c_of_F(f, table);
    j["c_of_F"] = c.value;
    j["c_of_F_terms"] = {{"lip_term", c.lip_term},
                         {"deriv_l1", c.deriv_l1},
                         {"deriv_tail", c.deriv_tail}};
    emit(j, out);
    return 0;
}

int cmd_mollifier(double delta, bool check_lipschitz, int samples, const std::string& out,
                  const GlobalOptions& g) {
    json j = eqd::report_envelope("mollifier", {});
    j["params"] = knobs_json(g);
    j["delta"] = delta;
    j["lipschitz_bound"] = eqd::fdelta_lipschitz_bound(delta);
    if (check_lipschitz) {
        const double eu = eqd::estimate_lipschitz(eqd::fdelta_real(delta), delta, samples, g.seed);
        const double ev = eqd::estimate_lipschitz(eqd::fdelta_imag(delta), delta, samples, g.seed + 1);
        j["samples"] = samples;
        j["seed"] = g.seed;
        j["empirical_lipschitz_u"] = eu;
        j["empirical_lipschitz_v"] = ev;
        const bool ok = eu <= j["lipschitz_bound"].get<double>() + 1e-9 &&
                        ev <= j["lipschitz_bound"].get<double>() + 1e-9;
        j["ok"] = ok;
        emit(j, out);
        return ok ? 0 : 1;
    }
    emit(j, out);
    return 0;
}

int cmd_optimize_delta(const std::string& out) {
    json j = eqd::report_envelope("optimize-delta", {});
    eqd::DeltaOptimum opt = eqd::optimize_delta();
    j["delta"] = opt.delta;
    j["value"] = opt.value;
    emit(j, out);
    return 0;
}

int cmd_discrepancy(const std::string& point_path, const std::string& fn_path, const std::string& out,
                    const GlobalOptions& g) {
    eqd::AlgebraicPointSpec spec = eqd::load_point_spec(point_path);
    eqd::TestFunction f = eqd::load_function_spec(fn_path);
    eqd::PointAnalysis pa = eqd::analyze_point(spec, g.precision);
    const int M = grid_for(g, f.dimension());
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, M, std::min(g.box, M / 2 - 1));
    eqd::OrbitSpectrum nu = eqd::fourier_stieltjes(pa.orbit, table.box);
    eqd::DiscrepancyReport rep = eqd::theorem_main(pa, f, table, nu);
    json j = eqd::report_envelope("discrepancy", {{point_path, eqd::file_digest(point_path)},
                                                  {fn_path, eqd::file_digest(fn_path)}});
    j["tolerances"] = {{"precision", g.precision}, {"grid", M}, {"box", table.box}};
    j["report"] = to_json(rep);
    emit(j, out);
    return rep.ok.value_or(true) ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& corpus_dir, const std::string& out,
               const GlobalOptions& g) {
    eqd::Corpus corpus = eqd::load_corpus(corpus_dir);
    eqd::SuiteOptions opts;
    opts.precision = g.precision;
    if (g.grid != 0) opts.grid_1d = opts.grid_2d = g.grid;
    opts.box = g.box;
    opts.workers = env_workers();
    opts.seed = g.seed;
    eqd::SuiteResult res = eqd::run_suite(suite, corpus, opts);
    if (out.empty())
        std::cout << res.csv();
    else
        eqd::write_text_file(out, res.csv());
    std::cerr << "suite " << suite << ": " << res.checks << " checks, " << res.violations
              << " violations\n";
    return res.violations == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& family_name, int limit, int a, const std::string& fn_path,
              const std::string& out, const GlobalOptions& g) {
    eqd::Family family;
    if (family_name == "cyclotomic")
        family = eqd::Family::Cyclotomic;
    else if (family_name == "radical")
        family = eqd::Family::Radical;
    else if (family_name == "mixed")
        family = eqd::Family::Mixed;
    else
        throw eqd::Error("unknown family '" + family_name + "'");
    eqd::TestFunction f = eqd::load_function_spec(fn_path);
    const int M = grid_for(g, f.dimension());
    eqd::SpectrumTable table = eqd::fourier_coeffs(f, M, std::min(g.box, M / 2 - 1));
    std::vector<eqd::SweepRow> rows = eqd::sweep_family(family, limit, a, f, table, g.precision);
    std::ostringstream os;
    os << "k,h,gendeg,lhs,rhs,slack,error\n";
    bool all_ok = true;
    for (const auto& r : rows) {
        os << r.k << "," << eqd::format_double(r.h) << "," << r.gendeg << ","
           << eqd::format_double(r.lhs) << "," << eqd::format_double(r.rhs) << ","
           << eqd::format_double(r.slack) << "," << r.error << "\n";
        if (!r.error.empty() || r.slack < 0) all_ok = false;
    }
    if (out.empty())
        std::cout << os.str();
    else
        eqd::write_text_file(out, os.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computable objects around quantitative equidistribution of Galois orbits"};
    app.require_subcommand(1);
    app.fallthrough();  // global knobs may follow the subcommand name
    GlobalOptions g;
    app.add_option("--precision", g.precision, "root-finding target precision [1e-15, 1e-6]");
    app.add_option("--grid", g.grid, "torus grid size M (power of two in [16, 4096])");
    app.add_option("--box", g.box, "spectrum box radius B");
    app.add_option("--seed", g.seed, "seed for sampling subcommands");

    std::string point_path, fn_path, out, table_out, method = "roots", suite, corpus_dir, family;
    int radius = 0, samples = 100000, limit = 101, a = 2;
    double delta = 0.9071;
    bool check_lip = false;

    auto* height = app.add_subcommand("height", "Weil height of a point");
    height->add_option("--point", point_path)->required();
    height->add_option("--method", method)->check(CLI::IsMember({"roots", "quadrature", "both"}));
    height->add_option("--out", out);

    auto* gendeg = app.add_subcommand("gendeg", "generalized degree of a point");
    gendeg->add_option("--point", point_path)->required();
    gendeg->add_option("--radius", radius);
    gendeg->add_option("--out", out);
    gendeg->add_option("--table", table_out);

    auto* fourier = app.add_subcommand("fourier", "Fourier data of a test function");
    fourier->add_option("--fn", fn_path)->required();
    fourier->add_option("--out", out);

    auto* mollifier = app.add_subcommand("mollifier", "mollifier bounds and sampling");
    mollifier->add_option("--delta", delta)->required();
    mollifier->add_flag("--check-lipschitz", check_lip);
    mollifier->add_option("--samples", samples);
    mollifier->add_option("--out", out);

    auto* optdelta = app.add_subcommand("optimize-delta", "minimize the delta objective");
    optdelta->add_option("--out", out);

    auto* discrepancy = app.add_subcommand("discrepancy", "both sides of the main inequality");
    discrepancy->add_option("--point", point_path)->required();
    discrepancy->add_option("--fn", fn_path)->required();
    discrepancy->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run a verification suite over a corpus");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"lemmas", "main", "frl", "nuhat"}));
    verify->add_option("--corpus", corpus_dir)->required();
    verify->add_option("--out", out);

    auto* sweep = app.add_subcommand("sweep", "family sweep CSV");
    sweep->add_option("--family", family)->required()->check(CLI::IsMember({"cyclotomic", "radical", "mixed"}));
    sweep->add_option("--pmax,--kmax", limit);
    sweep->add_option("--a", a);
    sweep->add_option("--fn", fn_path)->required();
    sweep->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        check_knobs(g);
        if (height->parsed()) return cmd_height(point_path, method, out, g);
        if (gendeg->parsed()) return cmd_gendeg(point_path, radius, out, table_out, g);
        if (fourier->parsed()) return cmd_fourier(fn_path, out, g);
        if (mollifier->parsed()) return cmd_mollifier(delta, check_lip, samples, out, g);
        if (optdelta->parsed()) return cmd_optimize_delta(out);
        if (discrepancy->parsed()) return cmd_discrepancy(point_path, fn_path, out, g);
        if (verify->parsed()) return cmd_verify(suite, corpus_dir, out, g);
        if (sweep->parsed()) return cmd_sweep(family, limit, a, fn_path, out, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
