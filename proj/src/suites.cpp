#include "eqd/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "eqd/spec_io.hpp"

namespace eqd {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string SuiteResult::csv() const {
    std::ostringstream os;
    os << header << "\n";
    for (const std::string& row : rows) os << row << "\n";
    return os.str();
}

Corpus load_corpus(const std::string& dir) {
    Corpus corpus;
    const fs::path points_dir = fs::path(dir) / "points";
    const fs::path functions_dir = fs::path(dir) / "functions";
    if (!fs::is_directory(points_dir) || !fs::is_directory(functions_dir))
        throw Error("corpus directory '" + dir + "' must contain points/ and functions/");
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(points_dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const std::string& f : files) corpus.points.push_back(load_point_spec(f));
    files.clear();
    for (const auto& e : fs::directory_iterator(functions_dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const std::string& f : files) corpus.functions.push_back(load_function_spec(f));
    if (corpus.points.empty()) throw Error("corpus '" + dir + "' has no point specs");
    return corpus;
}

void parallel_for(long long count, int workers, const std::function<void(long long)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

IntPolynomial resolve_coord_min_poly(const AlgebraicPointSpec& spec, int l) {
    if (l < static_cast<int>(spec.coord_min_polys.size()) && !spec.coord_min_polys[l].is_zero())
        return spec.coord_min_polys[l];
    if (spec.mode == PointMode::Primitive) {
        // the identity coordinate xi_l = gamma needs no derivation
        if (spec.coords[l].den == 1 && spec.coords[l].num == IntPolynomial{0, 1})
            return spec.primitive_min_poly;
        if (spec.primitive_min_poly.degree() <= 12)
            return coordinate_min_poly(spec.primitive_min_poly, spec.coords[l]);
    }
    throw Error("no minimal polynomial available for coordinate " + std::to_string(l + 1) + " of '" +
                spec.name + "'");
}

namespace {

struct AnalyzedCorpus {
    std::vector<PointAnalysis> points;
    std::vector<SpectrumTable> tables;  // aligned with corpus.functions
};

int grid_for(const SuiteOptions& opts, int dimension) {
    if (dimension == 1) return opts.grid_1d;
    if (dimension == 2) return opts.grid_2d;
    return 64;
}

AnalyzedCorpus analyze(const Corpus& corpus, const SuiteOptions& opts, bool with_tables) {
    AnalyzedCorpus out;
    out.points.resize(corpus.points.size());
    parallel_for(static_cast<long long>(corpus.points.size()), opts.workers,
                 [&](long long i) { out.points[i] = analyze_point(corpus.points[i], opts.precision); });
    if (with_tables) {
        out.tables.resize(corpus.functions.size());
        parallel_for(static_cast<long long>(corpus.functions.size()), opts.workers, [&](long long i) {
            const TestFunction& f = corpus.functions[i];
            out.tables[i] = fourier_coeffs(f, grid_for(opts, f.dimension()), opts.box);
        });
    }
    return out;
}

}  // namespace

SuiteResult run_lemmas_suite(const Corpus& corpus, const SuiteOptions& opts) {
    AnalyzedCorpus ac = analyze(corpus, opts, false);
    SuiteResult res;
    res.header = "point,lemma,coordinate,lhs,bound,ok";
    for (std::size_t i = 0; i < corpus.points.size(); ++i) {
        const PointAnalysis& pa = ac.points[i];
        auto add = [&](const std::string& lemma, int coord, double lhs, double bound, bool ok) {
            std::ostringstream os;
            os << pa.spec.name << "," << lemma << "," << (coord < 0 ? std::string("-") : std::to_string(coord + 1))
               << "," << format_double(lhs) << "," << format_double(bound) << "," << (ok ? "1" : "0");
            res.rows.push_back(os.str());
            ++res.checks;
            if (!ok) ++res.violations;
        };
        const LogSumCheck ls = check_log_sum(pa.orbit, pa.height.total_h);
        add("orbit_log_sum", -1, ls.lhs, ls.bound, ls.ok);
        for (int l = 0; l < pa.orbit.dimension; ++l) {
            std::vector<int> e(pa.orbit.dimension, 0);
            e[l] = 1;
            const MonomialImage img = monomial_image(pa.orbit, e);
            std::vector<double> abs_logs;
            for (const auto& [u, theta] : img.representatives) abs_logs.push_back(std::fabs(u));
            const double coord_h = pa.height.per_coordinate[l].h;
            const double lhs = pairwise_sum(abs_logs) / img.distinct_count;
            add("coordinate_log_sum", l, lhs, 2.0 * coord_h, lhs <= 2.0 * coord_h + 1e-9);
            for (double delta : {0.5, 0.9}) {
                const double cutoff = std::log(1.0 / delta);
                long long count = 0;
                for (const auto& [u, theta] : img.representatives)
                    if (std::fabs(u) > cutoff) ++count;
                const double bound = 2.0 * (img.distinct_count * coord_h) / cutoff;
                add("tail_count_delta" + format_double(delta), l, static_cast<double>(count), bound,
                    count == 0 || static_cast<double>(count) < bound);
            }
        }
    }
    return res;
}

SuiteResult run_main_suite(const Corpus& corpus, const SuiteOptions& opts) {
    AnalyzedCorpus ac = analyze(corpus, opts, true);
    SuiteResult res;
    res.header = "point,function,h,gendeg,c_of_F,lip_F,lhs,rhs,t1,t1_bound,ok";
    struct Task {
        std::size_t pi, fi;
    };
    std::vector<Task> tasks;
    for (std::size_t fi = 0; fi < corpus.functions.size(); ++fi)
        for (std::size_t pi = 0; pi < corpus.points.size(); ++pi)
            if (corpus.functions[fi].dimension() == ac.points[pi].orbit.dimension)
                tasks.push_back({pi, fi});
    std::vector<std::string> rows(tasks.size());
    std::vector<int> bad(tasks.size(), 0);
    std::vector<int> counted(tasks.size(), 0);
    parallel_for(static_cast<long long>(tasks.size()), opts.workers, [&](long long t) {
        const PointAnalysis& pa = ac.points[tasks[t].pi];
        const TestFunction& f = corpus.functions[tasks[t].fi];
        const SpectrumTable& table = ac.tables[tasks[t].fi];
        std::ostringstream os;
        os << pa.spec.name << "," << f.name << ",";
        if (pa.height.total_h > 1.0) {
            os << format_double(pa.height.total_h) << ",,,,,,,,skipped_h_gt_1";
            rows[t] = os.str();
            return;
        }
        const OrbitSpectrum nu = fourier_stieltjes(pa.orbit, table.box);
        const DiscrepancyReport rep = theorem_main(pa, f, table, nu);
        const bool triangle_ok = rep.lhs <= rep.t1 + rep.t2 + 1e-9;
        const bool t1_ok = rep.t1 <= rep.t1_bound + 1e-9;
        const bool t2_ok = rep.t2 <= rep.t2_bound + 1e-9;
        const bool all_ok = rep.ok.value_or(false) && triangle_ok && t1_ok && t2_ok;
        os << format_double(rep.h) << "," << rep.gendeg << "," << format_double(rep.c_of_f) << ","
           << format_double(f.lip()) << "," << format_double(rep.lhs) << "," << format_double(rep.rhs)
           << "," << format_double(rep.t1) << "," << format_double(rep.t1_bound) << ","
           << (all_ok ? "1" : "0");
        rows[t] = os.str();
        counted[t] = 1;
        bad[t] = all_ok ? 0 : 1;
    });
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        res.rows.push_back(rows[t]);
        res.checks += counted[t];
        res.violations += bad[t];
    }
    return res;
}

SuiteResult run_frl_suite(const Corpus& corpus, const SuiteOptions& opts) {
    SuiteResult res;
    res.header = "point,function,delta,lhs,rhs,ok";
    const std::vector<TrigTerm> lift_terms{{{1}, 0.6, 0.0}, {{2}, 0.0, -0.3}};
    for (const AlgebraicPointSpec& spec : corpus.points) {
        if (spec.dimension() != 1) continue;
        const IntPolynomial poly = resolve_coord_min_poly(spec, 0);
        RootOptions ropts;
        ropts.target_precision = opts.precision;
        const ComplexRootSet roots = find_roots(poly, ropts);
        const auto [h, deg] = coordinate_height(poly);
        for (double delta : {0.5, 0.9071}) {
            for (const SphereFunction& f :
                 {fdelta_real(delta), fdelta_imag(delta), lifted_trig(lift_terms, delta)}) {
                const FrlCheck chk = frl_bound_1d(roots, h, deg, f);
                std::ostringstream os;
                os << spec.name << "," << f.name << "," << format_double(delta) << ","
                   << format_double(chk.lhs) << "," << format_double(chk.rhs) << ","
                   << (chk.ok ? "1" : "0");
                res.rows.push_back(os.str());
                ++res.checks;
                if (!chk.ok) ++res.violations;
            }
        }
    }
    return res;
}

SuiteResult run_nuhat_suite(const Corpus& corpus, const SuiteOptions& opts) {
    AnalyzedCorpus ac = analyze(corpus, opts, false);
    SuiteResult res;
    res.header = "point,n,delta,lhs,rhs,ok";
    const double dstar = optimal_delta();
    for (std::size_t i = 0; i < corpus.points.size(); ++i) {
        const PointAnalysis& pa = ac.points[i];
        const int N = pa.orbit.dimension;
        const OrbitSpectrum nu = fourier_stieltjes(pa.orbit, 5);
        {
            // exactness of the zero mode
            std::vector<int> zero(N, 0);
            const double err = std::abs(nu.at(zero) - std::complex<double>(1.0, 0.0));
            std::ostringstream os;
            os << pa.spec.name << ",0,-," << format_double(err) << ",1e-12,"
               << (err <= 1e-12 ? "1" : "0");
            res.rows.push_back(os.str());
            ++res.checks;
            if (err > 1e-12) ++res.violations;
        }
        if (pa.height.total_h > 1.0) continue;  // the bound requires h <= 1
        // canonical n (first nonzero entry positive); the mirror has equal |nu^|
        std::vector<int> n(N, 0);
        std::function<void(int, int)> enumerate = [&](int pos, int budget) {
            if (pos == N) {
                bool nonzero = false;
                int first = 0;
                for (int v : n)
                    if (v != 0) {
                        if (!nonzero) first = v;
                        nonzero = true;
                    }
                if (!nonzero || first < 0) return;
                for (double delta : {0.5, dstar}) {
                    const NuHatCheck chk = nu_hat_bound_check(nu, pa.height.total_h, pa.gendeg.value, n, delta);
                    std::ostringstream os;
                    os << pa.spec.name << ",(";
                    for (int l = 0; l < N; ++l) os << (l ? ";" : "") << n[l];
                    os << ")," << format_double(delta) << "," << format_double(chk.lhs) << ","
                       << format_double(chk.rhs) << "," << (chk.ok ? "1" : "0");
                    res.rows.push_back(os.str());
                    ++res.checks;
                    if (!chk.ok) ++res.violations;
                }
                return;
            }
            for (int v = -budget; v <= budget; ++v) {
                n[pos] = v;
                enumerate(pos + 1, budget - std::abs(v));
            }
            n[pos] = 0;
        };
        enumerate(0, 5);
    }
    return res;
}

SuiteResult run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& opts) {
    if (name == "lemmas") return run_lemmas_suite(corpus, opts);
    if (name == "main") return run_main_suite(corpus, opts);
    if (name == "frl") return run_frl_suite(corpus, opts);
    if (name == "nuhat") return run_nuhat_suite(corpus, opts);
    throw Error("unknown suite '" + name + "' (expected lemmas|main|frl|nuhat)");
}

}  // namespace eqd
