#ifndef EQD_SUITES_HPP
#define EQD_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

#include "eqd/discrepancy.hpp"

namespace eqd {

struct Corpus {
    std::vector<AlgebraicPointSpec> points;  // sorted by name
    std::vector<TestFunction> functions;     // sorted by name
};

/// Loads <dir>/points/*.json and <dir>/functions/*.json.
Corpus load_corpus(const std::string& dir);

struct SuiteOptions {
    double precision = 1e-12;
    int grid_1d = 1024;
    int grid_2d = 256;
    int box = 32;
    int workers = 1;
    std::uint64_t seed = 2024;
};

struct SuiteResult {
    std::string header;
    std::vector<std::string> rows;
    long long checks = 0;
    long long violations = 0;

    std::string csv() const;
};

/// Height inequalities of Galois-invariant sets on every corpus point:
/// the orbit log-sum bound and, per coordinate, the one-dimensional log bound
/// and the delta-tail count bound.
SuiteResult run_lemmas_suite(const Corpus& corpus, const SuiteOptions& opts);

/// The main discrepancy inequality over all (point, function) pairs of equal
/// dimension with h <= 1, plus the first-summand bound 2 Lip(F) h and the
/// triangle decomposition.
SuiteResult run_main_suite(const Corpus& corpus, const SuiteOptions& opts);

/// The one-dimensional bound over 1-D corpus points with the mollifier
/// components u_delta, v_delta and a lifted trig polynomial, at
/// delta in {0.5, 0.9071}.
SuiteResult run_frl_suite(const Corpus& corpus, const SuiteOptions& opts);

/// The Fourier-Stieltjes bound for all ||n||_1 <= 5 at delta in {0.5, delta*},
/// plus the exactness check nu^(0) = 1.
SuiteResult run_nuhat_suite(const Corpus& corpus, const SuiteOptions& opts);

SuiteResult run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& opts);

/// Resolve the minimal polynomial of coordinate l: supplied, or derived by
/// the exact resultant when the primitive degree allows it.
IntPolynomial resolve_coord_min_poly(const AlgebraicPointSpec& spec, int l);

/// Chunked deterministic parallel map: out[i] = fn(i), any worker count.
void parallel_for(long long count, int workers, const std::function<void(long long)>& fn);

std::string format_double(double v);

}  // namespace eqd

#endif
