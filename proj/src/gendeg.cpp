#include "eqd/gendeg.hpp"

#include <algorithm>

namespace eqd {

namespace {

// All n with ||n||_1 = r and positive first nonzero entry, in lexicographic order.
void canonical_shell(int N, int r, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> n(N, 0);
    // odometer over {-r..r}^N, then filter; shells are small for corpus points
    while (true) {
        int norm = 0;
        for (int v : n) norm += std::abs(v);
        if (norm == r) {
            int first = 0;
            for (int v : n)
                if (v != 0) {
                    first = v;
                    break;
                }
            if (first > 0) out.push_back(n);
        }
        int pos = N - 1;
        while (pos >= 0) {
            if (++n[pos] <= r) break;
            n[pos] = -r;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

GenDegReport generalized_degree(const GaloisOrbit& orbit, long long lattice_cap) {
    const int N = orbit.dimension;
    GenDegReport rep;
    rep.coord_degrees.resize(N);
    for (int l = 0; l < N; ++l) {
        std::vector<int> e(N, 0);
        e[l] = 1;
        rep.coord_degrees[l] = monomial_degree(orbit, e);
    }
    rep.search_radius = *std::min_element(rep.coord_degrees.begin(), rep.coord_degrees.end());

    long long best = -1;
    std::vector<int> witness;
    std::vector<std::vector<int>> shell;
    for (int r = 1; r <= rep.search_radius; ++r) {
        if (best > 0 && best < r) break;  // every later value is >= r > best
        canonical_shell(N, r, shell);
        for (const auto& n : shell) {
            if (++rep.examined > lattice_cap)
                throw Error("generalized_degree: lattice cap of " + std::to_string(lattice_cap) +
                            " examined points exceeded (radius " + std::to_string(rep.search_radius) + ")");
            const long long value = static_cast<long long>(r) * monomial_degree(orbit, n);
            if (best < 0 || value < best || (value == best && n < witness)) {
                best = value;
                witness = n;
            }
        }
    }
    rep.value = best;
    rep.witness = witness;
    return rep;
}

std::map<std::vector<int>, int> degree_search_table(const GaloisOrbit& orbit, int radius) {
    const int N = orbit.dimension;
    std::map<std::vector<int>, int> table;
    std::vector<std::vector<int>> shell;
    for (int r = 1; r <= radius; ++r) {
        canonical_shell(N, r, shell);
        for (const auto& n : shell) {
            int deg = monomial_degree(orbit, n);
            table[n] = deg;
            std::vector<int> neg(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
            table[neg] = deg;  // chi^n and chi^{-n} have conjugate values, equal degree
        }
    }
    return table;
}

}  // namespace eqd
