#ifndef EQD_GENDEG_HPP
#define EQD_GENDEG_HPP

#include <map>
#include <vector>

#include "eqd/orbit.hpp"

namespace eqd {

struct GenDegReport {
    long long value = 0;          // D(xi)
    std::vector<int> witness;     // minimizing n (first nonzero entry positive)
    int search_radius = 0;        // R = min_l deg(xi_l)
    long long examined = 0;       // lattice points evaluated
    std::vector<int> coord_degrees;
};

/// Generalized degree min_{n != 0} ||n||_1 * deg(chi^n(xi)), searched over the
/// shells ||n||_1 = 1..R with R = min_l deg(xi_l); a shell r is skipped once
/// the running minimum is < r. Ties resolve to the lexicographically smallest
/// witness with positive first nonzero entry.
GenDegReport generalized_degree(const GaloisOrbit& orbit, long long lattice_cap = 1'000'000);

/// Exact table n -> deg(chi^n(xi)) for all 0 < ||n||_1 <= radius,
/// symmetric under n -> -n.
std::map<std::vector<int>, int> degree_search_table(const GaloisOrbit& orbit, int radius);

}  // namespace eqd

#endif
