#pragma once

#include <array>
#include <vector>

#include <kcr/reduction_types.hpp>
#include <kcr/simple_graph.hpp>

// Independent-set-on-penny-graphs reduction: a realization of tangent unit
// discs becomes a two-plane Buckingham-Coulomb instance whose low-energy
// removals leave one ion pair per independent penny.

namespace kcr {

struct PennyRealization {
    double radius = 0.5;
    std::vector<std::array<double, 2>> centers;

    int size() const { return static_cast<int>(centers.size()); }
};

// Geometric tolerance relative to the disc radius.
inline double penny_geom_eps(const PennyRealization& p) { return 1e-9 * p.radius; }

// Tangency graph: edge iff center distance within eps of 2*radius. Throws
// OverlapError when two discs sit closer than 2*radius - eps.
SimpleGraph validate_penny_realization(const PennyRealization& p);

// Same centers scaled so the tangency distance becomes `n` (radius n/2).
PennyRealization scale_realization(const PennyRealization& p, int n);

struct PennyParams {
    int n = 0;  // penny count the parameters were synthesized for
    double a11 = 0.0, b11 = 0.0, c11 = 0.0;  // same-species (within one plane)
    double a12 = 0.0, b12 = 0.0, c12 = 0.0;  // cross-plane
    double log_a11 = 0.0;  // ln(a11); a11 itself overflows for n >= 27
};

// Parameters making a vertically aligned +1/-1 pair cost exactly -1, tangent
// same-plane interactions repel by >= 1 apiece, and everything at horizontal
// distance >= sqrt(2)*n nearly vanish. Requires n >= 6.
PennyParams synthesize_penny_params(int n);

// Within-pair energy scaled to k surviving pairs: (k-1)(a12/e^{b12} - c12 - 1),
// exactly -(k-1) for synthesized parameters.
double penny_goal_energy(int k, const PennyParams& params);

struct InequalityReport {
    int id = 0;  // 1, 2, 3
    bool pass = false;
    double worst_margin = 0.0;
    double at_r = 0.0;
};

struct PennyCertificate {
    bool pass = false;
    std::vector<InequalityReport> inequalities;
    // Informational per-term bounds: repulsion below 1/(2n^2) - 1/r + 1/rhat
    // and dispersion below 1/r - 1/rhat across the same grid.
    double term_a_margin = 0.0;
    double term_c_margin = 0.0;
    double r_lo = 0.0;
    double r_hi = 0.0;
    int grid_points = 0;
};

// Certifies, on a dense grid over [sqrt(2)*n, r_max] (>= 10^4 points plus
// endpoints), the three interaction bounds the reduction's correctness rests
// on: (1) tangent pair-pair energy >= the within-pair magnitude, evaluated at
// r = n; (2) n^2 * |far energy| <= that magnitude; (3) far energy positive.
// All Buckingham terms go through the factored exp(logA - B r) path.
PennyCertificate certify_inequalities(const PennyParams& params, double r_max);

// Two ions per penny (+1 below, -1 above, unit plane separation). Pads the
// realization with isolated pennies up to 6 when needed and rescales so the
// tangency distance equals the padded count. k is the independent-set target
// on the padded tangency graph; the instance removes n - k charges against
// goal -(k-1). Throws BuildError when non-adjacent pennies sit closer than
// sqrt(2) times the tangency distance.
ReductionOutput build_two_plane_instance(const PennyRealization& p, int k);

}  // namespace kcr
