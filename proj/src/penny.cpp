#include <kcr/penny.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace kcr {

namespace {

double center_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

SimpleGraph validate_penny_realization(const PennyRealization& p) {
    if (!(p.radius > 0.0) || !std::isfinite(p.radius))
        throw ScalingMismatchError("penny radius must be positive and finite");
    for (const auto& c : p.centers)
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]))
            throw ValidationError("penny center must be finite");

    const double eps = penny_geom_eps(p);
    const double touch = 2.0 * p.radius;
    SimpleGraph g(p.size());
    for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
            const double d = center_distance(p.centers[static_cast<std::size_t>(i)],
                                             p.centers[static_cast<std::size_t>(j)]);
            if (d < touch - eps)
                throw OverlapError("pennies " + std::to_string(i) + " and " +
                                       std::to_string(j) + " overlap",
                                   i, j);
            if (std::abs(d - touch) <= eps) g.add_edge(i, j);
        }
    }
    return g;
}

PennyRealization scale_realization(const PennyRealization& p, int n) {
    if (!(p.radius > 0.0) || !std::isfinite(p.radius))
        throw ScalingMismatchError("penny radius must be positive and finite");
    const double factor = static_cast<double>(n) / (2.0 * p.radius);
    PennyRealization out;
    out.radius = static_cast<double>(n) / 2.0;
    out.centers.reserve(p.centers.size());
    for (const auto& c : p.centers) out.centers.push_back({c[0] * factor, c[1] * factor});
    return out;
}

PennyParams synthesize_penny_params(int n) {
    if (n < 6) throw ValidationError("penny parameters need n >= 6");

    PennyParams params;
    params.n = n;
    const double nd = n;
    params.a12 = 1.0 / (2.0 * nd * nd);
    params.b12 = 0.0;
    params.c12 = params.a12;
    params.b11 = nd;

    // c11 solves the cancellation at r = sqrt(2) n given the unit repulsion
    // at r = n; computed in log space so n >= 27 stays finite.
    const double v = (std::numbers::sqrt2 - 1.0) * nd * nd;
    const double log_denom = v + std::log1p(-8.0 * std::exp(-v));
    const double log_c11 = std::log(8.0) + 6.0 * std::log(nd) - log_denom;
    params.c11 = std::exp(log_c11);
    params.log_a11 = nd * nd + std::log1p(std::exp(std::log(8.0) - log_denom));
    params.a11 = std::exp(params.log_a11);  // +inf for large n; log mirror rules
    return params;
}

double penny_goal_energy(int k, const PennyParams& params) {
    const double within =
        params.a12 / std::exp(params.b12) - params.c12 - 1.0;
    return static_cast<double>(k - 1) * within;
}

namespace {

// The pair-pair interaction terms certified below, at horizontal distance r:
// one same-plane interaction (charge product +1, distance r) plus one
// cross-plane interaction (charge product -1, distance rhat = sqrt(r^2+1)).
double far_energy(const PennyParams& p, double log_a12, double r) {
    const double rhat = std::sqrt(r * r + 1.0);
    const double r6 = r * r * r * r * r * r;
    const double rhat6 = rhat * rhat * rhat * rhat * rhat * rhat;
    const double same = std::exp(p.log_a11 - p.b11 * r) - p.c11 / r6 + 1.0 / r;
    const double cross = std::exp(log_a12 - p.b12 * rhat) - p.c12 / rhat6 - 1.0 / rhat;
    return same + cross;
}

}  // namespace

PennyCertificate certify_inequalities(const PennyParams& params, double r_max) {
    const double nd = params.n;
    const double lo = std::numbers::sqrt2 * nd;
    if (!(r_max > lo))
        throw ValidationError("r_max must exceed sqrt(2) * n");

    const double log_a12 = std::log(params.a12);
    const double magnitude =
        std::abs(params.a12 / std::exp(params.b12) - params.c12 - 1.0);

    PennyCertificate cert;
    cert.r_lo = lo;
    cert.r_hi = r_max;
    constexpr int kGridPoints = 10'001;  // 10^4 intervals, endpoints included
    cert.grid_points = kGridPoints;

    InequalityReport near;
    near.id = 1;
    near.at_r = nd;
    near.worst_margin = far_energy(params, log_a12, nd) - magnitude;
    near.pass = near.worst_margin >= 0.0;

    InequalityReport far_small;
    far_small.id = 2;
    far_small.worst_margin = std::numeric_limits<double>::infinity();
    InequalityReport far_positive;
    far_positive.id = 3;
    far_positive.worst_margin = std::numeric_limits<double>::infinity();
    cert.term_a_margin = std::numeric_limits<double>::infinity();
    cert.term_c_margin = std::numeric_limits<double>::infinity();

    for (int i = 0; i < kGridPoints; ++i) {
        const double r =
            lo + (r_max - lo) * static_cast<double>(i) / (kGridPoints - 1);
        const double u = far_energy(params, log_a12, r);

        const double m2 = magnitude - nd * nd * std::abs(u);
        if (m2 < far_small.worst_margin) {
            far_small.worst_margin = m2;
            far_small.at_r = r;
        }
        if (u < far_positive.worst_margin) {
            far_positive.worst_margin = u;
            far_positive.at_r = r;
        }

        // Per-term bounds behind the far-field argument, reported as extra
        // diagnostics: repulsion and dispersion each small enough on their own.
        const double rhat = std::sqrt(r * r + 1.0);
        const double coulomb_gap = 1.0 / r - 1.0 / rhat;
        const double term_a = (params.a12 - coulomb_gap) -
                              std::exp(params.log_a11 - params.b11 * r);
        const double term_c = coulomb_gap - params.c11 / (r * r * r * r * r * r);
        cert.term_a_margin = std::min(cert.term_a_margin, term_a);
        cert.term_c_margin = std::min(cert.term_c_margin, term_c);
    }
    far_small.pass = far_small.worst_margin >= 0.0;
    far_positive.pass = far_positive.worst_margin > 0.0;

    cert.inequalities = {near, far_small, far_positive};
    cert.pass = near.pass && far_small.pass && far_positive.pass;
    return cert;
}

ReductionOutput build_two_plane_instance(const PennyRealization& p, int k) {
    validate_penny_realization(p);  // adjacency is recomputed after scaling

    const int n_real = p.size();
    const int pad = std::max(0, 6 - n_real);
    const int n = n_real + pad;
    if (k < 1 || k > n)
        throw ValidationError("independent-set target k must satisfy 1 <= k <= padded count");

    PennyRealization scaled = scale_realization(p, n);
    const double spacing = static_cast<double>(n);

    // Isolated pad pennies on a row 2n below the bounding box, 2n apart.
    if (pad > 0) {
        double min_x = 0.0, min_y = 0.0;
        if (n_real > 0) {
            min_x = scaled.centers.front()[0];
            min_y = scaled.centers.front()[1];
            for (const auto& c : scaled.centers) {
                min_x = std::min(min_x, c[0]);
                min_y = std::min(min_y, c[1]);
            }
        }
        for (int i = 0; i < pad; ++i)
            scaled.centers.push_back(
                {min_x + 2.0 * spacing * static_cast<double>(i), min_y - 2.0 * spacing});
    }

    const SimpleGraph adjacency = validate_penny_realization(scaled);
    const double eps = penny_geom_eps(scaled);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = center_distance(scaled.centers[static_cast<std::size_t>(i)],
                                             scaled.centers[static_cast<std::size_t>(j)]);
            if (adjacency.has_edge(i, j)) {
                if (std::abs(d - spacing) > eps)
                    throw ScalingMismatchError("tangency distance is off after rescaling");
            } else if (d < std::numbers::sqrt2 * spacing - eps) {
                throw BuildError("non-adjacent pennies " + std::to_string(i) + " and " +
                                 std::to_string(j) +
                                 " are closer than sqrt(2) times the tangency distance");
            }
        }
    }

    const PennyParams params = synthesize_penny_params(n);

    ReductionOutput out;
    for (int i = 0; i < n; ++i) {
        const auto& c = scaled.centers[static_cast<std::size_t>(i)];
        const std::string label =
            i < n_real ? "v" + std::to_string(i) : "pad" + std::to_string(i - n_real);
        out.instance.graph.ions.push_back(Ion{2 * i, "p", +1, {c[0], c[1], 0.0}, label});
        out.instance.graph.ions.push_back(Ion{2 * i + 1, "n", -1, {c[0], c[1], 1.0}, label});
        if (i < n_real) {
            out.decode[2 * i] = i;
            out.decode[2 * i + 1] = i;
        }
    }

    BuckinghamCoulombSpec ff;
    ForceFieldEntry same;
    same.a = params.a11;
    same.b = params.b11;
    same.c = params.c11;
    same.log_a = params.log_a11;
    ForceFieldEntry cross;
    cross.a = params.a12;
    cross.b = params.b12;
    cross.c = params.c12;
    ff.table[make_species_pair("p", "p")] = same;
    ff.table[make_species_pair("n", "n")] = same;
    ff.table[make_species_pair("p", "n")] = cross;
    out.instance.graph.energy = std::move(ff);

    out.instance.variant = Variant::ExactK;
    out.instance.k = n - k;
    out.instance.goal = penny_goal_energy(k, params);

    out.notes = {{"n_real", n_real},
                 {"pad", pad},
                 {"n", n},
                 {"k", k},
                 {"k_prime", n - k},
                 {"goal", out.instance.goal.value()},
                 {"tangency_distance", spacing}};
    return out;
}

}  // namespace kcr
