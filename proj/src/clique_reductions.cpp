#include <kcr/clique_reductions.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include <kcr/synthesis.hpp>

namespace kcr {

namespace {

// Shared 2n-ion skeleton: one +c/-c ion pair per vertex, rows y=0 and y=1.
std::vector<Ion> vertex_ions(int n, std::int64_t cpos, std::int64_t cneg) {
    std::vector<Ion> ions;
    ions.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        ions.push_back(Ion{2 * i, "s" + std::to_string(2 * i), cpos,
                           {static_cast<double>(i), 0.0, 0.0}, "v" + std::to_string(i)});
        ions.push_back(Ion{2 * i + 1, "s" + std::to_string(2 * i + 1), cneg,
                           {static_cast<double>(i), 1.0, 0.0}, "v" + std::to_string(i)});
    }
    return ions;
}

void check_clique_args(const SimpleGraph& g, int k, std::int64_t c) {
    if (g.size() < 1) throw ValidationError("clique reduction needs at least one vertex");
    if (k < 1 || k > g.size())
        throw ValidationError("clique size k must satisfy 1 <= k <= n");
    if (c < 1) throw ValidationError("charge magnitude c must be >= 1");
}

}  // namespace

ReductionOutput reduce_clique_to_kcr(const SimpleGraph& g, int k, std::int64_t c) {
    check_clique_args(g, k, c);
    const int n = g.size();

    ReductionOutput out;
    out.instance.graph.ions = vertex_ions(n, c, -c);

    std::vector<PairTarget> targets;
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = a + 1; b < 2 * n; ++b) {
            const int va = a / 2, vb = b / 2;
            const bool keep = (va == vb) || g.has_edge(va, vb);
            targets.push_back({a, b, keep ? ExtReal(-1.0) : ExtReal::infinity()});
        }
    }
    out.instance.graph.energy = build_pair_table(targets);

    const std::int64_t k_prime = c * static_cast<std::int64_t>(n - k);
    const double goal = -static_cast<double>(k) * (2.0 * k - 1.0);
    out.instance.variant = Variant::ExactK;
    out.instance.k = k_prime;
    out.instance.goal = goal;

    for (int i = 0; i < n; ++i) {
        out.decode[2 * i] = i;
        out.decode[2 * i + 1] = i;
    }
    out.notes = {{"n", n}, {"k", k}, {"c", c}, {"k_prime", k_prime}, {"goal", goal}};
    return out;
}

ReductionOutput reduce_max_weight_clique_to_kcr(const SimpleGraph& g, int k, double v,
                                                std::int64_t c) {
    check_clique_args(g, k, c);
    const int n = g.size();

    double max_w = 0.0;
    for (const auto& [edge, w] : g.edges()) max_w = std::max(max_w, w.value_or(1.0));
    const double cap = 1.0 + max_w;

    ReductionOutput out;
    out.instance.graph.ions = vertex_ions(n, c, -c);

    // Each source edge spans four ion pairs; a quarter of its weight on each
    // makes the edge count exactly once in any surviving configuration.
    std::vector<PairTarget> targets;
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = a + 1; b < 2 * n; ++b) {
            const int va = a / 2, vb = b / 2;
            ExtReal e = ExtReal::infinity();
            if (va == vb)
                e = -cap;
            else if (g.has_edge(va, vb))
                e = -g.weight(va, vb) / 4.0;
            targets.push_back({a, b, e});
        }
    }
    out.instance.graph.energy = build_pair_table(targets);

    const std::int64_t k_prime = c * static_cast<std::int64_t>(n - k);
    const double goal = -static_cast<double>(k) * cap - v;
    out.instance.variant = Variant::ExactK;
    out.instance.k = k_prime;
    out.instance.goal = goal;

    for (int i = 0; i < n; ++i) {
        out.decode[2 * i] = i;
        out.decode[2 * i + 1] = i;
    }
    out.notes = {{"n", n},   {"k", k},           {"c", c},      {"cap", cap},
                 {"v", v},   {"k_prime", k_prime}, {"goal", goal}};
    return out;
}

ReductionOutput reduce_clique_arbitrary_charges(const SimpleGraph& g, int k,
                                                const std::vector<std::int64_t>& charges) {
    check_clique_args(g, k, 1);
    const int n = g.size();

    std::set<std::int64_t> pos, neg;  // magnitudes by sign
    for (std::int64_t q : charges) {
        if (q > 0) pos.insert(q);
        if (q < 0) neg.insert(-q);
    }
    if (pos.empty() || neg.empty())
        throw NoBalancedSolutionError("charge set has no opposite-signed pair");

    // Matched magnitudes reduce to the plain gadget.
    std::vector<std::int64_t> matched;
    std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(),
                          std::back_inserter(matched));
    if (!matched.empty()) {
        ReductionOutput out = reduce_clique_to_kcr(g, k, matched.front());
        out.notes["delegated"] = true;
        return out;
    }

    // Pick (c, d), c the larger magnitude, minimizing |c|-|d|; ties prefer the
    // smaller |c|. After the delegation check (hi, lo) determines the pair.
    std::int64_t cm = 0, dm = 0;
    std::int64_t cpos = 0, cneg = 0;  // row charges (+ row, - row)
    bool have = false;
    for (std::int64_t p : pos) {
        for (std::int64_t m : neg) {
            const std::int64_t hi = std::max(p, m), lo = std::min(p, m);
            if (!have || hi - lo < cm - dm || (hi - lo == cm - dm && hi < cm)) {
                have = true;
                cm = hi;
                dm = lo;
                cpos = p;
                cneg = -m;
            }
        }
    }

    const std::int64_t c_charge = (cpos == cm) ? cm : -cm;  // larger magnitude, signed
    const std::int64_t d_charge = (cpos == cm) ? -dm : dm;

    // Zero-energy dummies restoring neutrality around a surviving k-clique:
    // t_c|c| = t and t_d|d| = k(|c|-|d|) + t, smallest nonnegative solution.
    const std::int64_t diff = cm - dm;
    std::int64_t t = 0;
    while ((k * diff + t) % dm != 0) t += cm;
    const std::int64_t t_c = t / cm;
    const std::int64_t t_d = (k * diff + t) / dm;

    // Forbidden dummies absorbing the slack: u = |c|(u_c + t_c) and
    // u + n(|c|-|d|) = |d|(u_d + t_d), smallest u >= t.
    std::int64_t u = t;
    std::int64_t guard = 0;
    while ((u + n * diff) % dm != 0 || (u + n * diff) / dm < t_d) {
        u += cm;
        if (++guard > 1'000'000)
            throw NoBalancedSolutionError("dummy-count search did not terminate");
    }
    const std::int64_t u_c = u / cm - t_c;
    const std::int64_t u_d = (u + n * diff) / dm - t_d;

    ReductionOutput out;
    out.instance.graph.ions = vertex_ions(n, cpos, cneg);
    int next_id = 2 * n;
    auto add_dummies = [&](std::int64_t count, std::int64_t q, double row,
                           const std::string& tag) {
        for (std::int64_t i = 0; i < count; ++i) {
            out.instance.graph.ions.push_back(Ion{next_id, "s" + std::to_string(next_id), q,
                                                  {static_cast<double>(i), row, 0.0},
                                                  tag + std::to_string(i)});
            ++next_id;
        }
    };
    const int first_zero = next_id;
    add_dummies(t_c, c_charge, 2.0, "t");
    add_dummies(t_d, d_charge, 3.0, "t");
    const int first_forbidden = next_id;
    add_dummies(u_c, c_charge, 4.0, "u");
    add_dummies(u_d, d_charge, 5.0, "u");
    const int total = next_id;

    std::vector<PairTarget> targets;
    for (int a = 0; a < total; ++a) {
        for (int b = a + 1; b < total; ++b) {
            ExtReal e(0.0);
            if (b >= first_forbidden) {
                e = ExtReal::infinity();
            } else if (b >= first_zero) {
                e = 0.0;
            } else {
                const int va = a / 2, vb = b / 2;
                e = (va == vb || g.has_edge(va, vb)) ? ExtReal(-1.0) : ExtReal::infinity();
            }
            targets.push_back({a, b, e});
        }
    }
    out.instance.graph.energy = build_pair_table(targets);

    const std::int64_t k_prime = cm * (static_cast<std::int64_t>(n) + u_c - k);
    const double goal = -static_cast<double>(k) * (2.0 * k - 1.0);
    out.instance.variant = Variant::ExactK;
    out.instance.k = k_prime;
    out.instance.goal = goal;

    for (int i = 0; i < n; ++i) {
        out.decode[2 * i] = i;
        out.decode[2 * i + 1] = i;
    }
    out.notes = {{"n", n},     {"k", k},     {"c", c_charge}, {"d", d_charge},
                 {"t", t},     {"t_c", t_c}, {"t_d", t_d},    {"u", u},
                 {"u_c", u_c}, {"u_d", u_d}, {"k_prime", k_prime}, {"goal", goal},
                 {"delegated", false}};
    return out;
}

MinimalityGadget build_minimality_gadget(const std::vector<std::int64_t>& s, std::int64_t k) {
    if (s.empty()) throw ValidationError("element list must be nonempty");
    std::int64_t sum = 0;
    for (std::int64_t v : s) {
        if (v <= 0) throw ValidationError("element values must be positive");
        sum += v;
    }
    if (k <= 0 || k >= sum)
        throw ValidationError("target must satisfy 0 < k < sum (both negatives nonzero)");

    MinimalityGadget out;
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i)
        out.instance.graph.ions.push_back(Ion{i, "s" + std::to_string(i),
                                              s[static_cast<std::size_t>(i)],
                                              {static_cast<double>(i), 0.0, 0.0},
                                              "e" + std::to_string(i)});
    out.instance.graph.ions.push_back(
        Ion{n, "s" + std::to_string(n), -k, {0.0, 1.0, 0.0}, "neg0"});
    out.instance.graph.ions.push_back(
        Ion{n + 1, "s" + std::to_string(n + 1), -(sum - k), {1.0, 1.0, 0.0}, "neg1"});

    std::vector<PairTarget> targets;
    for (int a = 0; a < n + 2; ++a)
        for (int b = a + 1; b < n + 2; ++b) targets.push_back({a, b, 0.0});
    out.instance.graph.energy = build_pair_table(targets);

    const std::int64_t k_prime = std::max(k, sum - k);
    out.instance.variant = Variant::MinimalAtLeastK;
    out.instance.k = k_prime;
    out.instance.goal = 0.0;

    for (int i = 0; i < n + 2; ++i) out.claimed_removed.push_back(i);
    out.notes = {{"sum", sum}, {"k", k}, {"k_prime", k_prime}};
    return out;
}

WeightedCliqueEmbedding embed_kcr_into_weighted_k_clique(const RemovalInstance& inst) {
    if (inst.variant == Variant::AtLeastK)
        throw ValidationError("embedding covers the exact and minimal variants only");

    std::vector<int> pos, neg;
    std::int64_t c = 0;
    for (const auto& ion : inst.graph.ions) {
        const std::int64_t mag = std::abs(ion.charge);
        if (c == 0) c = mag;
        if (mag != c)
            throw ValidationError("embedding requires uniform charge magnitudes");
        (ion.charge > 0 ? pos : neg).push_back(ion.id);
    }
    if (pos.empty() || neg.empty())
        throw ValidationError("embedding needs both positive and negative ions");
    if (inst.k % c != 0)
        throw ValidationError("k is not a multiple of the charge magnitude; no exact removal exists");

    const auto npos = static_cast<std::int64_t>(pos.size());
    const std::int64_t k_prime = npos - inst.k / c;
    if (k_prime <= 1)
        throw ValidationError("surviving pair count k' must be >= 2 (weights divide by k'-1)");

    WeightedCliqueEmbedding out;
    for (int p : pos)
        for (int q : neg) out.vertices.emplace_back(p, q);
    const int m = static_cast<int>(out.vertices.size());
    out.graph = SimpleGraph(m);

    auto energy = [&](int i, int j) {
        const ExtReal e = pairwise_energy(inst.graph, i, j);
        if (e.is_infinite())
            throw ValidationError("embedding requires finite pairwise energies");
        return e.value();
    };

    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const auto [i, kk] = out.vertices[static_cast<std::size_t>(a)];
            const auto [j, ll] = out.vertices[static_cast<std::size_t>(b)];
            if (i == j || kk == ll) continue;  // shared ion, never co-survives
            const double w = -(energy(i, j) + energy(i, ll) + energy(j, kk) + energy(kk, ll) +
                               (energy(i, kk) + energy(j, ll)) /
                                   static_cast<double>(k_prime - 1));
            out.graph.add_edge(a, b, w);
        }
    }

    out.k = static_cast<int>(k_prime);
    out.goal_weight = inst.goal.is_infinite() ? -std::numeric_limits<double>::infinity()
                                              : -inst.goal.value();
    out.notes = {{"k_clique", k_prime}, {"pair_count", npos}, {"c", c}};
    // JSON has no -inf literal; mirror the "inf" string convention.
    if (inst.goal.is_infinite()) {
        out.notes["goal_weight"] = "-inf";
    } else {
        out.notes["goal_weight"] = out.goal_weight;
    }
    return out;
}

}  // namespace kcr
