#include "nsurf/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace nsurf {

Theorem1Result check_theorem1(const SurfaceInvariants& inv)
{
    Theorem1Result r;
    r.vacuous = inv.disks == 0;
    r.closed_surface = inv.closed;
    if (r.vacuous)
        return r;
    r.margin = inv.chi - (2 - 7 * inv.quads);
    r.holds = r.margin >= 0;
    if (inv.component_count() == 1) {
        const auto& t = inv.components.front().topology;
        if (t.orientable && t.closed()) {
            r.genus_applicable = true;
            r.genus_margin = 7 * inv.quads - 2 * t.genus;
            r.genus_holds = r.genus_margin >= 0;
        }
    }
    return r;
}

Theorem2Result check_theorem2(const SurfaceInvariants& inv, std::size_t max_degree)
{
    Theorem2Result r;
    r.applicable = inv.disks > 0 && !inv.has_vertex_linking_component();
    if (!r.applicable)
        return r;
    r.margin = 4 * static_cast<std::int64_t>(max_degree) * inv.quads - inv.triangles;
    r.holds = r.margin >= 0;
    return r;
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Caveat:
        return "caveat";
    case CheckStatus::NotApplicable:
        return "n/a";
    }
    return "unknown";
}

bool TheoremReport::hard_failure() const
{
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* TheoremReport::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "round_trip",       "classification", "weight_identity", "theorem1",    "vertex_link_equality",
        "genus_bound",      "theorem2",       "gamma_counting",  "claim1",      "claim2",
        "lemma1",           "lemma2",         "euler_split",     "boundary_match", "proof_chain",
        "planar_components", "vertex_link_remark",
    };
    return names;
}

namespace {

class Checker {
public:
    explicit Checker(TheoremReport& r) : r_(r) {}

    // `hard` is whether the hypotheses of the statement hold for this surface.
    void add(const std::string& name, bool applicable, bool holds, bool hard, std::string detail = {})
    {
        CheckStatus s = CheckStatus::NotApplicable;
        if (applicable)
            s = holds ? CheckStatus::Pass : (hard ? CheckStatus::Fail : CheckStatus::Caveat);
        r_.checks.push_back({name, s, std::move(detail)});
    }

private:
    TheoremReport& r_;
};

std::string fmt_ineq(std::int64_t lhs, const char* op, std::int64_t rhs)
{
    return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

} // namespace

TheoremReport analyze_surface(const Triangulation& tri, const Skeleton& skel, const MatchingSystem& m, const NormalVector& v)
{
    TheoremReport r;
    r.vector = v;
    r.closed_manifold = tri.is_closed();
    r.max_degree = max_vertex_degree(skel);
    r.nonempty = !v.is_zero();

    SurfaceComplex surf;
    try {
        surf = build_surface(tri, skel, m, v);
    } catch (const BuildError& e) {
        r.build_error = e.what();
        r.build_error_kind = e.kind();
        return r;
    }
    r.built = true;
    const auto& inv = r.invariants.emplace(invariants(surf, skel));
    r.closed_surface = inv.closed;
    r.theorem1 = check_theorem1(inv);
    r.theorem2 = check_theorem2(inv, r.max_degree);

    Checker ck(r);
    // statements about closed surfaces are enforced only in closed manifolds
    const bool closed_ctx = r.closed_manifold && r.closed_surface;
    const std::int64_t Q = inv.quads;
    const std::int64_t T = inv.triangles;
    const auto N = static_cast<std::int64_t>(r.max_degree);

    ck.add("round_trip", true, disk_multiplicities(surf) == v, true);
    {
        bool ok = true;
        std::string detail;
        for (std::size_t k = 0; k < inv.component_count(); ++k) {
            const auto& t = inv.components[k].topology;
            if (!t.classification_consistent || t.chi != t.chi_classified) {
                ok = false;
                detail = "component " + std::to_string(k) + ": cells give " + std::to_string(t.chi) + ", classification gives " +
                    std::to_string(t.chi_classified);
            }
        }
        ck.add("classification", true, ok, true, detail);
    }

    std::optional<Decomposition> dec;
    std::string decomposition_error;
    try {
        dec.emplace(decompose(surf, skel, inv));
    } catch (const DecompositionError& e) {
        decomposition_error = e.what();
    }

    if (dec) {
        ck.add("weight_identity", true, dec->weight.weight_b == 4 * Q, true, fmt_ineq(dec->weight.weight_b, "==", 4 * Q));
    } else {
        ck.add("weight_identity", true, weights(surf).weight_b == 4 * Q, true);
    }

    ck.add("theorem1", r.nonempty, r.theorem1.holds, closed_ctx, fmt_ineq(inv.chi, ">=", 2 - 7 * Q));
    const bool single_link = inv.component_count() == 1 && inv.components.front().vertex_linking;
    ck.add("vertex_link_equality", single_link, r.theorem1.margin == 0, closed_ctx, "margin " + std::to_string(r.theorem1.margin));
    ck.add("genus_bound", r.theorem1.genus_applicable, r.theorem1.genus_holds, closed_ctx,
           r.theorem1.genus_applicable ? fmt_ineq(2 * inv.components.front().topology.genus, "<=", 7 * Q) : std::string{});
    ck.add("theorem2", r.theorem2.applicable, r.theorem2.holds, closed_ctx, fmt_ineq(T, "<=", 4 * N * Q));

    if (r.theorem2.applicable && dec) {
        const auto& g = r.gamma.emplace(gamma_graph(surf, dec->components, inv));
        const auto deg = g.degrees();
        bool s_nonisolated = true;
        for (std::size_t i = g.q_vertices; i < deg.size(); ++i)
            s_nonisolated = s_nonisolated && deg[i] >= 1;
        const auto S = static_cast<std::int64_t>(g.s_vertices);
        const bool ok = static_cast<std::int64_t>(g.q_degree_total()) == 4 * Q && s_nonisolated &&
            4 * Q >= static_cast<std::int64_t>(g.s_degree_total()) && static_cast<std::int64_t>(g.s_degree_total()) >= S && N * S >= T;
        ck.add("gamma_counting", true, ok, closed_ctx,
               "deg(Q)=" + std::to_string(g.q_degree_total()) + " deg(S)=" + std::to_string(g.s_degree_total()) + " S=" + std::to_string(S));
    } else {
        ck.add("gamma_counting", false, true, closed_ctx);
    }

    if (!dec) {
        for (const auto* name : {"claim1", "claim2", "lemma1", "lemma2", "euler_split", "boundary_match", "proof_chain"})
            ck.add(name, false, true, closed_ctx);
        ck.add("planar_components", true, false, true, decomposition_error);
    } else {
        const auto a_count = static_cast<std::int64_t>(dec->a_prime_components);
        const auto a_bdry = static_cast<std::int64_t>(dec->a_prime_boundary);
        const auto omega = static_cast<std::int64_t>(dec->omega.size());
        const bool has_b = Q > 0;

        // chi of B' directly: B' = B plus disks at singular points deformation retracts to B
        std::set<std::size_t> b_points;
        std::set<std::size_t> b_arcs;
        for (auto d : dec->b_disks)
            for (std::size_t k = 0; k < surf.cells.faces[d].sides.size(); ++k) {
                b_arcs.insert(surf.cells.faces[d].sides[k].edge);
                b_points.insert(surf.cells.corner_vertex(d, k));
            }
        r.chi_b_prime_direct = static_cast<std::int64_t>(b_points.size()) - static_cast<std::int64_t>(b_arcs.size()) + Q;

        ck.add("claim1", r.nonempty, dec->chi_a_prime == 2 * a_count - a_bdry, closed_ctx, fmt_ineq(dec->chi_a_prime, "==", 2 * a_count - a_bdry));
        ck.add("claim2", has_b, 4 * Q >= a_bdry, closed_ctx, fmt_ineq(4 * Q, ">=", a_bdry));
        ck.add("lemma1", r.nonempty, dec->chi_a_prime >= 2 * a_count - 4 * Q, closed_ctx, fmt_ineq(dec->chi_a_prime, ">=", 2 * a_count - 4 * Q));
        const std::int64_t lemma2_bound = omega > 0 ? omega - 3 * Q : 4 - 3 * Q;
        ck.add("lemma2", has_b, dec->chi_b_prime >= lemma2_bound, closed_ctx, fmt_ineq(dec->chi_b_prime, ">=", lemma2_bound));
        ck.add("euler_split", r.nonempty, inv.chi == dec->chi_a_prime + r.chi_b_prime_direct, closed_ctx,
               fmt_ineq(inv.chi, "==", dec->chi_a_prime + r.chi_b_prime_direct));
        ck.add("boundary_match", has_b, dec->a_prime_boundary == dec->b_prime_boundary, closed_ctx,
               fmt_ineq(a_bdry, "==", static_cast<std::int64_t>(dec->b_prime_boundary)));
        if (has_b) {
            const std::int64_t bound = (2 * a_count - 4 * Q) + lemma2_bound;
            ck.add("proof_chain", r.nonempty, inv.chi >= bound && bound >= 2 - 7 * Q, closed_ctx,
                   "chi " + std::to_string(inv.chi) + ", lemma bound " + std::to_string(bound) + ", theorem bound " + std::to_string(2 - 7 * Q));
        } else {
            ck.add("proof_chain", r.nonempty, inv.chi == 2 * a_count, closed_ctx, fmt_ineq(inv.chi, "==", 2 * a_count));
        }

        bool planar = true;
        std::string detail;
        for (const auto& comp : dec->components) {
            const auto split = dec->a_prime.partition.face_component[static_cast<std::size_t>(
                std::find(dec->a_prime.disk_of_face.begin(), dec->a_prime.disk_of_face.end(), comp.disks.front()) -
                dec->a_prime.disk_of_face.begin())];
            const bool ok = comp.disks.size() <= skel.corner_count(comp.linked_vertex) && dec->a_prime.topology[split].planar();
            if (!ok) {
                planar = false;
                detail = std::to_string(comp.disks.size()) + " triangles at vertex " + std::to_string(comp.linked_vertex) + " (N_v " +
                    std::to_string(skel.corner_count(comp.linked_vertex)) + ")";
            }
        }
        ck.add("planar_components", !dec->components.empty(), planar, true, detail);
        r.decomposition = std::move(dec);
    }

    {
        bool ok = true;
        bool any = false;
        for (const auto& comp : inv.components) {
            if (comp.quads == 0 && comp.topology.closed()) {
                any = true;
                ok = ok && comp.vertex_linking;
            }
        }
        ck.add("vertex_link_remark", any, ok, true);
    }
    return r;
}

BatchSummary summarize(const Triangulation& tri, const Skeleton& skel, const EnumerationConfig& cfg, const std::vector<TheoremReport>& reports)
{
    BatchSummary s;
    s.tet_count = tri.size();
    s.closed_manifold = tri.is_closed();
    s.max_degree = max_vertex_degree(skel);
    s.config = cfg;
    for (const auto& name : check_names())
        s.tallies[name];
    for (const auto& r : reports) {
        if (!r.nonempty) {
            ++s.zero_vectors;
            continue;
        }
        ++s.surfaces;
        if (!r.built) {
            s.build_failures.emplace_back(r.vector, r.build_error);
            continue;
        }
        ++s.built;
        if (r.invariants->has_vertex_linking_component())
            ++s.vertex_linking_surfaces;
        Violation hard{r.vector, {}};
        Violation soft{r.vector, {}};
        for (const auto& c : r.checks) {
            auto& t = s.tallies[c.name];
            switch (c.status) {
            case CheckStatus::Pass:
                ++t.pass;
                break;
            case CheckStatus::Fail:
                ++t.fail;
                hard.checks.push_back(c.name);
                break;
            case CheckStatus::Caveat:
                ++t.caveat;
                soft.checks.push_back(c.name);
                break;
            case CheckStatus::NotApplicable:
                ++t.not_applicable;
                break;
            }
        }
        if (!hard.checks.empty())
            s.violations.push_back(std::move(hard));
        if (!soft.checks.empty())
            s.caveats.push_back(std::move(soft));
        if (!s.min_theorem1_margin || r.theorem1.margin < *s.min_theorem1_margin)
            s.min_theorem1_margin = r.theorem1.margin;
        if (r.theorem2.applicable && (!s.min_theorem2_margin || r.theorem2.margin < *s.min_theorem2_margin))
            s.min_theorem2_margin = r.theorem2.margin;
    }
    return s;
}

BatchSummary verify_batch(const Triangulation& tri, const Skeleton& skel, const EnumerationConfig& cfg)
{
    const auto m = build_matching_system(tri, skel);
    const auto vectors = enumerate_admissible(m, cfg);
    std::vector<TheoremReport> reports(vectors.size());
    const unsigned jobs = std::max(1u, cfg.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < vectors.size(); i = next++)
            reports[i] = analyze_surface(tri, skel, m, vectors[i]);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return summarize(tri, skel, cfg, reports);
}

} // namespace nsurf
