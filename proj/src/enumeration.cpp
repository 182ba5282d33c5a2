#include "nsurf/enumeration.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace nsurf {

const char* to_string(FundamentalMode mode)
{
    return mode == FundamentalMode::AllSolutions ? "all-solutions" : "admissible-summands";
}

double nominal_search_size(std::size_t tet_count, std::int64_t max_coordinate)
{
    const double b = static_cast<double>(max_coordinate);
    const double per_tet = std::pow(b + 1.0, 4.0) * (1.0 + 3.0 * b);
    return std::pow(per_tet, static_cast<double>(tet_count));
}

namespace {

// Depth-first search over coordinates in index order. A row is checked when
// its last coordinate is assigned, which then has at most one feasible value.
class Search {
public:
    Search(const MatchingSystem& m, std::span<const std::int64_t> upper, bool admissible)
        : upper_(upper), admissible_(admissible), touching_(upper.size()), completing_(upper.size()), partial_(m.rows.size(), 0),
          cur_(m.tet_count)
    {
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            const auto& terms = m.rows[r].terms;
            if (terms.empty())
                continue;
            for (const auto& [coord, coeff] : terms)
                touching_[coord].push_back({r, coeff});
            completing_[terms.back().first].push_back({r, terms.back().second});
        }
    }

    std::size_t size() const { return upper_.size(); }

    // Runs the search below a fixed prefix of assigned coordinates.
    bool run(std::span<const std::int64_t> prefix, std::size_t stop_depth, const std::function<bool(const NormalVector&)>& visit)
    {
        std::fill(partial_.begin(), partial_.end(), 0);
        for (std::size_t i = 0; i < prefix.size(); ++i)
            assign(i, prefix[i]);
        const bool go_on = dfs(prefix.size(), stop_depth, visit);
        for (std::size_t i = 0; i < prefix.size(); ++i)
            assign(i, 0);
        return go_on;
    }

private:
    struct Term {
        std::size_t row;
        std::int64_t coeff;
    };

    void assign(std::size_t i, std::int64_t x)
    {
        const std::int64_t delta = x - cur_[i];
        if (delta == 0)
            return;
        for (const auto& t : touching_[i])
            partial_[t.row] += t.coeff * delta;
        cur_[i] = x;
    }

    bool quad_blocked(std::size_t i) const
    {
        if (!admissible_ || i % kDiskTypes < 4)
            return false;
        for (std::size_t j = i - i % kDiskTypes + 4; j < i; ++j)
            if (cur_[j] != 0)
                return true;
        return false;
    }

    bool dfs(std::size_t i, std::size_t stop_depth, const std::function<bool(const NormalVector&)>& visit)
    {
        if (i == stop_depth)
            return visit(cur_);
        std::int64_t lo = 0;
        std::int64_t hi = quad_blocked(i) ? 0 : upper_[i];
        for (const auto& t : completing_[i]) {
            const std::int64_t need = -partial_[t.row];
            if (need % t.coeff != 0)
                return true;
            const std::int64_t x = need / t.coeff;
            lo = std::max(lo, x);
            hi = std::min(hi, x);
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            assign(i, x);
            const bool go_on = dfs(i + 1, stop_depth, visit);
            assign(i, 0);
            if (!go_on)
                return false;
        }
        return true;
    }

    std::span<const std::int64_t> upper_;
    bool admissible_;
    std::vector<std::vector<Term>> touching_;
    std::vector<std::vector<Term>> completing_;
    std::vector<std::int64_t> partial_;
    NormalVector cur_;
};

} // namespace

void search_solutions(const MatchingSystem& m, std::span<const std::int64_t> upper, bool admissible,
                      const std::function<bool(const NormalVector&)>& visit)
{
    if (upper.size() != kDiskTypes * m.tet_count)
        throw CoordinateError("search bound has " + std::to_string(upper.size()) + " entries, expected " + std::to_string(kDiskTypes * m.tet_count));
    Search s(m, upper, admissible);
    s.run({}, s.size(), visit);
}

std::vector<NormalVector> enumerate_admissible(const MatchingSystem& m, const EnumerationConfig& cfg)
{
    if (cfg.max_coordinate < 1)
        throw std::invalid_argument("max coordinate must be at least 1");
    const double work = nominal_search_size(m.tet_count, cfg.max_coordinate);
    if (work > cfg.work_budget)
        throw WorkBudgetExceeded("search space of " + std::to_string(work) + " admissible branches exceeds the work budget of " +
                                 std::to_string(cfg.work_budget));

    const std::size_t n = kDiskTypes * m.tet_count;
    const std::vector<std::int64_t> upper(n, cfg.max_coordinate);

    auto keep = [&](const NormalVector& v) {
        if (v.is_zero())
            return cfg.include_zero;
        return !cfg.fundamental_only || is_fundamental(v, m, cfg.fundamental_mode);
    };

    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1 || m.tet_count < 2) {
        std::vector<NormalVector> out;
        search_solutions(m, upper, true, [&](const NormalVector& v) {
            if (keep(v))
                out.push_back(v);
            return true;
        });
        return out;
    }

    // Split on the first tetrahedron's coordinates; concatenating the
    // per-prefix results in prefix order preserves lexicographic order.
    std::vector<std::vector<std::int64_t>> prefixes;
    {
        Search s(m, upper, true);
        s.run({}, kDiskTypes, [&](const NormalVector& v) {
            prefixes.emplace_back(v.entries().begin(), v.entries().begin() + kDiskTypes);
            return true;
        });
    }
    std::vector<std::vector<NormalVector>> parts(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Search s(m, upper, true);
        for (std::size_t p = next++; p < prefixes.size(); p = next++) {
            s.run(prefixes[p], n, [&](const NormalVector& v) {
                if (keep(v))
                    parts[p].push_back(v);
                return true;
            });
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    std::vector<NormalVector> out;
    for (auto& part : parts)
        for (auto& v : part)
            out.push_back(std::move(v));
    return out;
}

bool is_fundamental(const NormalVector& v, const MatchingSystem& m, FundamentalMode mode)
{
    if (v.is_zero())
        return false;
    const bool admissible = mode == FundamentalMode::AdmissibleSummands;
    bool decomposable = false;
    search_solutions(m, v.entries(), admissible, [&](const NormalVector& u) {
        if (u.is_zero() || u == v)
            return true;
        if (admissible) {
            NormalVector rest = v;
            for (std::size_t i = 0; i < v.size(); ++i)
                rest[i] -= u[i];
            if (!is_admissible(rest))
                return true;
        }
        decomposable = true;
        return false;
    });
    return !decomposable;
}

bool is_fundamental(const NormalVector& v, const std::vector<NormalVector>& solutions)
{
    if (v.is_zero())
        return false;
    const std::set<NormalVector> known(solutions.begin(), solutions.end());
    for (const auto& u : solutions) {
        if (u.size() != v.size() || u.is_zero() || u == v)
            continue;
        bool below = true;
        for (std::size_t i = 0; i < v.size() && below; ++i)
            below = u[i] <= v[i];
        if (!below)
            continue;
        NormalVector rest = v;
        for (std::size_t i = 0; i < v.size(); ++i)
            rest[i] -= u[i];
        if (known.count(rest) != 0)
            return false;
    }
    return true;
}

NormalVector vertex_link_vector(const Skeleton& skel, std::size_t vertex)
{
    if (vertex >= skel.vertex_count())
        throw std::out_of_range("unknown vertex class " + std::to_string(vertex));
    NormalVector v(skel.tet_count);
    for (const auto& corner : skel.vertex_members[vertex])
        v[DiskType::triangle(corner.tet, corner.face).coordinate()] += 1;
    return v;
}

} // namespace nsurf
