#include <ech/isoperimetric.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace ech {

namespace {

// ---------------------------------------------------------------------------
// Cost policies. Each provides an additive fast cost for pruning and an
// exact evaluation for decisions. The pruning contract: exceeds(a, b) may
// only return true when the true value behind a strictly exceeds the true
// value behind b, so strict pruning never loses a candidate tied with the
// optimum.

// Dual-norm costs are integers once Omega' is scaled; T is int64 when the
// magnitudes provably fit and cpp_int otherwise.
template <typename T>
struct DualPolicy {
    using Cost = T;
    using Exact = Rational;

    std::vector<std::pair<T, T>> verts;
    Int denom = 1;

    Cost zero() const { return T(0); }

    Cost edge_cost(LatticeVector e) const {
        T best = 0;
        bool first = true;
        for (const auto& [wx, wy] : verts) {
            T val = wx * T(e.x) + wy * T(e.y);
            if (first || val > best) {
                best = val;
                first = false;
            }
        }
        return best;
    }

    Cost close_lb(LatticeVector s) const {
        return s.is_zero() ? T(0) : edge_cost(-s);
    }

    static bool exceeds(const Cost& a, const Cost& b) { return a > b; }

    Exact exact_of(const LatticePolygon& p) const {
        T total = 0;
        for (const auto& e : p.edges()) total += edge_cost(e);
        return Rational(Int(total), denom);
    }

    Cost cost_of_exact(const Exact& v) const {
        Int scaled = v.numerator() * denom / v.denominator();
        if constexpr (std::is_same_v<T, Int>) {
            return scaled;
        } else {
            return scaled.convert_to<T>();
        }
    }

    std::int64_t max_radius(const Exact& budget, const Rational& inradius_lb) const {
        Rational r = budget / inradius_lb;
        return r.floor().convert_to<std::int64_t>() + 1;
    }
};

// Euclidean costs: fixed-point intervals (32 fractional bits) for pruning,
// exact SqrtSum values for decisions.
struct EuclidPolicy {
    struct Cost {
        std::uint64_t lo = 0, hi = 0;
        Cost operator+(const Cost& o) const { return {lo + o.lo, hi + o.hi}; }
        Cost& operator+=(const Cost& o) {
            lo += o.lo;
            hi += o.hi;
            return *this;
        }
    };
    using Exact = SqrtSum;
    static constexpr unsigned kFracBits = 32;

    Cost zero() const { return {}; }

    static Cost interval_sqrt(std::int64_t n) {
        if (n == 0) return {};
        Int t = boost::multiprecision::sqrt(Int(n) << (2 * kFracBits));
        std::uint64_t lo = t.convert_to<std::uint64_t>();
        return {lo, lo + 1};
    }

    Cost edge_cost(LatticeVector e) const {
        return interval_sqrt(e.x * e.x + e.y * e.y);
    }

    Cost close_lb(LatticeVector s) const {
        return interval_sqrt(s.x * s.x + s.y * s.y);
    }

    static bool exceeds(const Cost& a, const Cost& b) { return a.lo > b.hi; }

    Exact exact_of(const LatticePolygon& p) const { return euclidean_length(p); }

    Cost cost_of_exact(const Exact& v) const {
        Cost c;
        for (const auto& [s, coef] : v.terms()) {
            Cost t = interval_sqrt(s);
            Int p = coef.numerator(), q = coef.denominator();
            c.lo += ((Int(t.lo) * p) / q).convert_to<std::uint64_t>();
            c.hi += ((Int(t.hi) * p + q - 1) / q).convert_to<std::uint64_t>();
        }
        return c;
    }

    std::int64_t max_radius(const Exact& budget, const Rational&) const {
        return static_cast<std::int64_t>(std::floor(budget.to_double())) + 2;
    }
};

// ---------------------------------------------------------------------------

template <typename Policy>
struct Incumbent {
    std::mutex mutex;
    std::optional<typename Policy::Exact> exact;
    LatticePolygon witness;
    typename Policy::Cost fast{};
    std::atomic<std::uint64_t> version{0};

    // Stale reads of `fast` are safe: the bound only tightens over time and
    // pruning against it is strict.
    void offer(const Policy& policy, const typename Policy::Exact& value,
               const LatticePolygon& poly) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!exact || value < *exact) {
            exact = value;
            witness = poly;
            fast = policy.cost_of_exact(value);
            version.fetch_add(1, std::memory_order_release);
        } else if (value == *exact && poly < witness) {
            witness = poly;
        }
    }
};

// Candidate edge directions: all primitive vectors whose norm does not
// exceed the budget, sorted counterclockwise from (1,0).
template <typename Policy>
std::vector<LatticeVector> build_directions(const Policy& policy,
                                            const typename Policy::Exact& budget,
                                            const Rational& inradius_lb) {
    std::int64_t radius = policy.max_radius(budget, inradius_lb);
    typename Policy::Cost budget_cost = policy.cost_of_exact(budget);
    std::vector<LatticeVector> dirs;
    for (std::int64_t x = -radius; x <= radius; ++x) {
        for (std::int64_t y = -radius; y <= radius; ++y) {
            LatticeVector v{x, y};
            if (v.is_zero() || divisibility(v) != 1) continue;
            if (Policy::exceeds(policy.edge_cost(v), budget_cost)) continue;
            dirs.push_back(v);
        }
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    return dirs;
}

// One worker's depth-first search over angularly sorted edge multisets.
//
// State along a path: s = running edge sum, a2m = 2*Area + boundary count
// of the prefix (each new edge d*p adds d*(cross(s,p) + 1); both summands
// are nonnegative for prefixes in angle order), cost = prefix length. A
// closed nonempty selection with a2m == 2*count - 2 is a feasible polygon
// holding exactly `count` lattice points.
template <typename Policy>
struct Search {
    const Policy& policy;
    const std::vector<LatticeVector>& dirs;
    std::int64_t target_2am;  // -1 in enumerate mode
    Incumbent<Policy>& incumbent;
    bool collect_mode = false;
    std::vector<LatticePolygon>* sink = nullptr;

    std::vector<LatticeVector> chosen;
    typename Policy::Cost cached_bound{};
    std::uint64_t cached_version = ~0ull;

    void refresh() {
        std::uint64_t v = incumbent.version.load(std::memory_order_acquire);
        if (v != cached_version) {
            std::lock_guard<std::mutex> lock(incumbent.mutex);
            cached_bound = incumbent.fast;
            cached_version = v;
        }
    }

    void record(LatticeVector s, std::int64_t a2m) {
        if (!s.is_zero() || chosen.empty()) return;
        if (target_2am >= 0 && a2m != target_2am) return;
        LatticePolygon poly = LatticePolygon::from_edges(chosen);
        if (collect_mode) {
            auto value = policy.exact_of(poly);
            if (!(*incumbent.exact < value)) sink->push_back(std::move(poly));
        } else {
            incumbent.offer(policy, policy.exact_of(poly), poly);
        }
    }

    void dfs(std::size_t i, LatticeVector s, std::int64_t a2m,
             typename Policy::Cost cost) {
        if (i >= dirs.size()) return;
        refresh();
        if (Policy::exceeds(cost + policy.close_lb(s), cached_bound)) return;

        dfs(i + 1, s, a2m, cost);  // without direction i

        take(i, s, a2m, cost);
    }

    // Include direction i with every feasible divisibility, recursing past i.
    // Every nonempty selection is recorded exactly once: at the moment its
    // last edge is placed.
    void take(std::size_t i, LatticeVector s, std::int64_t a2m,
              typename Policy::Cost cost) {
        const LatticeVector p = dirs[i];
        const typename Policy::Cost unit = policy.edge_cost(p);
        // The edge d*p contributes cross(s, d*p) = d*cross(s,p) of doubled
        // fan area and d boundary points.
        const std::int64_t gain = cross(s, p) + 1;
        auto running = cost;
        for (std::int64_t d = 1;; ++d) {
            running += unit;
            std::int64_t a2m_next = a2m + d * gain;
            if (target_2am >= 0 && a2m_next > target_2am) break;
            LatticeVector s_next{s.x + d * p.x, s.y + d * p.y};
            refresh();
            if (Policy::exceeds(running, cached_bound)) break;
            if (!Policy::exceeds(running + policy.close_lb(s_next), cached_bound)) {
                chosen.push_back({d * p.x, d * p.y});
                record(s_next, a2m_next);
                dfs(i + 1, s_next, a2m_next, running);
                chosen.pop_back();
            }
        }
    }
};

// Feasible starting polygons: axis 2-gons and near-square axis rectangles
// rounded down to the exact lattice-point count.
std::vector<LatticePolygon> greedy_witnesses(std::int64_t count) {
    std::vector<LatticePolygon> out;
    std::int64_t len = count - 1;
    out.push_back(LatticePolygon::from_edges({{len, 0}, {-len, 0}}));
    out.push_back(LatticePolygon::from_edges({{0, len}, {0, -len}}));
    for (std::int64_t w = 1; w < count; ++w) {
        std::int64_t h = (count + w) / (w + 1) - 1;  // ceil(count/(w+1)) - 1
        if (h < 1) break;
        std::int64_t excess = (w + 1) * (h + 1) - count;
        if (excess < 0) continue;
        LatticePolygon poly =
            LatticePolygon::from_edges({{w, 0}, {0, h}, {-w, 0}, {0, -h}});
        bool ok = true;
        for (std::int64_t r = 0; r < excess; ++r) {
            if (poly.is_point()) {
                ok = false;
                break;
            }
            poly = round_corner(poly, 0);
        }
        if (ok && !poly.is_point()) out.push_back(poly);
    }
    return out;
}

template <typename Policy>
std::pair<typename Policy::Exact, LatticePolygon> run_minimize(
    const Policy& policy, std::int64_t count, int threads,
    const Rational& inradius_lb,
    const std::optional<typename Policy::Exact>& prune_hint = std::nullopt) {
    if (count < 1)
        throw std::invalid_argument("isoperimetric: lattice point count must be >= 1");
    if (count == 1) return {policy.exact_of(LatticePolygon()), LatticePolygon()};

    Incumbent<Policy> incumbent;
    for (const auto& g : greedy_witnesses(count))
        incumbent.offer(policy, policy.exact_of(g), g);

    typename Policy::Exact budget = *incumbent.exact;
    if (prune_hint && *prune_hint < budget) {
        budget = *prune_hint;
        std::lock_guard<std::mutex> lock(incumbent.mutex);
        incumbent.fast = policy.cost_of_exact(budget);
        incumbent.version.fetch_add(1, std::memory_order_release);
    }
    auto dirs = build_directions(policy, budget, inradius_lb);
    const std::int64_t target = 2 * count - 2;

    // Tasks are the choices of the angularly first edge direction; all
    // selections are covered exactly once.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        Search<Policy> search{policy, dirs, target, incumbent};
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= dirs.size()) break;
            search.take(i, LatticeVector{0, 0}, 0, policy.zero());
        }
    };
    int n_threads = std::max(1, threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return {*incumbent.exact, incumbent.witness};
}

}  // namespace

// ---------------------------------------------------------------------------

ToricMinimum minimize_omega_length(const RationalPolygon& omega_prime,
                                   std::int64_t enclosed_count, int threads,
                                   std::optional<Rational> prune_hint) {
    ScaledSupport support = ScaledSupport::of(omega_prime);
    Rational r_lb = omega_prime.inradius_lower_bound();

    // Magnitude check for the int64 fast path: |vertex| * |coordinate|
    // during the search stays below max_dot; coordinates are bounded by the
    // number of boundary points times the direction radius.
    Int max_vert = 1;
    for (const auto& [x, y] : support.vertices) {
        max_vert = std::max(max_vert, Int(abs(x)));
        max_vert = std::max(max_vert, Int(abs(y)));
    }
    DualPolicy<Int> probe{support.vertices, support.denom};
    Rational budget_probe(0);
    for (const auto& g : greedy_witnesses(std::max<std::int64_t>(enclosed_count, 2))) {
        Rational v = probe.exact_of(g);
        if (budget_probe.is_zero() || v < budget_probe) budget_probe = v;
    }
    Int radius = (budget_probe / r_lb).floor() + 1;
    Int bound = max_vert * radius * Int(4 * std::max<std::int64_t>(enclosed_count, 2));
    bool fits64 = bound < (Int(1) << 60);

    auto run = [&](const auto& policy) {
        auto [value, witness] =
            run_minimize(policy, enclosed_count, threads, r_lb, prune_hint);
        if (prune_hint && *prune_hint < value) {
            // The hint restricted the search below the optimum; redo with
            // the self-certified greedy bound only.
            auto [v2, w2] = run_minimize(policy, enclosed_count, threads, r_lb);
            return ToricMinimum{v2, w2};
        }
        return ToricMinimum{value, witness};
    };

    if (fits64) {
        DualPolicy<std::int64_t> policy;
        policy.denom = support.denom;
        for (const auto& [x, y] : support.vertices)
            policy.verts.emplace_back(x.convert_to<std::int64_t>(),
                                      y.convert_to<std::int64_t>());
        return run(policy);
    }
    DualPolicy<Int> policy{support.vertices, support.denom};
    return run(policy);
}

EuclideanMinimum minimize_euclidean_length(std::int64_t enclosed_count, int threads) {
    EuclidPolicy policy;
    auto [value, witness] =
        run_minimize(policy, enclosed_count, threads, Rational(1));
    return EuclideanMinimum{value, witness};
}

std::vector<LatticePolygon> polygons_within_euclidean_length(const Rational& cutoff) {
    if (cutoff.is_negative())
        throw std::invalid_argument("polygons_within_euclidean_length: negative cutoff");
    EuclidPolicy policy;
    Incumbent<EuclidPolicy> bound_holder;
    bound_holder.exact = SqrtSum(cutoff);
    bound_holder.fast = policy.cost_of_exact(*bound_holder.exact);
    bound_holder.version.store(1);

    std::vector<LatticePolygon> out;
    out.push_back(LatticePolygon());  // the point

    auto dirs = build_directions(policy, *bound_holder.exact, Rational(1));
    Search<EuclidPolicy> search{policy, dirs, -1, bound_holder, true, &out};
    search.dfs(0, LatticeVector{0, 0}, 0, policy.zero());

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ech
