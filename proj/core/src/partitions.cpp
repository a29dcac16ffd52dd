#include <ech/partitions.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ech {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (auto p : parts_)
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t Partition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> all_partitions(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("all_partitions: m must be >= 0");
    std::vector<Partition> out;
    std::vector<std::int64_t> current;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left,
                                                              std::int64_t cap) {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::int64_t next = std::min(left, cap); next >= 1; --next) {
            current.push_back(next);
            rec(left - next, next);
            current.pop_back();
        }
    };
    rec(m, m);
    return out;
}

namespace {

void require_generic(const Theta& theta, std::int64_t m, const char* who) {
    if (!theta.generic_up_to(m))
        throw std::invalid_argument(std::string(who) +
                                    ": theta has an exact integral multiple up to m; "
                                    "pick a side (+ or -)");
}

struct Pt {
    std::int64_t x;
    Int y;
};

Int cross_pt(const Pt& o, const Pt& a, const Pt& b) {
    return Int(a.x - o.x) * (b.y - o.y) - (a.y - o.y) * Int(b.x - o.x);
}

}  // namespace

Partition positive_partition(const Theta& theta, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("positive_partition: m must be >= 1");
    require_generic(theta, m, "positive_partition");

    // Upper concave hull of the points (x, floor(x*theta)), x = 0..m.
    std::vector<Pt> hull;
    for (std::int64_t x = 0; x <= m; ++x) {
        Pt q{x, x == 0 ? Int(0) : floor_mul(theta, x)};
        while (hull.size() >= 2 &&
               cross_pt(hull[hull.size() - 2], hull.back(), q) >= 0)
            hull.pop_back();
        hull.push_back(q);
    }
    // Parts are x-steps between consecutive lattice points along the hull.
    std::vector<std::int64_t> parts;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        std::int64_t dx = hull[i].x - hull[i - 1].x;
        Int dy = hull[i].y - hull[i - 1].y;
        Int g = boost::multiprecision::gcd(Int(dx), boost::multiprecision::abs(dy));
        std::int64_t steps = g.convert_to<std::int64_t>();
        for (std::int64_t s = 0; s < steps; ++s) parts.push_back(dx / steps);
    }
    return Partition(std::move(parts));
}

Partition negative_partition(const Theta& theta, std::int64_t m) {
    return positive_partition(theta.reflect(), m);
}

Partition positive_hyperbolic_partition(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("partition: m must be >= 1");
    return Partition(std::vector<std::int64_t>(m, 1));
}

Partition negative_hyperbolic_partition(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("partition: m must be >= 1");
    std::vector<std::int64_t> parts(m / 2, 2);
    if (m % 2) parts.push_back(1);
    return Partition(std::move(parts));
}

WorkhorseResult workhorse_check(const Theta& theta, const Partition& parts) {
    std::int64_t m = parts.total();
    require_generic(theta, m, "workhorse_check");
    const auto& a = parts.parts();
    const std::int64_t k = static_cast<std::int64_t>(a.size());

    std::vector<Int> floors(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) floors[i] = floor_mul(theta, a[i]);

    Int lhs = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            lhs += std::max(floors[i] * a[j], floors[j] * a[i]);

    Int rhs = 0;
    for (std::int64_t i = 1; i <= m; ++i) rhs += floor_mul(theta, i);
    rhs *= 2;
    for (const auto& f : floors) rhs -= f;
    rhs += m - k;

    WorkhorseResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = lhs <= rhs;
    r.equality = lhs == rhs;
    return r;
}

bool partition_order(const Theta& theta, const Partition& p, const Partition& q) {
    std::int64_t m = p.total();
    if (q.total() != m)
        throw std::invalid_argument("partition_order: totals differ");
    if (m > 12)
        throw std::invalid_argument("partition_order: m > 12 not supported");
    require_generic(theta, m, "partition_order");

    const auto& pa = p.parts();
    const auto& qa = q.parts();
    const std::size_t np = pa.size(), nq = qa.size();

    // ceil(a*t) for p-parts (the positive ends), floor(b*t) for q-parts.
    std::vector<Int> pc(np), qf(nq);
    for (std::size_t i = 0; i < np; ++i) pc[i] = ceil_mul(theta, pa[i]);
    for (std::size_t j = 0; j < nq; ++j) qf[j] = floor_mul(theta, qa[j]);

    // Cover the parts by groups; each group is a connected component of a
    // candidate branched cover and needs equal sums and a valid genus.
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> memo;
    std::function<bool(std::uint32_t, std::uint32_t)> solve =
        [&](std::uint32_t used_p, std::uint32_t used_q) -> bool {
        if (used_p == (1u << np) - 1)
            return used_q == (1u << nq) - 1;
        auto it = memo.find({used_p, used_q});
        if (it != memo.end()) return it->second;

        // Anchor each group at the lowest unused p-part.
        std::uint32_t first = 0;
        while (used_p & (1u << first)) ++first;

        bool ok = false;
        std::uint32_t free_p = ~used_p & ((1u << np) - 1);
        std::uint32_t free_q = ~used_q & ((1u << nq) - 1);
        std::uint32_t rest_p = free_p & ~(1u << first);
        // Enumerate subsets A containing `first` and subsets B of q-parts.
        for (std::uint32_t sub = rest_p;; sub = (sub - 1) & rest_p) {
            std::uint32_t A = sub | (1u << first);
            std::int64_t sum_a = 0;
            Int ceil_a = 0;
            for (std::size_t i = 0; i < np; ++i)
                if (A & (1u << i)) {
                    sum_a += pa[i];
                    ceil_a += pc[i];
                }
            for (std::uint32_t B = free_q;; B = (B - 1) & free_q) {
                if (B) {
                    std::int64_t sum_b = 0;
                    Int floor_b = 0;
                    for (std::size_t j = 0; j < nq; ++j)
                        if (B & (1u << j)) {
                            sum_b += qa[j];
                            floor_b += qf[j];
                        }
                    // genus g = 1 - sum ceil + sum floor must be >= 0
                    if (sum_b == sum_a && Int(1) - ceil_a + floor_b >= 0 &&
                        solve(used_p | A, used_q | B)) {
                        ok = true;
                    }
                }
                if (ok || B == 0) break;
            }
            if (ok || sub == 0) break;
        }
        memo[{used_p, used_q}] = ok;
        return ok;
    };
    return solve(0, 0);
}

bool partition_subset_floor_check(const Theta& theta, std::int64_t m) {
    if (m > 20)
        throw std::invalid_argument(
            "partition_subset_floor_check: m > 20 not supported (subset blowup)");
    require_generic(theta, m, "partition_subset_floor_check");
    Partition pos = positive_partition(theta, m);
    Partition neg = negative_partition(theta, m);
    const auto& q = pos.parts();
    const auto& r = neg.parts();

    // (b) subset floors add exactly on the positive partition.
    for (std::uint32_t mask = 1; mask < (1u << q.size()); ++mask) {
        Int sum_floors = 0;
        std::int64_t sum_parts = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (mask & (1u << i)) {
                sum_floors += floor_mul(theta, q[i]);
                sum_parts += q[i];
            }
        if (sum_floors != floor_mul(theta, sum_parts)) return false;
    }

    // (c) no proper nonempty subsets of p+ and p- parts with equal sums.
    auto proper_sums = [](const std::vector<std::int64_t>& parts) {
        std::vector<std::int64_t> sums;
        std::uint32_t full = (1u << parts.size()) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (mask & (1u << i)) s += parts[i];
            sums.push_back(s);
        }
        std::sort(sums.begin(), sums.end());
        return sums;
    };
    auto qs = proper_sums(q), rs = proper_sums(r);
    std::vector<std::int64_t> common;
    std::set_intersection(qs.begin(), qs.end(), rs.begin(), rs.end(),
                          std::back_inserter(common));
    return common.empty();
}

}  // namespace ech
