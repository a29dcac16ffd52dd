// The positive and negative partitions attached to an elliptic orbit with
// rotation angle theta, the lattice inequality controlling the writhe
// bound, and the branched-cover partial order on partitions.
#pragma once

#include <ech/rational.hpp>
#include <ech/theta.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ech {

// A partition of a positive integer, parts stored nonincreasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t total() const;
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;

private:
    std::vector<std::int64_t> parts_;
};

// All partitions of m in a deterministic order.
std::vector<Partition> all_partitions(std::int64_t m);

// Horizontal displacements between consecutive lattice points of the
// maximal concave path below y = theta*x from (0,0) to (m, floor(m*theta)).
// Requires theta generic for m (no ambiguous floor up to m).
Partition positive_partition(const Theta& theta, std::int64_t m);

// p_theta^-(m) = p_{-theta}^+(m).
Partition negative_partition(const Theta& theta, std::int64_t m);

// Partitions of hyperbolic orbits need no angle: (1,...,1) for positive
// hyperbolic, (2,...,2) or (2,...,2,1) for negative hyperbolic.
Partition positive_hyperbolic_partition(std::int64_t m);
Partition negative_hyperbolic_partition(std::int64_t m);

// The two sides of the lattice inequality
//   sum_{i,j} max(floor(a_i t)a_j, floor(a_j t)a_i)
//     <= 2 sum_{i<=m} floor(i t) - sum_i floor(a_i t) + m - k,
// with equality exactly on the positive partition.
struct WorkhorseResult {
    Int lhs, rhs;
    bool holds = false;     // lhs <= rhs
    bool equality = false;  // lhs == rhs
};

WorkhorseResult workhorse_check(const Theta& theta, const Partition& parts);

// Ordering by existence of an index-zero branched cover of the cylinder:
// p >= q iff the parts split into groups, each pairing p-parts of sum s
// with q-parts of the same sum s and admitting genus g >= 0 with
// g - 1 + sum ceil(a t) - sum floor(b t) = 0. Exact search; m is capped at
// 12 to keep the set-partition search at desk scale.
bool partition_order(const Theta& theta, const Partition& p, const Partition& q);

// Subset identities of the positive partition: every subset I of the parts
// satisfies sum_I floor(q_i t) = floor(sum_I q_i t), and no proper nonempty
// subsets of the positive and negative partitions have equal sums.
bool partition_subset_floor_check(const Theta& theta, std::int64_t m);

}  // namespace ech
