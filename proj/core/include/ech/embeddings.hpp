// Symplectic embedding obstruction tests via capacity comparison, and the
// ellipsoid-into-ball staircase sampler.
#pragma once

#include <ech/capacities.hpp>
#include <ech/toric_domain.hpp>

#include <string>
#include <vector>

namespace ech {

struct ObstructionReport {
    ToricDomain source, target;
    std::int64_t k_max = 0;
    bool obstructed = false;
    std::int64_t k = -1;         // first index with c_k(source) > c_k(target)
    Rational c_source, c_target;  // the witnessing capacities when obstructed
    // "sharp criterion, truncated" for ellipsoid -> ellipsoid and
    // ellipsoid -> polydisk; otherwise "necessary condition only".
    std::string sharpness;
};

// Compares c_k exactly for 0 <= k <= k_max and reports the first violation.
ObstructionReport check_embedding(const ToricDomain& source,
                                  const ToricDomain& target, std::int64_t k_max,
                                  int threads = 1);

// A truncated sample of the ellipsoid-into-ball function f(a): the largest
// capacity ratio seen up to index k_max. Always a certified lower bound on
// f(a); never a claim about the true value.
struct StaircaseSample {
    Rational a;
    std::int64_t k_max = 0;
    Rational value;           // max over 1 <= k <= k_max of N(1,a)_k / N(1,1)_k
    std::int64_t argmax_k = 0;  // smallest index attaining the max
};

StaircaseSample staircase_sample(const Rational& a, std::int64_t k_max);

// One sample per grid point; points are independent so the scan can run on
// several threads.
std::vector<StaircaseSample> staircase_scan(const std::vector<Rational>& a_grid,
                                            std::int64_t k_max, int threads = 1);

}  // namespace ech
