#include <ech/embeddings.hpp>

#include <ech/weights.hpp>

#include <atomic>
#include <stdexcept>
#include <thread>

namespace ech {

namespace {

std::string sharpness_label(const ToricDomain& source, const ToricDomain& target) {
    using Kind = ToricDomain::Kind;
    bool sharp = source.kind() == Kind::ellipsoid &&
                 (target.kind() == Kind::ellipsoid || target.kind() == Kind::polydisk);
    return sharp ? "sharp criterion, truncated" : "necessary condition only";
}

}  // namespace

ObstructionReport check_embedding(const ToricDomain& source,
                                  const ToricDomain& target, std::int64_t k_max,
                                  int threads) {
    if (k_max < 0) throw std::invalid_argument("check_embedding: k_max must be >= 0");
    ObstructionReport report;
    report.source = source;
    report.target = target;
    report.k_max = k_max;
    report.sharpness = sharpness_label(source, target);

    auto src = capacity_sequence(source, k_max + 1, threads);
    auto tgt = capacity_sequence(target, k_max + 1, threads);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (src.values[k] > tgt.values[k]) {
            report.obstructed = true;
            report.k = k;
            report.c_source = src.values[k];
            report.c_target = tgt.values[k];
            return report;
        }
    }
    return report;
}

StaircaseSample staircase_sample(const Rational& a, std::int64_t k_max) {
    if (a < Rational(1)) throw std::invalid_argument("staircase_sample: a must be >= 1");
    if (k_max < 1) throw std::invalid_argument("staircase_sample: k_max must be >= 1");
    WeightSequence num(Rational(1), a), den(Rational(1), Rational(1));
    auto nv = num.prefix(static_cast<std::size_t>(k_max) + 1);
    auto dv = den.prefix(static_cast<std::size_t>(k_max) + 1);

    StaircaseSample s;
    s.a = a;
    s.k_max = k_max;
    // k = 0 is skipped (0/0 carries no information).
    s.value = nv[1] / dv[1];
    s.argmax_k = 1;
    for (std::int64_t k = 2; k <= k_max; ++k) {
        Rational r = nv[k] / dv[k];
        if (r > s.value) {
            s.value = r;
            s.argmax_k = k;
        }
    }
    return s;
}

std::vector<StaircaseSample> staircase_scan(const std::vector<Rational>& a_grid,
                                            std::int64_t k_max, int threads) {
    for (const auto& a : a_grid)
        if (a < Rational(1))
            throw std::invalid_argument("staircase_scan: grid values must be >= 1");
    std::vector<StaircaseSample> out(a_grid.size());
    int n_threads = std::max(1, threads);
    if (n_threads == 1 || a_grid.size() <= 1) {
        for (std::size_t i = 0; i < a_grid.size(); ++i)
            out[i] = staircase_sample(a_grid[i], k_max);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= a_grid.size()) break;
            out[i] = staircase_sample(a_grid[i], k_max);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace ech
