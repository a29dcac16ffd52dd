// Acceptance suite: one line per criterion, exit 1 if any fails.
#include <ech/capacities.hpp>
#include <ech/cz.hpp>
#include <ech/embeddings.hpp>
#include <ech/partitions.hpp>
#include <ech/serialization.hpp>
#include <ech/t3.hpp>

#include "oracle_polygons.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ech;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string name, double budget_seconds)
        : number_(number), name_(std::move(name)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail = "") {
        if (!ok) {
            ok_ = false;
            if (!detail.empty()) details_.push_back(detail);
        }
    }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        bool in_budget = elapsed <= budget_;
        bool pass = ok_ && in_budget;
        std::printf("criterion %2d [%s] %-58s (%.2fs / %.0fs)\n", number_,
                    pass ? "PASS" : "FAIL", name_.c_str(), elapsed, budget_);
        for (const auto& d : details_) std::printf("    %s\n", d.c_str());
        if (!in_budget) std::printf("    exceeded the runtime budget\n");
        if (!pass) ++failures;
    }

private:
    int number_;
    std::string name_;
    double budget_;
    bool ok_ = true;
    std::vector<std::string> details_;
    std::chrono::steady_clock::time_point start_;
};

RationalPolygon axis_triangle(std::int64_t a, std::int64_t b) {
    return RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(a), Rational(0)},
         RationalPoint{Rational(0), Rational(b)}});
}

RationalPolygon axis_rectangle(std::int64_t a, std::int64_t b) {
    return RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(a), Rational(0)},
         RationalPoint{Rational(a), Rational(b)}, RationalPoint{Rational(0), Rational(b)}});
}

RationalPolygon pentagon_sample() {
    return RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(2), Rational(0)},
         RationalPoint{Rational(3), Rational(1)}, RationalPoint{Rational(2), Rational(2)},
         RationalPoint{Rational(0), Rational(2)}});
}

std::string toric_table(const RationalPolygon& omega, std::int64_t k_max, int threads) {
    std::string s;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        auto c = cap_toric(omega, k, std::nullopt, threads);
        s += std::to_string(k) + ":" + c.value.str() + ":" + c.witness.str() + "\n";
    }
    return s;
}

std::string spectrum_table(std::int64_t k_max, int threads) {
    std::string s;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        auto r = t3::t3_spectrum(k, threads);
        s += std::to_string(k) + ":" + r.value.str() + ":" + r.witness.str() + "\n";
    }
    return s;
}

// Oracle certification of one toric minimum, as in the unit tests but
// shared here for the full k range.
bool oracle_certifies(const RationalPolygon& omega, std::int64_t k) {
    auto result = cap_toric(omega, k);
    if (lattice_count(result.witness) != k + 1) return false;
    RationalPoint c = omega.centroid();
    RationalPolygon prime = omega.translated(-c.x, -c.y);
    Rational len(0);
    for (const auto& e : result.witness.edges()) len += dual_norm(prime, e);
    if (len != result.value) return false;
    Rational box_r = result.value / (Rational(2) * prime.inradius_lower_bound());
    std::int64_t W = box_r.floor().convert_to<std::int64_t>() + 1;
    auto norm = [&](LatticeVector v) { return dual_norm(prime, v); };
    auto oracle =
        ech_oracle::oracle_minimum<Rational>(W, norm, result.value, k + 1);
    return oracle.has_value() && *oracle == result.value;
}

}  // namespace

int main() {
    {
        Criterion c(1, "ellipsoid capacities match N(1,2)", 1.0);
        std::vector<Rational> expected{0, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5};
        for (std::int64_t k = 0; k < 12; ++k)
            c.expect(cap_ellipsoid(Rational(1), Rational(2), k) == expected[k],
                     "mismatch at k=" + std::to_string(k));
    }
    {
        Criterion c(2, "c_k(P(1,1)) = c_k(E(1,2)) for k <= 200", 1.0);
        for (std::int64_t k = 0; k <= 200; ++k)
            c.expect(cap_polydisk(Rational(1), Rational(1), k) ==
                         cap_ellipsoid(Rational(1), Rational(2), k),
                     "mismatch at k=" + std::to_string(k));
    }
    {
        Criterion c(3, "toric optimizer matches closed forms, k <= 20", 120.0);
        for (std::int64_t a = 1; a <= 3; ++a) {
            for (std::int64_t b = 1; b <= 3; ++b) {
                for (std::int64_t k = 0; k <= 20; ++k) {
                    c.expect(cap_toric(axis_triangle(a, b), k).value ==
                                 cap_ellipsoid(Rational(a), Rational(b), k),
                             "triangle a=" + std::to_string(a) + " b=" +
                                 std::to_string(b) + " k=" + std::to_string(k));
                    c.expect(cap_toric(axis_rectangle(a, b), k).value ==
                                 cap_polydisk(Rational(a), Rational(b), k),
                             "rectangle a=" + std::to_string(a) + " b=" +
                                 std::to_string(b) + " k=" + std::to_string(k));
                }
            }
        }
    }
    {
        Criterion c(4, "toric optimizer equals exhaustive enumeration, k <= 8", 300.0);
        auto square = axis_rectangle(1, 1);
        auto triangle =
            RationalPolygon::from_vertices({RationalPoint{Rational(0), Rational(0)},
                                            RationalPoint{Rational(2), Rational(0)},
                                            RationalPoint{Rational(0), Rational(1)}});
        for (std::int64_t k = 0; k <= 8; ++k) {
            c.expect(oracle_certifies(square, k), "square k=" + std::to_string(k));
            c.expect(oracle_certifies(triangle, k), "triangle k=" + std::to_string(k));
            c.expect(oracle_certifies(pentagon_sample(), k),
                     "pentagon k=" + std::to_string(k));
        }
    }
    {
        Criterion c(5, "volume asymptotics of E(1,2) at k = 10^4", 10.0);
        Rational ck = cap_ellipsoid(Rational(1), Rational(2), 10000);
        double ratio = (ck * ck / Rational(10000)).to_double();
        c.expect(std::abs(ratio - 4.0) <= 0.15,
                 "c_k^2/k = " + std::to_string(ratio));
    }
    {
        Criterion c(6, "embedding verdicts for E(1,2) into balls", 30.0);
        auto e12 = ToricDomain::ellipsoid(Rational(1), Rational(2));
        auto pass = check_embedding(e12, ToricDomain::ball(Rational(2)), 200);
        c.expect(!pass.obstructed, "E(1,2) -> B(2) should pass to 200");
        auto fail = check_embedding(e12, ToricDomain::ball(Rational(19, 10)), 200);
        c.expect(fail.obstructed && fail.k == 2 && fail.c_source == Rational(2) &&
                     fail.c_target == Rational(19, 10),
                 "E(1,2) -> B(19/10) should fail at k=2 with 2 vs 19/10");
    }
    {
        Criterion c(7, "staircase samples at a = 2 and a = 9", 60.0);
        auto two = staircase_sample(Rational(2), 1000);
        c.expect(two.value == Rational(2), "f-sample at 2 is " + two.value.str());
        auto nine = staircase_sample(Rational(9), 100000);
        c.expect(nine.value >= Rational(29, 10) && nine.value <= Rational(3),
                 "f-sample at 9 is " + nine.value.str());
    }
    {
        Criterion c(8, "the partition table reproduces cell by cell", 1.0);
        std::ifstream in(std::string(ECH_TEST_DATA) + "/fig1_partitions.txt");
        c.expect(in.good(), "fixture file missing");
        std::string line;
        int cells = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            std::string lo, parts_text;
            std::int64_t m;
            row >> lo >> m >> parts_text;
            std::vector<std::int64_t> expected;
            std::istringstream ps(parts_text);
            for (std::string tok; std::getline(ps, tok, ',');)
                expected.push_back(std::stoll(tok));
            Theta theta(Rational::parse(lo), Side::plus);
            c.expect(positive_partition(theta, m).parts() == expected,
                     "cell theta=" + lo + "+ m=" + std::to_string(m));
            ++cells;
        }
        c.expect(cells == 154, "expected 154 cells");
    }
    {
        Criterion c(9, "lattice inequality exhaustive over m <= 10", 30.0);
        std::vector<Theta> angles{Theta(Rational(2, 5), Side::plus),
                                  Theta(Rational(3, 5), Side::plus),
                                  Theta(Rational(1, 3), Side::plus),
                                  Theta(Rational(5, 8), Side::minus)};
        for (const auto& t : angles) {
            for (std::int64_t m = 1; m <= 10; ++m) {
                auto winner = positive_partition(t, m);
                for (const auto& p : all_partitions(m)) {
                    auto r = workhorse_check(t, p);
                    c.expect(r.holds, "violated at " + t.str() + " " + p.str());
                    c.expect(r.equality == (p == winner),
                             "equality wrong at " + t.str() + " " + p.str());
                }
            }
        }
    }
    {
        Criterion c(10, "branched-cover order on partitions", 60.0);
        std::vector<Theta> angles{Theta(Rational(2, 5), Side::plus),
                                  Theta(Rational(3, 7), Side::plus)};
        for (const auto& t : angles) {
            for (std::int64_t m = 2; m <= 6; ++m) {
                auto ps = all_partitions(m);
                for (const auto& p : ps) {
                    c.expect(partition_order(t, p, p), "reflexivity " + p.str());
                    for (const auto& q : ps) {
                        if (p == q) continue;
                        bool pq = partition_order(t, p, q);
                        bool qp = partition_order(t, q, p);
                        c.expect(!(pq && qp), "antisymmetry " + p.str() + " " + q.str());
                        if (!pq) continue;
                        for (const auto& r : ps)
                            if (partition_order(t, q, r))
                                c.expect(partition_order(t, p, r),
                                         "transitivity " + p.str() + " " + q.str() +
                                             " " + r.str());
                    }
                }
            }
            for (std::int64_t m = 2; m <= 8; ++m)
                c.expect(partition_order(t, negative_partition(t, m),
                                         positive_partition(t, m)),
                         "p- >= p+ at m=" + std::to_string(m));
            for (std::int64_t m = 2; m <= 6; ++m) {
                auto neg = negative_partition(t, m);
                for (const auto& q : all_partitions(m))
                    if (q != neg)
                        c.expect(!partition_order(t, q, neg),
                                 "nothing above p- at m=" + std::to_string(m));
            }
        }
    }
    {
        Criterion c(11, "ellipsoid gradings sort to 0,2,4,... by action", 10.0);
        for (const char* ratio : {"2-", "3/2+", "5/2-"}) {
            Theta r = Theta::parse(ratio);
            auto gens = ellipsoid_generators_by_action(r, Rational(30));
            c.expect(gens.size() > 20, "too few generators");
            for (std::size_t rank = 0; rank < gens.size(); ++rank)
                c.expect(ellipsoid_grading(r, gens[rank].m1, gens[rank].m2) ==
                             2 * static_cast<std::int64_t>(rank),
                         std::string("grading off at ratio ") + ratio + " rank " +
                             std::to_string(rank));
        }
    }
    {
        Criterion c(12, "T^3 complex: d^2, degree drops, spectrum", 300.0);
        c.expect(t3::delta_squared_check(Rational(6)), "delta^2 != 0 within cutoff 6");

        t3::Direction dir{{1, 2}, Side::plus};
        for (const auto& poly : polygons_within_euclidean_length(Rational(6))) {
            std::size_t n = poly.edge_count();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<t3::Label> labels(n);
                for (std::size_t i = 0; i < n; ++i)
                    labels[i] = (mask >> i) & 1 ? t3::Label::h : t3::Label::e;
                t3::Generator g(poly, labels);
                for (const auto& term : t3::differential(g))
                    c.expect(t3::grading(term) == t3::grading(g) - 1,
                             "differential grading drop violated");
                for (const auto& term : t3::u_theta(g, dir))
                    c.expect(t3::grading(term) == t3::grading(g) - 2,
                             "u-map grading drop violated");
            }
        }

        SqrtSum expected[4] = {SqrtSum(Rational(0)), SqrtSum(Rational(2)),
                               SqrtSum(Rational(2)) + SqrtSum::sqrt_of(2),
                               SqrtSum(Rational(4))};
        for (std::int64_t k = 0; k <= 3; ++k) {
            auto r = t3::t3_spectrum(k);
            c.expect(std::abs(r.value.to_double() - expected[k].to_double()) <= 1e-9,
                     "spectrum value at k=" + std::to_string(k));
            c.expect(r.value == expected[k],
                     "exact spectrum value at k=" + std::to_string(k));
            c.expect(lattice_count(r.witness) == k + 1 &&
                         euclidean_length(r.witness) == r.value,
                     "witness invalid at k=" + std::to_string(k));
        }
        // Exhaustive cross-check of the spectrum for k <= 8.
        auto norm = [](LatticeVector v) { return SqrtSum::sqrt_of(v.x * v.x + v.y * v.y); };
        for (std::int64_t k = 4; k <= 8; ++k) {
            auto r = t3::t3_spectrum(k);
            std::int64_t W =
                static_cast<std::int64_t>(r.value.to_double() / 2.0) + 2;
            auto oracle = ech_oracle::oracle_minimum<SqrtSum>(W, norm, r.value, k + 1);
            c.expect(oracle.has_value() && *oracle == r.value,
                     "exhaustive spectrum check at k=" + std::to_string(k));
        }
    }
    {
        Criterion c(13, "degree-0 homology is (Z/2)^3, stabilized", 300.0);
        auto r = t3::homology_rank(0, {Rational(4), Rational(6), Rational(8)});
        std::string got;
        for (auto v : r.by_cutoff) got += std::to_string(v) + " ";
        c.expect(r.rank == 3 && r.stabilized, "ranks by cutoff: " + got);
    }
    {
        Criterion c(14, "byte-identical results at 1 and 8 threads", 600.0);
        c.expect(toric_table(axis_triangle(2, 3), 14, 1) ==
                     toric_table(axis_triangle(2, 3), 14, 8),
                 "toric table differs");
        c.expect(toric_table(pentagon_sample(), 8, 1) ==
                     toric_table(pentagon_sample(), 8, 8),
                 "pentagon table differs");
        c.expect(spectrum_table(8, 1) == spectrum_table(8, 8),
                 "spectrum table differs");
    }

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
