#include <ech/t3.hpp>

#include <ech/gf2.hpp>

#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

namespace ech::t3 {

namespace {

// Pick's identity gives the enclosed count without enumerating; valid for
// points and 2-gons too. Cross-validated against lattice_count in the tests.
std::int64_t enclosed_count(const LatticePolygon& p) {
    return (p.doubled_area() + p.boundary_points()) / 2 + 1;
}

std::pair<std::int64_t, std::int64_t> dir_key(LatticeVector v) {
    LatticeVector p = primitive_of(v);
    return {p.x, p.y};
}

// For each edge of `after`, the label it inherits from `before`, or nullopt
// when the edge was created or shortened by the rounding. An edge inherits
// exactly when its direction survives with the same divisibility.
std::vector<std::optional<Label>> inherited_labels(const Generator& before,
                                                   const LatticePolygon& after) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, Label>> old;
    const auto& edges = before.polygon.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        old[dir_key(edges[i])] = {divisibility(edges[i]), before.labels[i]};

    std::vector<std::optional<Label>> out;
    for (const auto& e : after.edges()) {
        auto it = old.find(dir_key(e));
        if (it != old.end() && it->second.first == divisibility(e))
            out.push_back(it->second.second);
        else
            out.push_back(std::nullopt);
    }
    return out;
}

}  // namespace

Generator::Generator(LatticePolygon poly, std::vector<Label> labs)
    : polygon(std::move(poly)), labels(std::move(labs)) {
    if (labels.size() != polygon.edge_count())
        throw std::invalid_argument("Generator: one label per edge required");
}

std::int64_t Generator::h_count() const {
    std::int64_t n = 0;
    for (auto l : labels)
        if (l == Label::h) ++n;
    return n;
}

std::string Generator::str() const {
    if (polygon.is_point()) return "point";
    std::string s = "[";
    const auto& es = polygon.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(es[i].x) + "," + std::to_string(es[i].y) + ")";
        s += static_cast<char>(labels[i]);
    }
    return s + "]";
}

void ChainVector::toggle(const Generator& g) {
    auto [it, inserted] = terms_.insert(g);
    if (!inserted) terms_.erase(it);
}

ChainVector& ChainVector::operator+=(const ChainVector& o) {
    for (const auto& g : o.terms()) toggle(g);
    return *this;
}

std::int64_t grading(const Generator& g) {
    return 2 * (enclosed_count(g.polygon) - 1) - g.h_count();
}

ChainVector differential(const Generator& g) {
    ChainVector out;
    const std::size_t n = g.polygon.edge_count();
    if (n == 0) return out;
    for (std::size_t corner = 0; corner < n; ++corner) {
        const std::size_t in = (corner + n - 1) % n;
        const std::size_t at = corner;
        const bool h_in = g.labels[in] == Label::h;
        const bool h_out = g.labels[at] == Label::h;
        if (!h_in && !h_out) continue;

        LatticePolygon rounded = round_corner(g.polygon, corner);
        auto inherited = inherited_labels(g, rounded);
        std::vector<std::size_t> modified;
        for (std::size_t i = 0; i < inherited.size(); ++i)
            if (!inherited[i]) modified.push_back(i);

        auto base_labels = [&]() {
            std::vector<Label> ls(rounded.edge_count());
            for (std::size_t i = 0; i < ls.size(); ++i)
                ls[i] = inherited[i] ? *inherited[i] : Label::e;
            return ls;
        };

        if (h_in != h_out) {
            out.toggle(Generator(rounded, base_labels()));
        } else {
            // Both adjacent edges are h; one h survives among the edges the
            // rounding touched. No touched edge, no term.
            for (std::size_t choice : modified) {
                auto ls = base_labels();
                ls[choice] = Label::h;
                out.toggle(Generator(rounded, std::move(ls)));
            }
        }
    }
    return out;
}

namespace {

// Sign of <n_theta, v> for the infinitesimally rotated direction: primary
// key <n, v>, ties broken by the side.
int perturbed_sign(LatticeVector n, LatticeVector ray, Side side, LatticeVector v) {
    std::int64_t primary = dot(n, v);
    if (primary != 0) return primary > 0 ? 1 : -1;
    std::int64_t secondary = dot(ray, v);
    if (side == Side::minus) secondary = -secondary;
    return secondary > 0 ? 1 : secondary < 0 ? -1 : 0;
}

}  // namespace

ChainVector u_theta(const Generator& g, const Direction& dir) {
    ChainVector out;
    const std::size_t n = g.polygon.edge_count();
    if (n == 0) return out;
    if (dir.ray.is_zero() || divisibility(dir.ray) != 1)
        throw std::invalid_argument("u_theta: direction must be a primitive vector");
    if (dir.side == Side::exact)
        throw std::invalid_argument("u_theta: a side (+ or -) is required");

    // The distinguished corner maximizes <n, .> with n the right normal of
    // the ray; the side breaks ties exactly like an irrational slope would.
    const LatticeVector normal{dir.ray.y, -dir.ray.x};
    auto verts = g.polygon.vertices();
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j) {
        LatticeVector d = verts[j] - verts[best];
        if (perturbed_sign(normal, dir.ray, dir.side, d) > 0) best = j;
    }

    const std::size_t in = (best + n - 1) % n;
    const bool h_in = g.labels[in] == Label::h;
    const bool h_out = g.labels[best] == Label::h;

    LatticePolygon rounded = round_corner(g.polygon, best);
    auto inherited = inherited_labels(g, rounded);
    std::vector<std::size_t> preceding, following;
    const auto& edges = rounded.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inherited[i]) continue;
        if (perturbed_sign(normal, dir.ray, dir.side, edges[i]) > 0)
            preceding.push_back(i);
        else
            following.push_back(i);
    }

    // Each side of the new distinguished corner keeps its h if it had one;
    // an h with no touched edge to land on kills the term.
    if (h_in && preceding.empty()) return out;
    if (h_out && following.empty()) return out;

    std::vector<Label> base(rounded.edge_count());
    for (std::size_t i = 0; i < base.size(); ++i)
        base[i] = inherited[i] ? *inherited[i] : Label::e;

    auto emit = [&](std::optional<std::size_t> pre_h, std::optional<std::size_t> post_h) {
        auto ls = base;
        if (pre_h) ls[*pre_h] = Label::h;
        if (post_h) ls[*post_h] = Label::h;
        out.toggle(Generator(rounded, std::move(ls)));
    };
    if (h_in && h_out) {
        for (auto p : preceding)
            for (auto f : following) emit(p, f);
    } else if (h_in) {
        for (auto p : preceding) emit(p, std::nullopt);
    } else if (h_out) {
        for (auto f : following) emit(std::nullopt, f);
    } else {
        emit(std::nullopt, std::nullopt);
    }
    return out;
}

bool delta_squared_check(const Rational& length_cutoff) {
    auto polygons = polygons_within_euclidean_length(length_cutoff);
    for (const auto& poly : polygons) {
        const std::size_t n = poly.edge_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<Label> labels(n);
            for (std::size_t i = 0; i < n; ++i)
                labels[i] = (mask >> i) & 1 ? Label::h : Label::e;
            Generator g(poly, std::move(labels));
            ChainVector dd;
            for (const auto& term : differential(g)) dd += differential(term);
            if (!dd.empty()) return false;
        }
    }
    return true;
}

EuclideanMinimum t3_spectrum(std::int64_t k, int threads) {
    if (k < 0) throw std::invalid_argument("t3_spectrum: k must be >= 0");
    return minimize_euclidean_length(k + 1, threads);
}

std::vector<Generator> generators_in_degree(std::int64_t degree,
                                            const Rational& cutoff) {
    std::vector<Generator> out;
    if (degree < 0) return out;
    for (const auto& poly : polygons_within_euclidean_length(cutoff)) {
        const std::int64_t base = 2 * (enclosed_count(poly) - 1);
        const std::int64_t h_needed = base - degree;
        const std::int64_t n = static_cast<std::int64_t>(poly.edge_count());
        if (h_needed < 0 || h_needed > n) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != h_needed) continue;
            std::vector<Label> labels(n);
            for (std::int64_t i = 0; i < n; ++i)
                labels[i] = (mask >> i) & 1 ? Label::h : Label::e;
            out.emplace_back(poly, std::move(labels));
        }
    }
    return out;
}

HomologyRank homology_rank(std::int64_t degree,
                           const std::vector<Rational>& cutoffs) {
    if (cutoffs.empty())
        throw std::invalid_argument("homology_rank: at least one cutoff required");
    HomologyRank result;
    for (const auto& cutoff : cutoffs) {
        if (degree < 0) {
            result.by_cutoff.push_back(0);
            continue;
        }
        auto above = generators_in_degree(degree + 1, cutoff);
        auto here = generators_in_degree(degree, cutoff);
        auto below = generators_in_degree(degree - 1, cutoff);

        std::map<Generator, std::size_t> here_index, below_index;
        for (std::size_t i = 0; i < here.size(); ++i) here_index[here[i]] = i;
        for (std::size_t i = 0; i < below.size(); ++i) below_index[below[i]] = i;

        auto fill = [](const std::vector<Generator>& domain,
                       const std::map<Generator, std::size_t>& target_index,
                       std::size_t target_size) {
            Gf2Matrix m(target_size, domain.size());
            for (std::size_t c = 0; c < domain.size(); ++c) {
                for (const auto& term : differential(domain[c])) {
                    auto it = target_index.find(term);
                    if (it == target_index.end())
                        throw std::logic_error(
                            "homology_rank: differential left the cutoff complex");
                    m.set(it->second, c);
                }
            }
            return m;
        };
        std::size_t rank_in = fill(above, here_index, here.size()).rank();
        std::size_t rank_out = fill(here, below_index, below.size()).rank();
        result.by_cutoff.push_back(static_cast<std::int64_t>(here.size()) -
                                   static_cast<std::int64_t>(rank_in) -
                                   static_cast<std::int64_t>(rank_out));
    }
    result.rank = result.by_cutoff.back();
    std::size_t n = result.by_cutoff.size();
    std::size_t window = std::min<std::size_t>(3, n);
    result.stabilized = true;
    for (std::size_t i = n - window; i < n; ++i)
        result.stabilized &= result.by_cutoff[i] == result.by_cutoff.back();
    return result;
}

}  // namespace ech::t3
