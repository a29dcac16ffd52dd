#include <ech/lattice.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ech {

std::int64_t divisibility(LatticeVector v) {
    return std::gcd(std::abs(v.x), std::abs(v.y));
}

LatticeVector primitive_of(LatticeVector v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_of: zero vector");
    std::int64_t d = divisibility(v);
    return {v.x / d, v.y / d};
}

// Half 0 covers angles [0, pi), half 1 covers [pi, 2*pi).
static int angle_half(LatticeVector v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
    return 1;
}

bool angle_less(LatticeVector a, LatticeVector b) {
    int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

LatticePolygon LatticePolygon::from_edges(std::vector<LatticeVector> edges) {
    // Merge parallel same-direction edges by summing.
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> by_dir;
    for (const auto& e : edges) {
        if (e.is_zero()) throw std::invalid_argument("LatticePolygon: zero edge");
        LatticeVector p = primitive_of(e);
        by_dir[{p.x, p.y}] += divisibility(e);
    }
    std::vector<LatticeVector> merged;
    LatticeVector sum{0, 0};
    for (const auto& [dir, d] : by_dir) {
        merged.push_back({dir.first * d, dir.second * d});
        sum = sum + merged.back();
    }
    if (!sum.is_zero())
        throw std::invalid_argument("LatticePolygon: edges do not close up");
    std::sort(merged.begin(), merged.end(), angle_less);
    LatticePolygon p;
    p.edges_ = std::move(merged);
    return p;
}

LatticePolygon LatticePolygon::hull_of(const std::vector<LatticeVector>& points) {
    if (points.empty())
        throw std::invalid_argument("hull_of: empty point set");
    std::vector<LatticeVector> pts = points;
    std::sort(pts.begin(), pts.end(), [](LatticeVector a, LatticeVector b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return LatticePolygon();

    // Monotone chain; strict turns only, so collinear interior points are
    // dropped and every kept point is a true vertex.
    auto build = [&](bool lower) {
        std::vector<LatticeVector> chain;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            LatticeVector q = lower ? pts[i] : pts[pts.size() - 1 - i];
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2],
                         q - chain.back()) <= 0)
                chain.pop_back();
            chain.push_back(q);
        }
        return chain;
    };
    std::vector<LatticeVector> lower = build(true), upper = build(false);
    std::vector<LatticeVector> verts(lower.begin(), lower.end() - 1);
    verts.insert(verts.end(), upper.begin(), upper.end() - 1);

    if (verts.size() == 2) {
        // Collinear set: a 2-gon over the full segment.
        LatticeVector seg = verts[1] - verts[0];
        return from_edges({seg, -seg});
    }
    std::vector<LatticeVector> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        edges.push_back(verts[(i + 1) % verts.size()] - verts[i]);
    return from_edges(std::move(edges));
}

std::int64_t LatticePolygon::boundary_points() const {
    std::int64_t m = 0;
    for (const auto& e : edges_) m += divisibility(e);
    return m;
}

std::int64_t LatticePolygon::doubled_area() const {
    std::int64_t area2 = 0;
    LatticeVector pos{0, 0};
    for (const auto& e : edges_) {
        area2 += cross(pos, e);
        pos = pos + e;
    }
    return area2;
}

std::vector<LatticeVector> LatticePolygon::vertices() const {
    std::vector<LatticeVector> v;
    LatticeVector pos{0, 0};
    for (const auto& e : edges_) {
        v.push_back(pos);
        pos = pos + e;
    }
    return v;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

struct Frac {  // a/b with b > 0
    std::int64_t a, b;
};
bool frac_less(Frac p, Frac q) { return p.a * q.b < q.a * p.b; }

struct Row {
    std::int64_t y, x_lo, x_hi;  // integer x range, possibly empty (lo > hi)
};

// Integer x extents of each horizontal slice of a nondegenerate polygon.
std::vector<Row> slice_rows(const LatticePolygon& p) {
    auto verts = p.vertices();
    std::int64_t y_min = verts[0].y, y_max = verts[0].y;
    for (const auto& v : verts) {
        y_min = std::min(y_min, v.y);
        y_max = std::max(y_max, v.y);
    }
    std::vector<Row> rows;
    for (std::int64_t y = y_min; y <= y_max; ++y) {
        bool have = false;
        Frac lo{0, 1}, hi{0, 1};
        auto update = [&](Frac f) {
            if (!have) {
                lo = hi = f;
                have = true;
            } else {
                if (frac_less(f, lo)) lo = f;
                if (frac_less(hi, f)) hi = f;
            }
        };
        for (std::size_t i = 0; i < verts.size(); ++i) {
            LatticeVector a = verts[i];
            LatticeVector b = verts[(i + 1) % verts.size()];
            if (a.y == b.y) {
                if (a.y == y) {
                    update(Frac{a.x, 1});
                    update(Frac{b.x, 1});
                }
                continue;
            }
            if (y < std::min(a.y, b.y) || y > std::max(a.y, b.y)) continue;
            // x = a.x + (y - a.y) * dx / dy, normalized to positive denom.
            std::int64_t dx = b.x - a.x, dy = b.y - a.y;
            std::int64_t num = a.x * dy + (y - a.y) * dx;
            if (dy < 0) {
                num = -num;
                dy = -dy;
            }
            update(Frac{num, dy});
        }
        rows.push_back(Row{y, ceil_div(lo.a, lo.b), floor_div(hi.a, hi.b)});
    }
    return rows;
}

}  // namespace

std::vector<LatticeVector> LatticePolygon::enclosed_points() const {
    if (is_point()) return {{0, 0}};
    if (is_two_gon()) {
        LatticeVector e = edges_[0];
        LatticeVector step = primitive_of(e);
        std::int64_t d = divisibility(e);
        std::vector<LatticeVector> pts;
        for (std::int64_t k = 0; k <= d; ++k) pts.push_back(k * step);
        return pts;
    }
    std::vector<LatticeVector> pts;
    for (const Row& r : slice_rows(*this))
        for (std::int64_t x = r.x_lo; x <= r.x_hi; ++x)
            pts.push_back({x, r.y});
    return pts;
}

std::int64_t lattice_count(const LatticePolygon& p) {
    if (p.is_point()) return 1;
    if (p.is_two_gon()) return divisibility(p.edges()[0]) + 1;
    std::int64_t n = 0;
    for (const Row& r : slice_rows(p))
        if (r.x_hi >= r.x_lo) n += r.x_hi - r.x_lo + 1;
    return n;
}

bool picks_check(const LatticePolygon& p) {
    if (p.is_point() || p.is_two_gon())
        throw std::invalid_argument("picks_check: degenerate polygon");
    return p.doubled_area() == 2 * lattice_count(p) - p.boundary_points() - 2;
}

LatticePolygon round_corner(const LatticePolygon& p, std::size_t corner) {
    if (p.is_point())
        throw std::invalid_argument("round_corner: point has no corners");
    if (corner >= p.edge_count())
        throw std::invalid_argument("round_corner: corner index out of range");
    LatticeVector c = p.vertices()[corner];
    std::vector<LatticeVector> pts;
    for (const auto& q : p.enclosed_points())
        if (q != c) pts.push_back(q);
    return LatticePolygon::hull_of(pts);
}

bool operator<(const LatticePolygon& a, const LatticePolygon& b) {
    const auto& ea = a.edges_;
    const auto& eb = b.edges_;
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i].x != eb[i].x) return ea[i].x < eb[i].x;
        if (ea[i].y != eb[i].y) return ea[i].y < eb[i].y;
    }
    return false;
}

std::string LatticePolygon::str() const {
    if (is_point()) return "point";
    std::string s = "[";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(edges_[i].x) + "," + std::to_string(edges_[i].y) + ")";
    }
    return s + "]";
}

std::size_t hash_value(const LatticePolygon& p) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& e : p.edges()) {
        h ^= std::hash<std::int64_t>{}(e.x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(e.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace ech
