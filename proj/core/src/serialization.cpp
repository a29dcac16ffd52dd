#include <ech/serialization.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ech {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("rational: expected \"p/q\" string");
}

Json to_json(const Theta& t) {
    return Json{{"base", t.base.str()},
                {"side", t.side == Side::plus    ? "plus"
                         : t.side == Side::minus ? "minus"
                                                 : "exact"}};
}

Theta theta_from_json(const Json& j) {
    Rational base = rational_from_json(j.at("base"));
    std::string side = j.at("side").get<std::string>();
    if (side == "plus") return Theta(base, Side::plus);
    if (side == "minus") return Theta(base, Side::minus);
    if (side == "exact") return Theta(base, Side::exact);
    throw std::invalid_argument("theta: side must be plus, minus, or exact");
}

Json to_json(const LatticePolygon& p) {
    Json edges = Json::array();
    for (const auto& e : p.edges()) edges.push_back(Json{{"x", e.x}, {"y", e.y}});
    return Json{{"edges", std::move(edges)}};
}

LatticePolygon polygon_from_json(const Json& j) {
    std::vector<LatticeVector> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("x").get<std::int64_t>(), e.at("y").get<std::int64_t>()});
    if (edges.empty()) return LatticePolygon();
    return LatticePolygon::from_edges(std::move(edges));
}

Json to_json(const t3::Generator& g) {
    Json edges = Json::array();
    const auto& es = g.polygon.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        edges.push_back(Json{{"x", es[i].x},
                             {"y", es[i].y},
                             {"label", g.labels[i] == t3::Label::h ? "h" : "e"}});
    return Json{{"edges", std::move(edges)}};
}

t3::Generator generator_from_json(const Json& j) {
    // Labels ride along each raw edge; merging parallel edges must also
    // merge labels, so build the polygon first and map labels by direction
    // (an h on any parallel piece makes the merged edge h).
    std::vector<LatticeVector> edges;
    std::vector<t3::Label> raw_labels;
    for (const auto& e : j.at("edges")) {
        edges.push_back({e.at("x").get<std::int64_t>(), e.at("y").get<std::int64_t>()});
        std::string l = e.at("label").get<std::string>();
        if (l != "e" && l != "h")
            throw std::invalid_argument("generator: label must be \"e\" or \"h\"");
        raw_labels.push_back(l == "h" ? t3::Label::h : t3::Label::e);
    }
    if (edges.empty()) return t3::Generator(LatticePolygon(), {});
    LatticePolygon poly = LatticePolygon::from_edges(edges);
    std::vector<t3::Label> labels(poly.edge_count(), t3::Label::e);
    for (std::size_t raw = 0; raw < edges.size(); ++raw) {
        if (raw_labels[raw] != t3::Label::h) continue;
        LatticeVector p = primitive_of(edges[raw]);
        bool found = false;
        for (std::size_t i = 0; i < poly.edge_count(); ++i) {
            if (primitive_of(poly.edges()[i]) == p) {
                labels[i] = t3::Label::h;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("generator: label lost in merge");
    }
    return t3::Generator(std::move(poly), std::move(labels));
}

Json to_json(const RationalPolygon& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(Json::array({v.x.str(), v.y.str()}));
    return Json{{"vertices", std::move(verts)}};
}

RationalPolygon rational_polygon_from_json(const Json& j) {
    std::vector<RationalPoint> pts;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("polygon: vertices must be [\"p/q\",\"r/s\"] pairs");
        pts.push_back(RationalPoint{rational_from_json(v[0]), rational_from_json(v[1])});
    }
    return RationalPolygon::from_vertices(std::move(pts));
}

Json to_json(const ToricDomain& d) {
    switch (d.kind()) {
        case ToricDomain::Kind::ellipsoid:
            return Json{{"kind", "ellipsoid"}, {"a", d.a().str()}, {"b", d.b().str()}};
        case ToricDomain::Kind::polydisk:
            return Json{{"kind", "polydisk"}, {"a", d.a().str()}, {"b", d.b().str()}};
        case ToricDomain::Kind::general:
            return Json{{"kind", "general"}, {"omega", to_json(d.omega())}};
        case ToricDomain::Kind::disjoint_union: {
            Json parts = Json::array();
            for (const auto& p : d.parts()) parts.push_back(to_json(p));
            return Json{{"kind", "union"}, {"parts", std::move(parts)}};
        }
    }
    throw std::logic_error("unreachable");
}

ToricDomain domain_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ellipsoid")
        return ToricDomain::ellipsoid(rational_from_json(j.at("a")),
                                      rational_from_json(j.at("b")));
    if (kind == "polydisk")
        return ToricDomain::polydisk(rational_from_json(j.at("a")),
                                     rational_from_json(j.at("b")));
    if (kind == "general")
        return ToricDomain::general(rational_polygon_from_json(j.at("omega")));
    if (kind == "union") {
        std::vector<ToricDomain> parts;
        for (const auto& p : j.at("parts")) parts.push_back(domain_from_json(p));
        return ToricDomain::disjoint_union(std::move(parts));
    }
    throw std::invalid_argument("domain: unknown kind '" + kind + "'");
}

ToricDomain parse_domain_spec(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("domain: empty spec");
    if (text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("domain: cannot open file " + text.substr(1));
        Json j = Json::parse(in);
        return domain_from_json(j);
    }
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw std::invalid_argument("domain: expected E(a,b), P(a,b), B(a), or @file");
    std::string head = text.substr(0, open);
    std::string args = text.substr(open + 1, text.size() - open - 2);
    auto comma = args.find(',');
    if (head == "B") {
        if (comma != std::string::npos)
            throw std::invalid_argument("domain: B takes one axis");
        return ToricDomain::ball(Rational::parse(args));
    }
    if (comma == std::string::npos)
        throw std::invalid_argument("domain: " + head + " takes two axes");
    Rational a = Rational::parse(args.substr(0, comma));
    Rational b = Rational::parse(args.substr(comma + 1));
    if (head == "E") return ToricDomain::ellipsoid(a, b);
    if (head == "P") return ToricDomain::polydisk(a, b);
    throw std::invalid_argument("domain: unknown shape '" + head + "'");
}

std::string decimal12(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
    return buf;
}

}  // namespace ech
