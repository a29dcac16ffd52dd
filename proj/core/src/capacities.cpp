#include <ech/capacities.hpp>

#include <ech/isoperimetric.hpp>

#include <algorithm>
#include <stdexcept>

namespace ech {

// --- ToricDomain -----------------------------------------------------------

ToricDomain ToricDomain::ellipsoid(Rational a, Rational b) {
    if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("ellipsoid: nonpositive axis");
    ToricDomain d;
    d.kind_ = Kind::ellipsoid;
    d.a_ = std::move(a);
    d.b_ = std::move(b);
    return d;
}

ToricDomain ToricDomain::polydisk(Rational a, Rational b) {
    if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("polydisk: nonpositive axis");
    ToricDomain d;
    d.kind_ = Kind::polydisk;
    d.a_ = std::move(a);
    d.b_ = std::move(b);
    return d;
}

ToricDomain ToricDomain::general(RationalPolygon omega) {
    if (omega.is_degenerate())
        throw std::invalid_argument("toric domain: Omega must have positive area");
    ToricDomain d;
    d.kind_ = Kind::general;
    d.omega_ = std::move(omega);
    return d;
}

ToricDomain ToricDomain::disjoint_union(std::vector<ToricDomain> parts) {
    if (parts.empty())
        throw std::invalid_argument("disjoint_union: no parts");
    ToricDomain d;
    d.kind_ = Kind::disjoint_union;
    for (auto& p : parts) {
        if (p.kind_ == Kind::disjoint_union) {
            for (auto& q : p.parts_) d.parts_.push_back(std::move(q));
        } else {
            d.parts_.push_back(std::move(p));
        }
    }
    return d;
}

Rational ToricDomain::volume() const {
    switch (kind_) {
        case Kind::ellipsoid: return a_ * b_ / Rational(2);
        case Kind::polydisk: return a_ * b_;
        case Kind::general: return omega_.area();
        case Kind::disjoint_union: {
            Rational v(0);
            for (const auto& p : parts_) v += p.volume();
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

ToricDomain ToricDomain::scaled(const Rational& r) const {
    if (!r.is_positive())
        throw std::invalid_argument("scale_domain: factor must be positive");
    switch (kind_) {
        case Kind::ellipsoid: return ellipsoid(a_ * r, b_ * r);
        case Kind::polydisk: return polydisk(a_ * r, b_ * r);
        case Kind::general: return general(omega_.scaled(r));
        case Kind::disjoint_union: {
            std::vector<ToricDomain> ps;
            for (const auto& p : parts_) ps.push_back(p.scaled(r));
            return disjoint_union(std::move(ps));
        }
    }
    throw std::logic_error("unreachable");
}

std::string ToricDomain::str() const {
    switch (kind_) {
        case Kind::ellipsoid:
            return a_ == b_ ? "B(" + a_.str() + ")"
                            : "E(" + a_.str() + "," + b_.str() + ")";
        case Kind::polydisk: return "P(" + a_.str() + "," + b_.str() + ")";
        case Kind::general: return "X_Omega";
        case Kind::disjoint_union: {
            std::string s;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) s += " u ";
                s += parts_[i].str();
            }
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

ToricDomain scale_domain(const ToricDomain& domain, const Rational& r) {
    return domain.scaled(r);
}

// --- capacities ------------------------------------------------------------

Rational cap_ellipsoid(const Rational& a, const Rational& b, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("cap_ellipsoid: k must be >= 0");
    return WeightSequence(a, b).at(static_cast<std::size_t>(k));
}

Rational cap_polydisk(const Rational& a, const Rational& b, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("cap_polydisk: k must be >= 0");
    if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("cap_polydisk: nonpositive axis");
    // For fixed m the best n is ceil((k+1)/(m+1)) - 1, and m <= k suffices.
    Rational best;
    bool first = true;
    for (std::int64_t m = 0; m <= k; ++m) {
        std::int64_t n = (k + m + 1) / (m + 1) - 1;
        Rational v = a * Rational(m) + b * Rational(n);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

ToricCapacity cap_toric(const RationalPolygon& omega, std::int64_t k,
                        std::optional<Rational> budget_hint, int threads) {
    if (k < 0) throw std::invalid_argument("cap_toric: k must be >= 0");
    RationalPoint c = omega.centroid();
    RationalPolygon prime = omega.translated(-c.x, -c.y);
    ToricMinimum m = minimize_omega_length(prime, k + 1, threads, budget_hint);
    return ToricCapacity{m.value, m.witness};
}

CapacitySequence capacity_sequence(const ToricDomain& domain, std::int64_t count,
                                   int threads) {
    if (count < 1)
        throw std::invalid_argument("capacity_sequence: count must be >= 1");
    CapacitySequence seq;
    seq.domain = domain;
    switch (domain.kind()) {
        case ToricDomain::Kind::ellipsoid:
            seq.values = weight_sequence(domain.a(), domain.b(),
                                         static_cast<std::size_t>(count));
            break;
        case ToricDomain::Kind::polydisk:
            for (std::int64_t k = 0; k < count; ++k)
                seq.values.push_back(cap_polydisk(domain.a(), domain.b(), k));
            break;
        case ToricDomain::Kind::general:
            for (std::int64_t k = 0; k < count; ++k)
                seq.values.push_back(
                    cap_toric(domain.omega(), k, std::nullopt, threads).value);
            break;
        case ToricDomain::Kind::disjoint_union: {
            std::vector<CapacitySequence> parts;
            for (const auto& p : domain.parts())
                parts.push_back(capacity_sequence(p, count, threads));
            for (std::int64_t k = 0; k < count; ++k)
                seq.values.push_back(cap_disjoint_union(parts, k));
            break;
        }
    }
    return seq;
}

Rational cap_disjoint_union(const std::vector<CapacitySequence>& parts,
                            std::int64_t k) {
    if (k < 0) throw std::invalid_argument("cap_disjoint_union: k must be >= 0");
    if (parts.empty())
        throw std::invalid_argument("cap_disjoint_union: no parts");
    for (const auto& p : parts) {
        if (p.values.size() < static_cast<std::size_t>(k) + 1)
            throw std::invalid_argument(
                "cap_disjoint_union: part prefix shorter than k+1; extend the "
                "cached capacities first");
    }
    // Max-plus convolution, one part at a time.
    std::vector<Rational> acc(parts[0].values.begin(),
                              parts[0].values.begin() + k + 1);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::vector<Rational> next(static_cast<std::size_t>(k) + 1, Rational(0));
        for (std::int64_t j = 0; j <= k; ++j) {
            Rational best;
            bool first = true;
            for (std::int64_t t = 0; t <= j; ++t) {
                Rational v = acc[j - t] + parts[i].values[t];
                if (first || v > best) {
                    best = v;
                    first = false;
                }
            }
            next[j] = best;
        }
        acc = std::move(next);
    }
    return acc[k];
}

VolumeEstimate volume_estimate(const ToricDomain& domain, std::int64_t k,
                               int threads) {
    if (k < 1) throw std::invalid_argument("volume_estimate: k must be >= 1");
    Rational ck;
    switch (domain.kind()) {
        case ToricDomain::Kind::ellipsoid:
            ck = cap_ellipsoid(domain.a(), domain.b(), k);
            break;
        case ToricDomain::Kind::polydisk:
            ck = cap_polydisk(domain.a(), domain.b(), k);
            break;
        case ToricDomain::Kind::general:
            ck = cap_toric(domain.omega(), k, std::nullopt, threads).value;
            break;
        case ToricDomain::Kind::disjoint_union:
            ck = capacity_sequence(domain, k + 1, threads).values.back();
            break;
    }
    Rational est = ck * ck / Rational(4 * k);
    return VolumeEstimate{ck, est.to_double()};
}

}  // namespace ech
