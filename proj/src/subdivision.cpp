#include "lefschetz/subdivision.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/detail/dense_matrix.hpp"
#include "lefschetz/errors.hpp"

namespace lefschetz {

BarycentricPoint::BarycentricPoint(std::map<VertexId, Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw MalformedInput("barycentric point without weights");
    Rational total = 0;
    for (const auto& [v, w] : weights_) {
        if (w <= 0)
            throw MalformedInput("non-positive barycentric weight " + format_rational(w) +
                                 " on vertex " + std::to_string(label(v)));
        total += w;
    }
    if (total != 1)
        throw MalformedInput("barycentric weights sum to " + format_rational(total) + ", not 1");
}

BarycentricPoint BarycentricPoint::at(VertexId v) { return BarycentricPoint({{v, Rational(1)}}); }

Rational BarycentricPoint::weight(VertexId v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? Rational(0) : it->second;
}

Simplex BarycentricPoint::carrier() const {
    std::vector<VertexId> vs;
    vs.reserve(weights_.size());
    for (const auto& [v, w] : weights_) vs.push_back(v);
    return Simplex(std::move(vs));
}

const BarycentricPoint& SubdividedComplex::location(VertexId v) const {
    auto it = locations_.find(v);
    if (it == locations_.end())
        throw DomainError("vertex " + std::to_string(label(v)) + " is not a refined vertex");
    return it->second;
}

const Simplex& SubdividedComplex::carrier(const Simplex& x) const {
    auto it = carriers_.find(x);
    if (it == carriers_.end()) throw DomainError(x.to_string() + " is not a refined simplex");
    return it->second;
}

bool SubdividedComplex::is_identity() const {
    if (base_ != refined_) return false;
    return std::all_of(locations_.begin(), locations_.end(),
                       [](const auto& kv) { return kv.second == BarycentricPoint::at(kv.first); });
}

namespace {

Simplex support_union(const std::map<VertexId, BarycentricPoint>& locations, const Simplex& x) {
    std::vector<VertexId> vs;
    for (auto v : x.vertices())
        for (const auto& [b, w] : locations.at(v).weights()) vs.push_back(b);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Simplex(std::move(vs));
}

detail::DenseMatrix coordinates(const std::map<VertexId, BarycentricPoint>& locations,
                                const Simplex& x, const Simplex& frame) {
    detail::DenseMatrix m(x.size(), frame.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& loc = locations.at(x[i]);
        for (std::size_t j = 0; j < frame.size(); ++j) m(i, j) = loc.weight(frame[j]);
    }
    return m;
}

Rational signed_volume(const std::map<VertexId, BarycentricPoint>& locations, const Simplex& x,
                       const Simplex& sigma) {
    return detail::determinant(coordinates(locations, x, sigma));
}

}  // namespace

SubdividedComplex identity_subdivision(const Complex& x) {
    std::map<VertexId, BarycentricPoint> locations;
    for (auto v : x.vertices()) locations.emplace(v, BarycentricPoint::at(v));
    std::map<Simplex, Simplex> carriers;
    for (const auto& s : x) carriers.emplace(s, s);
    return SubdividedComplex(x, x, std::move(locations), std::move(carriers));
}

SubdividedComplex custom_subdivision(const Complex& base, const Complex& refined,
                                     std::map<VertexId, BarycentricPoint> locations) {
    const auto base_vertices = base.vertices();
    const auto refined_vertices = refined.vertices();
    auto is_base_vertex = [&](VertexId v) {
        return std::binary_search(base_vertices.begin(), base_vertices.end(), v);
    };

    for (const auto& [v, loc] : locations)
        if (!std::binary_search(refined_vertices.begin(), refined_vertices.end(), v))
            throw MalformedInput("location given for undeclared vertex " + std::to_string(label(v)));

    for (auto v : refined_vertices) {
        auto it = locations.find(v);
        if (it == locations.end()) {
            if (!is_base_vertex(v))
                throw MalformedInput("missing location for refined vertex " + std::to_string(label(v)));
            locations.emplace(v, BarycentricPoint::at(v));
        } else if (is_base_vertex(v) && !(it->second == BarycentricPoint::at(v))) {
            throw InvalidSubdivision("base vertex " + std::to_string(label(v)) +
                                     " must be located at itself");
        }
    }
    for (auto v : base_vertices)
        if (!refined.contains(Simplex({label(v)})))
            throw InvalidSubdivision("base vertex " + std::to_string(label(v)) +
                                     " is missing from the refined complex");

    std::map<Simplex, Simplex> carriers;
    std::map<Simplex, Rational> covered;
    for (const auto& x : refined) {
        Simplex c = support_union(locations, x);
        if (!base.contains(c))
            throw InvalidSubdivision("refined simplex " + x.to_string() +
                                     " has no common carrier in the base complex");
        if (detail::rank(coordinates(locations, x, c)) != x.size())
            throw InvalidSubdivision("refined simplex " + x.to_string() +
                                     " has affinely dependent vertices");
        if (x.dimension() == c.dimension()) {
            Rational vol = signed_volume(locations, x, c);
            covered[c] += abs(vol);
        }
        carriers.emplace(x, std::move(c));
    }
    for (const auto& sigma : base) {
        auto it = covered.find(sigma);
        Rational total = it == covered.end() ? Rational(0) : it->second;
        if (total != 1)
            throw InvalidSubdivision("refined simplices carried by " + sigma.to_string() +
                                     " cover volume " + format_rational(total) + ", not 1");
    }
    return SubdividedComplex(base, refined, std::move(locations), std::move(carriers));
}

SubdividedComplex barycentric_subdivide(const SubdividedComplex& k) {
    std::uint32_t next = 0;
    for (auto v : k.base().vertices()) next = std::max(next, label(v) + 1);
    for (auto v : k.refined().vertices()) next = std::max(next, label(v) + 1);

    std::map<Simplex, VertexId> barycenter;
    std::map<VertexId, BarycentricPoint> locations;
    for (const auto& s : k.refined()) {
        if (s.dimension() == 0) {
            barycenter.emplace(s, s[0]);
            locations.emplace(s[0], k.location(s[0]));
            continue;
        }
        const VertexId b = vertex(next++);
        barycenter.emplace(s, b);
        std::map<VertexId, Rational> weights;
        const Rational share(1, static_cast<unsigned long>(s.size()));
        for (auto v : s.vertices())
            for (const auto& [bv, w] : k.location(v).weights()) weights[bv] += share * w;
        locations.emplace(b, BarycentricPoint(std::move(weights)));
    }

    // Simplices of the subdivision are chains s0 < s1 < ... < sk of faces;
    // the carrier of such a chain is the carrier of its top element.
    std::map<Simplex, std::vector<std::vector<VertexId>>> chains_ending_at;
    std::set<Simplex> simplices;
    std::map<Simplex, Simplex> carriers;
    for (const auto& s : k.refined()) {
        std::vector<std::vector<VertexId>> chains{{barycenter.at(s)}};
        for (const auto& face : s.faces()) {
            if (face == s) continue;
            for (const auto& chain : chains_ending_at.at(face)) {
                auto extended = chain;
                extended.push_back(barycenter.at(s));
                chains.push_back(std::move(extended));
            }
        }
        for (const auto& chain : chains) {
            Simplex flag(chain);
            carriers.emplace(flag, k.carrier(s));
            simplices.insert(std::move(flag));
        }
        chains_ending_at.emplace(s, std::move(chains));
    }
    return SubdividedComplex(k.base(), Complex::from_simplices(std::move(simplices)),
                             std::move(locations), std::move(carriers));
}

Rational relative_volume(const SubdividedComplex& k, const Simplex& x, const Simplex& sigma) {
    if (x.dimension() != sigma.dimension())
        throw std::invalid_argument("relative volume needs simplices of equal dimension");
    if (!k.carrier(x).is_face_of(sigma))
        throw DomainError(x.to_string() + " does not lie in " + sigma.to_string());
    return signed_volume(k.locations(), x, sigma);
}

ChainOperator SubdivisionOperator::operator[](int q) const {
    if (q < 0 || q >= static_cast<int>(by_dimension.size())) return ChainOperator(q, q);
    return by_dimension[static_cast<std::size_t>(q)];
}

SubdivisionOperator subdivision_operator(const SubdividedComplex& k) {
    const int top = k.base().dimension();
    std::vector<std::map<Simplex, Chain>> columns(static_cast<std::size_t>(top + 1));
    for (const auto& x : k.refined()) {
        const Simplex& sigma = k.carrier(x);
        if (sigma.dimension() != x.dimension()) continue;
        const int orientation = sign(relative_volume(k, x, sigma));
        auto& column = columns[static_cast<std::size_t>(x.dimension())];
        auto [it, inserted] = column.try_emplace(sigma, Chain(x.dimension()));
        it->second.add(x, orientation);
    }
    SubdivisionOperator s;
    for (int q = 0; q <= top; ++q) {
        ChainOperator op(q, q);
        for (auto& [sigma, image] : columns[static_cast<std::size_t>(q)]) op.set_column(sigma, std::move(image));
        s.by_dimension.push_back(std::move(op));
    }
    return s;
}

}  // namespace lefschetz
