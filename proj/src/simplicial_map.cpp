#include "lefschetz/simplicial_map.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/errors.hpp"

namespace lefschetz {

SimplicialMap::SimplicialMap(SubdividedComplex domain, std::map<VertexId, VertexId> vertex_images)
    : SimplicialMap(std::make_shared<const SubdividedComplex>(std::move(domain)),
                    std::move(vertex_images)) {}

SimplicialMap::SimplicialMap(std::shared_ptr<const SubdividedComplex> domain,
                             std::map<VertexId, VertexId> vertex_images)
    : domain_(std::move(domain)), images_(std::move(vertex_images)) {
    validate();
}

SimplicialMap SimplicialMap::identity(const Complex& x) {
    std::map<VertexId, VertexId> images;
    for (auto v : x.vertices()) images.emplace(v, v);
    return SimplicialMap(identity_subdivision(x), std::move(images));
}

void SimplicialMap::validate() const {
    const auto& refined = domain_->refined();
    const auto& base = domain_->base();
    for (const auto& [v, w] : images_)
        if (!refined.contains(Simplex({label(v)})))
            throw InvalidMap("image given for vertex " + std::to_string(label(v)) +
                             " outside the domain");
    for (auto v : refined.vertices()) {
        auto it = images_.find(v);
        if (it == images_.end())
            throw InvalidMap("no image for vertex " + std::to_string(label(v)));
        if (!base.contains(Simplex({label(it->second)})))
            throw InvalidMap("image " + std::to_string(label(it->second)) + " of vertex " +
                             std::to_string(label(v)) + " is not a base vertex");
    }
    for (const auto& x : refined.maximal_simplices())
        if (!base.contains(image_simplex(x)))
            throw InvalidMap("image of " + x.to_string() + " is not a simplex of the base complex");
}

Simplex SimplicialMap::image_simplex(const Simplex& x) const {
    std::vector<VertexId> vs;
    vs.reserve(x.size());
    for (auto v : x.vertices()) vs.push_back(image(v));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Simplex(std::move(vs));
}

std::optional<OrientedImage> SimplicialMap::oriented_image(const Simplex& x) const {
    std::vector<VertexId> vs;
    vs.reserve(x.size());
    for (auto v : x.vertices()) vs.push_back(image(v));
    int inversions = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return std::nullopt;
            if (vs[j] < vs[i]) ++inversions;
        }
    return OrientedImage{Simplex(std::move(vs)), inversions % 2 == 0 ? 1 : -1};
}

// ---------------------------------------------------------------------------

MapPair::MapPair(SimplicialMap f, Complex a) : map(std::move(f)), subcomplex(std::move(a)) {
    if (!subcomplex.is_subcomplex_of(map.refined()))
        throw DomainError("selected subcomplex is not a subcomplex of the refined domain");
}

MapPair MapPair::whole(SimplicialMap f) {
    Complex all = f.refined();
    return MapPair(std::move(f), std::move(all));
}

ChainOperator induced_chain_map(const SimplicialMap& f, int q) {
    ChainOperator op(q, q);
    for (const auto& x : f.refined()) {
        if (x.dimension() != q) continue;
        if (auto img = f.oriented_image(x)) op.set_column(x, Chain::of(img->simplex, img->sign));
    }
    return op;
}

ChainOperator refined_chain_map(const SimplicialMap& f, int q) {
    return compose(subdivision_operator(f.domain())[q], induced_chain_map(f, q));
}

ChainOperator lefschetz_chain_operator(const MapPair& p, int q) {
    const auto s = subdivision_operator(p.map.domain());
    return compose(s[q], compose(induced_chain_map(p.map, q),
                                 restriction_operator(p.subcomplex, p.map.refined(), q)));
}

int self_coefficient(const SimplicialMap& f, const Simplex& x) {
    const auto& k = f.domain();
    const Simplex& carrier = k.carrier(x);
    auto img = f.oriented_image(x);
    if (!img || img->simplex != carrier) return 0;
    return img->sign * sign(relative_volume(k, x, carrier));
}

int simplex_coefficient(const MapPair& p, const Simplex& x) {
    if (!p.map.refined().contains(x))
        throw DomainError(x.to_string() + " is not a simplex of the refined domain");
    if (!p.subcomplex.contains(x)) return 0;
    return self_coefficient(p.map, x);
}

Rational chain_trace(const MapPair& p, int q) { return lefschetz_chain_operator(p, q).trace(); }

Rational chain_lefschetz(const MapPair& p) {
    Rational total = 0;
    for (int q = 0; q <= p.map.refined().dimension(); ++q)
        total += (q % 2 == 0 ? 1 : -1) * chain_trace(p, q);
    return total;
}

}  // namespace lefschetz
