#ifndef LEFSCHETZ_SIMPLICIAL_MAP_HPP
#define LEFSCHETZ_SIMPLICIAL_MAP_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lefschetz/chain.hpp"
#include "lefschetz/subdivision.hpp"

namespace lefschetz {

/// Image of an oriented simplex: ±(ascending image simplex).
struct OrientedImage {
    Simplex simplex;
    int sign;
};

/**
 * A simplicial map X' -> X from a subdivision to its base complex, given
 * by vertex images. With the identity subdivision this is a self-map of X.
 */
class SimplicialMap {
  public:
    /// Throws InvalidMap if a refined vertex has no image, an image is not a
    /// base vertex, or some refined simplex is not carried to a simplex.
    SimplicialMap(SubdividedComplex domain, std::map<VertexId, VertexId> vertex_images);
    SimplicialMap(std::shared_ptr<const SubdividedComplex> domain,
                  std::map<VertexId, VertexId> vertex_images);

    static SimplicialMap identity(const Complex& x);

    const SubdividedComplex& domain() const { return *domain_; }
    const std::shared_ptr<const SubdividedComplex>& shared_domain() const { return domain_; }
    const Complex& refined() const { return domain_->refined(); }
    const Complex& base() const { return domain_->base(); }
    const std::map<VertexId, VertexId>& vertex_images() const { return images_; }

    VertexId image(VertexId v) const { return images_.at(v); }

    /// Vertex set of f(x); lower-dimensional when vertices collide.
    Simplex image_simplex(const Simplex& x) const;

    /// f_#(x): nullopt when two vertices of x share an image.
    std::optional<OrientedImage> oriented_image(const Simplex& x) const;

  private:
    void validate() const;

    std::shared_ptr<const SubdividedComplex> domain_;
    std::map<VertexId, VertexId> images_;
};

/// A map together with a subcomplex A of its refined domain.
struct MapPair {
    SimplicialMap map;
    Complex subcomplex;

    /// Throws DomainError if `a` is not a subcomplex of the refined domain.
    MapPair(SimplicialMap f, Complex a);

    /// The pair (f, X').
    static MapPair whole(SimplicialMap f);

    bool is_whole() const { return subcomplex.size() == map.refined().size(); }
};

/// f_q : C_q(X') -> C_q(X).
ChainOperator induced_chain_map(const SimplicialMap& f, int q);

/// s_q ∘ f_q : C_q(X') -> C_q(X'), the chain map f induces on the refined complex.
ChainOperator refined_chain_map(const SimplicialMap& f, int q);

/// f_{A,q} = s ∘ f_q ∘ j_A : C_q(X') -> C_q(X').
ChainOperator lefschetz_chain_operator(const MapPair& p, int q);

/// c(f, x): the coefficient of x in f_{A,q}(x), computed from x alone.
/// Zero when x is not in A. Throws DomainError if x is not a refined simplex.
int simplex_coefficient(const MapPair& p, const Simplex& x);

/// Same coefficient with A taken to be the closure of x.
int self_coefficient(const SimplicialMap& f, const Simplex& x);

Rational chain_trace(const MapPair& p, int q);

/// Σ_q (-1)^q tr f_{A,q} over 0 <= q <= dim X'.
Rational chain_lefschetz(const MapPair& p);

}  // namespace lefschetz

#endif
