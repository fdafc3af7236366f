#ifndef LEFSCHETZ_SUBDIVISION_HPP
#define LEFSCHETZ_SUBDIVISION_HPP

#include <map>
#include <vector>

#include "lefschetz/chain.hpp"
#include "lefschetz/complex.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/**
 * A point of the geometric realization of a base complex, in barycentric
 * coordinates. Weights are strictly positive on the carrier and sum to 1,
 * so the carrier is the minimal base simplex containing the point.
 */
class BarycentricPoint {
  public:
    /// Throws MalformedInput on an empty map, a non-positive weight, or a
    /// weight sum other than 1.
    explicit BarycentricPoint(std::map<VertexId, Rational> weights);

    static BarycentricPoint at(VertexId v);

    const std::map<VertexId, Rational>& weights() const { return weights_; }
    Rational weight(VertexId v) const;
    Simplex carrier() const;

    friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;

  private:
    std::map<VertexId, Rational> weights_;
};

/**
 * A refinement X' of a base complex X, with every X'-vertex located in |X|.
 *
 * Invariants (checked by custom_subdivision):
 *  - every base vertex is a refined vertex located at itself;
 *  - each refined simplex lies in a base simplex (its carrier) and its
 *    located vertices are affinely independent;
 *  - for each base q-simplex, the refined q-simplices it carries have
 *    absolute relative volumes summing to exactly 1.
 */
class SubdividedComplex {
  public:
    const Complex& base() const { return base_; }
    const Complex& refined() const { return refined_; }
    const std::map<VertexId, BarycentricPoint>& locations() const { return locations_; }
    const BarycentricPoint& location(VertexId v) const;

    /// Minimal base simplex containing |x|. Throws DomainError if x is not
    /// a refined simplex.
    const Simplex& carrier(const Simplex& x) const;

    /// True when refined == base with every vertex at itself.
    bool is_identity() const;

  private:
    friend SubdividedComplex identity_subdivision(const Complex&);
    friend SubdividedComplex barycentric_subdivide(const SubdividedComplex&);
    friend SubdividedComplex custom_subdivision(const Complex&, const Complex&,
                                                std::map<VertexId, BarycentricPoint>);

    SubdividedComplex(Complex base, Complex refined, std::map<VertexId, BarycentricPoint> locations,
                      std::map<Simplex, Simplex> carriers)
        : base_(std::move(base)), refined_(std::move(refined)), locations_(std::move(locations)),
          carriers_(std::move(carriers)) {}

    Complex base_;
    Complex refined_;
    std::map<VertexId, BarycentricPoint> locations_;
    std::map<Simplex, Simplex> carriers_;
};

SubdividedComplex identity_subdivision(const Complex& x);

/// One round of barycentric subdivision of the refined complex. New vertices
/// are labelled from one past the largest label in use, in canonical simplex
/// order; locations stay expressed in the original base.
SubdividedComplex barycentric_subdivide(const SubdividedComplex& k);

/**
 * Validating constructor. `locations` must cover every refined vertex that
 * is not a base vertex; base vertices default to themselves.
 *
 * Throws MalformedInput for a missing or dangling location and
 * InvalidSubdivision when a carrier does not exist, vertices are affinely
 * dependent, or volumes fail to tile a base simplex.
 */
SubdividedComplex custom_subdivision(const Complex& base, const Complex& refined,
                                     std::map<VertexId, BarycentricPoint> locations);

inline const Simplex& carrier(const SubdividedComplex& k, const Simplex& x) { return k.carrier(x); }

/// Signed volume of refined x relative to base simplex sigma of the same
/// dimension: the determinant of x's vertex coordinates in sigma's frame,
/// both in ascending order. Requires carrier(x) to be a face of sigma.
Rational relative_volume(const SubdividedComplex& k, const Simplex& x, const Simplex& sigma);

/// s_q : C_q(X) -> C_q(X'), one operator per dimension 0..dim X.
struct SubdivisionOperator {
    std::vector<ChainOperator> by_dimension;

    /// Zero operator for dimensions outside 0..dim X.
    ChainOperator operator[](int q) const;
};

/// Maps each base q-simplex sigma to Σ sign(relative_volume(x, sigma)) x over
/// the refined q-simplices x carried by sigma.
SubdivisionOperator subdivision_operator(const SubdividedComplex& k);

}  // namespace lefschetz

#endif
