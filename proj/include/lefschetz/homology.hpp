#ifndef LEFSCHETZ_HOMOLOGY_HPP
#define LEFSCHETZ_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lefschetz/chain.hpp"
#include "lefschetz/detail/dense_matrix.hpp"
#include "lefschetz/simplicial_map.hpp"

namespace lefschetz {

/**
 * Rational homology of a complex with explicit cycle representatives.
 *
 * In each dimension q the boundaries B_q are spanned by the pivot columns of
 * ∂_{q+1}, and the representatives are the kernel vectors of ∂_q (simplices
 * in canonical order) that are independent modulo B_q. Together they form a
 * basis of the cycles Z_q, which is what project() solves against.
 */
class HomologyBasis {
  public:
    const Complex& complex() const { return complex_; }
    int dimension() const { return static_cast<int>(degrees_.size()) - 1; }

    std::size_t betti(int q) const;
    std::vector<std::size_t> betti_numbers() const;

    const std::vector<Chain>& cycles(int q) const;
    const std::vector<Chain>& boundaries(int q) const;

    /// Coordinates of the class of `z` in the representative basis.
    /// Throws ConsistencyFailure if `z` is not a cycle of the complex.
    std::vector<Rational> project(const Chain& z) const;

  private:
    friend HomologyBasis homology_basis(const Complex& c);

    struct Degree {
        std::vector<Simplex> simplices;
        std::vector<Chain> boundaries;
        std::vector<Chain> cycles;
        detail::DenseMatrix frame;  // columns: boundaries, then cycles
    };

    Complex complex_;
    std::vector<Degree> degrees_;
};

HomologyBasis homology_basis(const Complex& c);

/// Square matrices (betti_q x betti_q), column j the image of representative j.
struct InducedHomologyMap {
    std::vector<detail::DenseMatrix> by_dimension;

    Rational trace(int q) const;
    std::vector<Rational> traces() const;
};

/// j_A ∘ f_{A,q} restricted to C_q(A): the operator whose homology the
/// homological route uses. For A = X' it is f_{A,q} itself.
ChainOperator restricted_chain_operator(const MapPair& p, int q);

/// True when restricted_chain_operator commutes with ∂ on C(A), i.e. it
/// induces a map on H(A). Always true for A = X' (where a failure throws
/// ConsistencyFailure) and for the identity map.
bool homology_route_defined(const MapPair& p);

/// Action on H_*(A) of the pair's chain operator. Throws DomainError when
/// the operator is not a chain map on C(A) and ConsistencyFailure when the
/// image of a representative cycle is not a cycle.
InducedHomologyMap induced_homology_map(const MapPair& p);
InducedHomologyMap induced_homology_map(const MapPair& p, const HomologyBasis& basis);

/// Σ_q (-1)^q tr(f_{A,q*} on H_q(A)). For A = X' this is the classical
/// homological Lefschetz number of f.
Rational homological_lefschetz(const MapPair& p);

/// nullopt instead of DomainError when the route is undefined for the pair.
std::optional<Rational> try_homological_lefschetz(const MapPair& p);

/// Smallest subcomplex containing `seed` whose chains are carried into
/// themselves by s ∘ f. Such subcomplexes form a sublattice on which the
/// homological route is always defined.
Complex invariant_hull(const SimplicialMap& f, const Complex& seed);

}  // namespace lefschetz

#endif
