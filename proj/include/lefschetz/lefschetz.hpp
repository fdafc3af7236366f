#ifndef LEFSCHETZ_LEFSCHETZ_HPP
#define LEFSCHETZ_LEFSCHETZ_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/homology.hpp"
#include "lefschetz/simplicial_map.hpp"
#include "lefschetz/subdivision.hpp"

namespace lefschetz {

/**
 * Evaluates L(f, -) from the two axioms alone: the value on a closed simplex
 * x is (-1)^dim x c(f, x) + L(f, ∂x), and the value on any subcomplex is the
 * valuation extension of those simplex values. Simplex values are memoized
 * for the lifetime of the evaluator.
 */
class AxiomaticEvaluator {
  public:
    explicit AxiomaticEvaluator(const SimplicialMap& f) : map_(f) {}

    const Rational& simplex_value(const Simplex& x);
    Rational value(const Complex& a);

  private:
    const SimplicialMap& map_;
    std::map<Simplex, Rational> memo_;
};

/// L(f, closure of x) by the recursive simplex axiom.
Rational simplex_axiom_value(const MapPair& p, const Simplex& x);

Rational lefschetz_axiomatic(const MapPair& p);

/// Σ over open simplices ρ of A of (-1)^dim ρ c(f, ρ).
Rational lefschetz_open_sum(const MapPair& p);

struct FixedPointCertificate {
    /// Open simplex of X' containing the fixed points.
    Simplex simplex;
    /// Dimension of the fixed set inside the open simplex.
    int fixed_set_dimension;
    /// A fixed point, in base barycentric coordinates.
    BarycentricPoint witness;
    /// The same point as strictly positive weights on the vertices of `simplex`.
    std::map<VertexId, Rational> local_weights;
};

/// One certificate per open simplex of X' that contains a fixed point of |f|.
std::vector<FixedPointCertificate> fixed_point_certificates(const SimplicialMap& f);

/// |f| applied to a point of the closed simplex `x`, given by weights on its vertices.
BarycentricPoint apply_affine(const SimplicialMap& f, const std::map<VertexId, Rational>& local_weights);

/// Every fixed point lies in an open maximal simplex of X'.
bool is_hopf_simplicial(const SimplicialMap& f);

/// 0 on non-maximal simplices, (-1)^dim X c(f, x) on maximal ones. Throws
/// PreconditionViolation, naming a fixed point, if f is not Hopf simplicial.
Rational hopf_axiom_value(const SimplicialMap& f, const Simplex& x);

enum class Method { axiomatic, open_sum, chain, homological };

std::string to_string(Method m);

/// nullopt only for Method::homological on a pair outside its domain.
std::optional<Rational> evaluate(Method m, const MapPair& p);

struct LefschetzReport {
    MapPair pair;
    Rational value_axiomatic;
    Rational value_open_sum;
    Rational value_chain;
    /// nullopt when the pair's operator is not a chain map on C(A).
    std::optional<Rational> value_homological;
    /// All defined values coincide.
    bool agree = false;
    std::vector<Rational> chain_traces;
    std::vector<Rational> homology_traces;
    std::vector<std::size_t> betti_numbers;
};

LefschetzReport lefschetz_report(const MapPair& p);

}  // namespace lefschetz

#endif
