#ifndef LEFSCHETZ_VALUATION_HPP
#define LEFSCHETZ_VALUATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "lefschetz/complex.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/// A value for every closed simplex of an ambient complex.
class SimplexAssignment {
  public:
    /// Throws MalformedInput unless `values` has exactly the simplices of `ambient` as keys.
    SimplexAssignment(Complex ambient, std::map<Simplex, Rational> values);

    /// The same value on every simplex.
    static SimplexAssignment constant(Complex ambient, const Rational& value);

    const Complex& ambient() const { return ambient_; }
    const std::map<Simplex, Rational>& values() const { return values_; }
    const Rational& value(const Simplex& s) const { return values_.at(s); }

  private:
    Complex ambient_;
    std::map<Simplex, Rational> values_;
};

/// Open-cell densities: weight(ρ) summed over the faces of a simplex gives
/// the assigned value of that closed simplex.
using OpenSimplexWeights = std::map<Simplex, Rational>;

/// weight(ρ) = Σ_{τ ⊆ ρ} (-1)^{|ρ|-|τ|} value(τ).
OpenSimplexWeights mobius_weights(const SimplexAssignment& s);

/// The unique valuation with the assigned simplex values, evaluated on `a`.
/// Throws DomainError if `a` is not a subcomplex of the ambient complex.
Rational extend_valuation(const SimplexAssignment& s, const Complex& a);
Rational extend_valuation(const OpenSimplexWeights& weights, const Complex& a);

using ComplexFunction = std::function<Rational(const Complex&)>;

struct ExhaustivePairs {
    std::size_t max_simplices = kDefaultExhaustiveLimit;
};

struct SampledPairs {
    std::size_t pairs = 1000;
    std::uint64_t seed = 0x5eed;
};

struct ValuationCounterexample {
    Complex a;
    Complex b;
    Rational value_union;
    Rational value_intersection;
    Rational value_a;
    Rational value_b;
};

struct ValuationVerdict {
    bool holds = true;
    std::size_t pairs_checked = 0;
    /// Set when E(∅) != 0.
    std::optional<Rational> empty_value;
    std::optional<ValuationCounterexample> counterexample;

    std::string describe() const;
};

/// Checks E(∅) = 0 and E(A∪B) + E(A∩B) = E(A) + E(B) over all subcomplex
/// pairs of `ambient`. Stops at the first failure.
ValuationVerdict verify_valuation(const ComplexFunction& e, const Complex& ambient, ExhaustivePairs mode);

/// Same check over independently sampled pairs. `sampler` draws subcomplexes;
/// by default random_subcomplex of `ambient`.
ValuationVerdict verify_valuation(const ComplexFunction& e, const Complex& ambient, SampledPairs mode,
                                  const std::function<Complex(std::mt19937_64&)>& sampler = {});

}  // namespace lefschetz

#endif
