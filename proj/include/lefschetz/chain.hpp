#ifndef LEFSCHETZ_CHAIN_HPP
#define LEFSCHETZ_CHAIN_HPP

#include <map>

#include "lefschetz/complex.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/// A q-chain: a formal sum of q-simplices, each in ascending orientation.
/// Zero coefficients are never stored.
class Chain {
  public:
    explicit Chain(int dimension = 0) : dimension_(dimension) {}

    static Chain of(const Simplex& s, const Rational& coefficient = 1);

    int dimension() const { return dimension_; }
    const std::map<Simplex, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Simplex& s) const;

    /// Adds `c * s`. Throws std::invalid_argument if dim s differs.
    void add(const Simplex& s, const Rational& c);

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const Rational& c);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rational& c, Chain a) { return a *= c; }

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.dimension_ == b.dimension_);
    }

  private:
    int dimension_;
    std::map<Simplex, Rational> terms_;
};

/**
 * A linear map C_p -> C_q, stored column-wise: each source simplex maps to
 * its image chain. Sources without a column map to zero.
 */
class ChainOperator {
  public:
    ChainOperator(int source_dimension, int target_dimension)
        : source_dimension_(source_dimension), target_dimension_(target_dimension) {}

    static ChainOperator identity(const Complex& c, int q);

    int source_dimension() const { return source_dimension_; }
    int target_dimension() const { return target_dimension_; }

    /// Replaces the column of `source`; zero images are dropped.
    void set_column(const Simplex& source, Chain image);

    const std::map<Simplex, Chain>& columns() const { return columns_; }

    Chain apply(const Simplex& s) const;
    Chain apply(const Chain& c) const;

    /// Coefficient of `target` in the image of `source`.
    Rational entry(const Simplex& target, const Simplex& source) const;

    /// Sum of diagonal entries; requires equal source and target dimension.
    Rational trace() const;

    bool is_zero() const { return columns_.empty(); }

    friend bool operator==(const ChainOperator&, const ChainOperator&) = default;

  private:
    int source_dimension_;
    int target_dimension_;
    std::map<Simplex, Chain> columns_;
};

/// after ∘ before.
ChainOperator compose(const ChainOperator& after, const ChainOperator& before);

/// ∂_q : C_q(c) -> C_{q-1}(c), ∂[v0..vq] = Σ (-1)^i [v0..^vi..vq].
/// Throws std::invalid_argument for q < 1.
ChainOperator boundary_operator(const Complex& c, int q);

/// Boundary of a single chain (zero chain of dimension -1 for 0-chains).
Chain boundary(const Chain& c);

/// j_A: identity on q-simplices of `a`, zero on the rest of `ambient`.
/// Throws DomainError if `a` is not a subcomplex of `ambient`.
ChainOperator restriction_operator(const Complex& a, const Complex& ambient, int q);

}  // namespace lefschetz

#endif
