#include "lefschetz/chain.hpp"

#include <stdexcept>
#include <string>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Chain Chain::of(const Simplex& s, const Rational& coefficient) {
    Chain c(s.dimension());
    c.add(s, coefficient);
    return c;
}

Rational Chain::coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Simplex& s, const Rational& c) {
    if (s.dimension() != dimension_)
        throw std::invalid_argument("cannot add " + s.to_string() + " to a " +
                                    std::to_string(dimension_) + "-chain");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (terms_.empty()) dimension_ = other.dimension_;
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (terms_.empty()) dimension_ = other.dimension_;
    for (const auto& [s, c] : other.terms_) add(s, -c);
    return *this;
}

Chain& Chain::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, coef] : terms_) coef *= c;
    return *this;
}

// ---------------------------------------------------------------------------

ChainOperator ChainOperator::identity(const Complex& c, int q) {
    ChainOperator id(q, q);
    for (const auto& s : c)
        if (s.dimension() == q) id.set_column(s, Chain::of(s));
    return id;
}

void ChainOperator::set_column(const Simplex& source, Chain image) {
    if (source.dimension() != source_dimension_)
        throw std::invalid_argument("column " + source.to_string() + " has wrong dimension");
    if (image.is_zero()) {
        columns_.erase(source);
        return;
    }
    if (image.dimension() != target_dimension_)
        throw std::invalid_argument("image of " + source.to_string() + " has wrong dimension");
    columns_.insert_or_assign(source, std::move(image));
}

Chain ChainOperator::apply(const Simplex& s) const {
    auto it = columns_.find(s);
    return it == columns_.end() ? Chain(target_dimension_) : it->second;
}

Chain ChainOperator::apply(const Chain& c) const {
    Chain out(target_dimension_);
    for (const auto& [s, coef] : c.terms()) {
        auto it = columns_.find(s);
        if (it == columns_.end()) continue;
        for (const auto& [t, v] : it->second.terms()) out.add(t, coef * v);
    }
    return out;
}

Rational ChainOperator::entry(const Simplex& target, const Simplex& source) const {
    auto it = columns_.find(source);
    return it == columns_.end() ? Rational(0) : it->second.coefficient(target);
}

Rational ChainOperator::trace() const {
    if (source_dimension_ != target_dimension_)
        throw std::invalid_argument("trace of a map between chain groups of different dimension");
    Rational tr = 0;
    for (const auto& [s, image] : columns_) tr += image.coefficient(s);
    return tr;
}

ChainOperator compose(const ChainOperator& after, const ChainOperator& before) {
    if (after.source_dimension() != before.target_dimension())
        throw std::invalid_argument("composition of chain operators with mismatched dimensions");
    ChainOperator out(before.source_dimension(), after.target_dimension());
    for (const auto& [s, image] : before.columns()) out.set_column(s, after.apply(image));
    return out;
}

ChainOperator boundary_operator(const Complex& c, int q) {
    if (q < 1) throw std::invalid_argument("boundary operator needs q >= 1");
    ChainOperator d(q, q - 1);
    for (const auto& s : c) {
        if (s.dimension() != q) continue;
        Chain image(q - 1);
        for (std::size_t i = 0; i < s.size(); ++i) image.add(s.facet(i), i % 2 == 0 ? 1 : -1);
        d.set_column(s, std::move(image));
    }
    return d;
}

Chain boundary(const Chain& c) {
    Chain out(c.dimension() - 1);
    if (c.dimension() == 0) return out;
    for (const auto& [s, coef] : c.terms())
        for (std::size_t i = 0; i < s.size(); ++i)
            out.add(s.facet(i), i % 2 == 0 ? coef : Rational(-coef));
    return out;
}

ChainOperator restriction_operator(const Complex& a, const Complex& ambient, int q) {
    if (!a.is_subcomplex_of(ambient))
        throw DomainError("restriction requires a subcomplex of the ambient complex");
    return ChainOperator::identity(a, q);
}

}  // namespace lefschetz
