#include "lefschetz/valuation.hpp"

#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

SimplexAssignment::SimplexAssignment(Complex ambient, std::map<Simplex, Rational> values)
    : ambient_(std::move(ambient)), values_(std::move(values)) {
    for (const auto& s : ambient_)
        if (!values_.contains(s)) throw MalformedInput("no value assigned to simplex " + s.to_string());
    if (values_.size() != ambient_.size())
        throw MalformedInput("value assigned to a simplex outside the ambient complex");
}

SimplexAssignment SimplexAssignment::constant(Complex ambient, const Rational& value) {
    std::map<Simplex, Rational> values;
    for (const auto& s : ambient) values.emplace(s, value);
    return SimplexAssignment(std::move(ambient), std::move(values));
}

OpenSimplexWeights mobius_weights(const SimplexAssignment& s) {
    OpenSimplexWeights weights;
    for (const auto& rho : s.ambient()) {
        Rational w = 0;
        for (const auto& tau : rho.faces()) {
            if ((rho.size() - tau.size()) % 2 == 0)
                w += s.value(tau);
            else
                w -= s.value(tau);
        }
        weights.emplace(rho, std::move(w));
    }
    return weights;
}

Rational extend_valuation(const OpenSimplexWeights& weights, const Complex& a) {
    Rational total = 0;
    for (const auto& rho : a) {
        auto it = weights.find(rho);
        if (it == weights.end())
            throw DomainError("simplex " + rho.to_string() + " is outside the ambient complex");
        total += it->second;
    }
    return total;
}

Rational extend_valuation(const SimplexAssignment& s, const Complex& a) {
    if (!a.is_subcomplex_of(s.ambient()))
        throw DomainError("valuation extended to a complex that is not a subcomplex of its ambient");
    return extend_valuation(mobius_weights(s), a);
}

namespace {

bool check_pair(const ComplexFunction& e, const Complex& a, const Complex& b, ValuationVerdict& verdict) {
    ++verdict.pairs_checked;
    const Complex u = lattice_union(a, b);
    const Complex i = lattice_intersection(a, b);
    Rational eu = e(u), ei = e(i), ea = e(a), eb = e(b);
    if (eu + ei == ea + eb) return true;
    verdict.holds = false;
    verdict.counterexample = ValuationCounterexample{a, b, std::move(eu), std::move(ei), std::move(ea),
                                                     std::move(eb)};
    return false;
}

bool check_empty(const ComplexFunction& e, ValuationVerdict& verdict) {
    Rational v = e(Complex{});
    if (v == 0) return true;
    verdict.holds = false;
    verdict.empty_value = std::move(v);
    return false;
}

std::string show(const Complex& c) {
    if (c.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& s : c.maximal_simplices()) {
        out += (first ? "" : ",") + s.to_string();
        first = false;
    }
    return out + "}";
}

}  // namespace

std::string ValuationVerdict::describe() const {
    std::ostringstream os;
    if (holds) {
        os << "valuation law holds on " << pairs_checked << " pairs";
    } else if (empty_value) {
        os << "value on the empty complex is " << format_rational(*empty_value) << ", not 0";
    } else if (counterexample) {
        const auto& c = *counterexample;
        os << "inclusion-exclusion fails for A=" << show(c.a) << " B=" << show(c.b) << ": E(A∪B)+E(A∩B) = "
           << format_rational(c.value_union) << "+" << format_rational(c.value_intersection)
           << " but E(A)+E(B) = " << format_rational(c.value_a) << "+" << format_rational(c.value_b);
    }
    return os.str();
}

ValuationVerdict verify_valuation(const ComplexFunction& e, const Complex& ambient, ExhaustivePairs mode) {
    ValuationVerdict verdict;
    if (!check_empty(e, verdict)) return verdict;
    const auto lattice = enumerate_subcomplexes(ambient, mode.max_simplices);
    std::vector<Rational> values;
    values.reserve(lattice.size());
    for (const auto& c : lattice) values.push_back(e(c));
    std::map<std::set<Simplex>, std::size_t> position;
    for (std::size_t k = 0; k < lattice.size(); ++k) position.emplace(lattice[k].simplices(), k);
    // Values are cached per lattice element; union and intersection are looked up.
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (std::size_t j = i; j < lattice.size(); ++j) {
            ++verdict.pairs_checked;
            const auto u = position.at(lattice_union(lattice[i], lattice[j]).simplices());
            const auto n = position.at(lattice_intersection(lattice[i], lattice[j]).simplices());
            if (values[u] + values[n] == values[i] + values[j]) continue;
            verdict.holds = false;
            verdict.counterexample =
                ValuationCounterexample{lattice[i], lattice[j], values[u], values[n], values[i], values[j]};
            return verdict;
        }
    }
    return verdict;
}

ValuationVerdict verify_valuation(const ComplexFunction& e, const Complex& ambient, SampledPairs mode,
                                  const std::function<Complex(std::mt19937_64&)>& sampler) {
    ValuationVerdict verdict;
    if (!check_empty(e, verdict)) return verdict;
    std::mt19937_64 rng(mode.seed);
    auto draw = [&]() { return sampler ? sampler(rng) : random_subcomplex(ambient, rng); };
    for (std::size_t k = 0; k < mode.pairs; ++k) {
        const Complex a = draw();
        const Complex b = draw();
        if (!check_pair(e, a, b, verdict)) return verdict;
    }
    return verdict;
}

}  // namespace lefschetz
