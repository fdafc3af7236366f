#include <doctest.h>

#include "corpus.hpp"
#include "lefschetz/errors.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

int parity(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("all-ones weights alternate with dimension") {
    const auto w = mobius_weights(SimplexAssignment::constant(corpus::triangle(), 1));
    REQUIRE(w.size() == corpus::triangle().size());
    for (const auto& [rho, weight] : w) CHECK(weight == parity(rho.dimension()));
}

TEST_CASE("indicator of one vertex") {
    const Complex x = corpus::triangle();
    std::map<Simplex, Rational> values;
    for (const auto& s : x) values.emplace(s, s == Simplex{0} ? 1 : 0);
    const auto w = mobius_weights(SimplexAssignment(x, values));
    CHECK(w.at(Simplex{0}) == 1);
    CHECK(w.at(Simplex{1}) == 0);
    CHECK(w.at(Simplex{0, 1}) == -1);
    CHECK(w.at(Simplex{0, 2}) == -1);
    CHECK(w.at(Simplex{1, 2}) == 0);
    CHECK(w.at(Simplex{0, 1, 2}) == 1);
}

TEST_CASE("weights reproduce the closed-simplex values") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex x = corpus::random_complex(rng, 8, 3);
        const auto s = oracle::random_assignment(x, rng);
        const auto w = mobius_weights(s);
        for (const auto& simplex : x) {
            Rational sum = 0;
            for (const auto& face : closure(simplex)) sum += w.at(face);
            REQUIRE(sum == s.value(simplex));
            REQUIRE(extend_valuation(s, closure(simplex)) == s.value(simplex));
        }
        REQUIRE(extend_valuation(s, Complex{}) == 0);
    }
}

TEST_CASE("all-ones extension is the Euler characteristic") {
    for (const Complex& x : {corpus::triangle(), corpus::sphere2(), corpus::square()}) {
        const auto s = SimplexAssignment::constant(x, 1);
        for (const auto& a : enumerate_subcomplexes(x)) REQUIRE(extend_valuation(s, a) == euler_characteristic(a));
    }
}

TEST_CASE("assignments must be total and extensions must stay inside the ambient") {
    const Complex x = corpus::circle3();
    std::map<Simplex, Rational> partial{{Simplex{0}, 1}};
    CHECK_THROWS_AS(SimplexAssignment(x, partial), MalformedInput);
    std::map<Simplex, Rational> extra;
    for (const auto& s : x) extra.emplace(s, 1);
    extra.emplace(Simplex{7}, 1);
    CHECK_THROWS_AS(SimplexAssignment(x, extra), MalformedInput);
    const auto s = SimplexAssignment::constant(x, 1);
    CHECK_THROWS_AS(extend_valuation(s, build_complex({{0, 7}})), DomainError);
}

TEST_CASE("Möbius extension agrees with the peeling evaluator") {
    std::mt19937_64 rng(77);
    for (const Complex& x : {corpus::circle3(), corpus::triangle(), corpus::square()}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto s = oracle::random_assignment(x, rng);
            for (const auto& a : enumerate_subcomplexes(x)) REQUIRE(extend_valuation(s, a) == oracle::peel_evaluate(s, a));
        }
    }
}

TEST_CASE("extensions satisfy the valuation law") {
    std::mt19937_64 rng(2);
    for (const Complex& x : {corpus::circle3(), corpus::triangle()}) {
        const auto s = oracle::random_assignment(x, rng);
        const auto verdict = verify_valuation([&](const Complex& a) { return extend_valuation(s, a); }, x, ExhaustivePairs{});
        CHECK(verdict.holds);
        CHECK(verdict.pairs_checked > 0);
    }
    const auto chi = [](const Complex& a) { return Rational(euler_characteristic(a)); };
    CHECK(verify_valuation(chi, corpus::circle3(), ExhaustivePairs{}).holds);
    const auto sampled = verify_valuation(chi, corpus::sphere2(), SampledPairs{1000, 3});
    CHECK(sampled.holds);
    CHECK(sampled.pairs_checked == 1000);
}

TEST_CASE("counting maximal simplices") {
    const auto count = [](const Complex& a) { return Rational(static_cast<long>(a.maximal_simplices().size())); };

    // On the five subcomplexes of a closed edge the count happens to satisfy
    // inclusion-exclusion: for A = [0], B = [1] both sides are 2.
    const Complex edge = build_complex({{0, 1}});
    CHECK(oracle::all_subcomplexes_brute(edge).size() == 5);
    CHECK(verify_valuation(count, edge, ExhaustivePairs{}).holds);
    const Complex a = build_complex({{0}}), b = build_complex({{1}});
    CHECK(count(lattice_union(a, b)) + count(lattice_intersection(a, b)) == count(a) + count(b));

    // Two edges of a triangle against the third: 3 + 2 != 2 + 1.
    const auto verdict = verify_valuation(count, corpus::triangle(), ExhaustivePairs{});
    REQUIRE_FALSE(verdict.holds);
    REQUIRE(verdict.counterexample.has_value());
    const auto& ce = *verdict.counterexample;
    CHECK(ce.value_union + ce.value_intersection != ce.value_a + ce.value_b);
    CHECK(count(lattice_union(ce.a, ce.b)) == ce.value_union);
    CHECK_FALSE(verdict.describe().empty());
    const Complex path = build_complex({{0, 1}, {1, 2}}), third = build_complex({{0, 2}});
    CHECK(count(lattice_union(path, third)) + count(lattice_intersection(path, third)) == 5);

    const auto shifted = verify_valuation([](const Complex&) { return Rational(1); }, edge, ExhaustivePairs{});
    CHECK_FALSE(shifted.holds);
    CHECK(shifted.empty_value == Rational(1));
}

TEST_CASE("exhaustive mode refuses large lattices") {
    const auto sd = barycentric_subdivide(identity_subdivision(corpus::sphere2()));
    const auto chi = [](const Complex& a) { return Rational(euler_characteristic(a)); };
    CHECK_THROWS_AS(verify_valuation(chi, sd.refined(), ExhaustivePairs{}), CombinatorialLimit);
}
