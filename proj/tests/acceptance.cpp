// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

constexpr Method kMethods[] = {Method::axiomatic, Method::open_sum, Method::chain, Method::homological};

// Thrown by require() with a description of the first failing case.
struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::string str(const Rational& r) { return format_rational(r); }

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;  // 0 means no runtime bound
    std::function<std::string()> body;
};

bool run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = c.body();
    } catch (const Failure& f) {
        ok = false;
        detail = f.what;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
        ok = false;
        detail += "; exceeded " + std::to_string(c.budget_seconds) + " s";
    }
    std::printf("%s criterion %d: %s [%s] (%.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    return ok;
}

Complex sd_sphere() { return barycentric_subdivide(identity_subdivision(corpus::sphere2())).refined(); }

// Maps named by the Hopf trace criterion plus the fixed corpus.
std::vector<corpus::NamedMap> hopf_corpus(std::size_t random_count) {
    auto maps = corpus::named_maps();
    std::mt19937_64 rng(20240601);
    for (std::size_t i = 0; i < random_count; ++i) {
        const Complex x = corpus::random_complex(rng, 10, 2);
        maps.push_back({"random-self-map-" + std::to_string(i), corpus::random_self_map(x, rng)});
    }
    for (auto& m : corpus::random_maps(30, 7)) maps.push_back(std::move(m));
    return maps;
}

std::string hadwiger() {
    std::size_t checked = 0;
    for (const Complex& x : {corpus::triangle(), corpus::sphere2()}) {
        const auto ones = SimplexAssignment::constant(x, 1);
        for (const auto& a : enumerate_subcomplexes(x)) {
            require(extend_valuation(ones, a) == euler_characteristic(a), "mismatch on " + std::to_string(a.size()) +
                                                                              "-simplex subcomplex");
            ++checked;
        }
    }
    return std::to_string(checked) + " subcomplexes";
}

std::string identity_is_euler() {
    std::size_t checked = 0;
    auto check = [&](const SimplicialMap& f, const Complex& a) {
        const Rational chi = euler_characteristic(a);
        const MapPair p(f, a);
        for (auto m : kMethods) {
            const auto v = evaluate(m, p);
            require(v && *v == chi, to_string(m) + " differs from Euler characteristic " + str(chi));
        }
        ++checked;
    };
    for (const Complex& x : {corpus::circle3(), corpus::sphere2()}) {
        const auto f = SimplicialMap::identity(x);
        for (const auto& a : enumerate_subcomplexes(x)) check(f, a);
    }
    const Complex sd = sd_sphere();
    const auto f = SimplicialMap::identity(sd);
    const auto samples = sample_subcomplexes(sd, 500, 99);
    require(samples.size() == 500, "could not draw 500 distinct samples");
    for (const auto& a : samples) check(f, a);
    return std::to_string(checked) + " pairs, 4 evaluators each";
}

std::string hopf_trace() {
    const auto maps = hopf_corpus(100);
    for (const auto& [name, f] : maps) {
        const MapPair p = MapPair::whole(f);
        const Rational c = chain_lefschetz(p), h = homological_lefschetz(p);
        require(c == h, name + ": chain " + str(c) + " vs homological " + str(h));
    }
    return std::to_string(maps.size()) + " maps";
}

std::string degree_regression() {
    std::ostringstream values;
    for (int d = -2; d <= 3; ++d) {
        for (int shift = 0; shift < 3; ++shift) {
            const MapPair p = MapPair::whole(corpus::wrap_map(d, shift));
            const Rational expected = 1 - d;
            require(homological_lefschetz(p) == expected, "homological oracle disagrees at d=" + std::to_string(d));
            for (auto m : kMethods)
                require(*evaluate(m, p) == expected, to_string(m) + " at d=" + std::to_string(d));
        }
        values << (d == -2 ? "" : " ") << "d=" << d << ":" << 1 - d;
    }
    return values.str();
}

std::string valuation_axiom() {
    std::size_t sampled = 0, exhaustive = 0;
    const auto maps = corpus::named_maps();
    for (const auto& [name, f] : maps) {
        for (auto m : {Method::axiomatic, Method::open_sum, Method::chain}) {
            const auto e = [&](const Complex& a) { return *evaluate(m, MapPair(f, a)); };
            const auto v = verify_valuation(e, f.refined(), SampledPairs{1000, 5});
            require(v.holds && v.pairs_checked >= 1000, name + " " + to_string(m) + ": " + v.describe());
            sampled += v.pairs_checked;
            if (f.refined().size() <= 12) {
                const auto w = verify_valuation(e, f.refined(), ExhaustivePairs{12});
                require(w.holds, name + " " + to_string(m) + " exhaustive: " + w.describe());
                exhaustive += w.pairs_checked;
            }
        }
        // The homological route is defined on invariant subcomplexes, which
        // are closed under union and intersection.
        const auto h = [&](const Complex& a) { return homological_lefschetz(MapPair(f, a)); };
        const auto hull = [&](std::mt19937_64& rng) { return invariant_hull(f, random_subcomplex(f.refined(), rng)); };
        const auto v = verify_valuation(h, f.refined(), SampledPairs{1000, 5}, hull);
        require(v.holds && v.pairs_checked >= 1000, name + " homological: " + v.describe());
        sampled += v.pairs_checked;
        if (f.refined().size() <= 12) {
            std::vector<Complex> invariant;
            for (auto& a : enumerate_subcomplexes(f.refined()))
                if (invariant_hull(f, a) == a) invariant.push_back(std::move(a));
            std::vector<Rational> values;
            for (const auto& a : invariant) values.push_back(h(a));
            require(values.front() == 0, name + " homological: nonzero on the empty subcomplex");
            for (std::size_t i = 0; i < invariant.size(); ++i)
                for (std::size_t j = i; j < invariant.size(); ++j) {
                    const Rational lhs = h(lattice_union(invariant[i], invariant[j])) +
                                         h(lattice_intersection(invariant[i], invariant[j]));
                    require(lhs == values[i] + values[j], name + " homological exhaustive");
                    ++exhaustive;
                }
        }
    }
    return std::to_string(maps.size()) + " maps, " + std::to_string(sampled) + " sampled and " +
           std::to_string(exhaustive) + " exhaustive pairs";
}

std::string four_way_agreement() {
    std::size_t reports = 0, homological = 0;
    std::uint64_t seed = 0;
    for (const auto& [name, f] : hopf_corpus(100)) {
        const auto r = lefschetz_report(MapPair::whole(f));
        require(r.agree && r.value_homological, name + ": report disagrees");
        ++reports;
        ++homological;
        for (const auto& a : sample_subcomplexes(f.refined(), 3, ++seed)) {
            const auto s = lefschetz_report(MapPair(f, a));
            require(s.agree, name + ": report disagrees on a subcomplex");
            ++reports;
            if (s.value_homological) ++homological;
        }
    }
    return std::to_string(reports) + " reports, " + std::to_string(homological) + " with all four routes defined";
}

std::string hopf_classification() {
    const auto sq = corpus::square_reflection();
    require(is_hopf_simplicial(sq), "square reflection not classified Hopf simplicial");
    const auto certs = fixed_point_certificates(sq);
    require(certs.size() == 2, "square reflection has " + std::to_string(certs.size()) + " fixed-point certificates");
    for (const auto& c : certs) {
        require(c.simplex.dimension() == 1, "square reflection fixed point outside an open edge");
        for (const auto& [v, w] : c.local_weights) require(w == Rational(1, 2), "fixed point is not an edge midpoint");
    }
    const MapPair whole = MapPair::whole(sq);
    for (const auto& x : sq.refined())
        require(hopf_axiom_value(sq, x) == simplex_axiom_value(whole, x), "axiom values differ on " + x.to_string());
    require(lefschetz_axiomatic(whole) == 2, "square reflection L != 2");

    const auto t = corpus::reflection();
    require(!is_hopf_simplicial(t), "3-circle reflection classified Hopf simplicial");
    const auto tc = fixed_point_certificates(t);
    require(!tc.empty() && tc.front().simplex == Simplex{0}, "no certificate at vertex 0");
    return "square: 2 edge midpoints, L = 2; 3-circle reflection: vertex 0 certificate";
}

std::string chain_identities() {
    std::vector<std::pair<std::string, SubdividedComplex>> cases{
        {"identity circle", identity_subdivision(corpus::circle3())},
        {"identity triangle", identity_subdivision(corpus::triangle())},
        {"identity sphere", identity_subdivision(corpus::sphere2())},
        {"hexagon", corpus::hexagon()},
    };
    const auto sd1 = barycentric_subdivide(identity_subdivision(corpus::sphere2()));
    cases.emplace_back("sd sphere", sd1);
    cases.emplace_back("sd^2 sphere", barycentric_subdivide(sd1));
    for (const auto& [name, k] : cases) {
        const auto s = subdivision_operator(k);
        for (const Complex* c : {&k.base(), &k.refined()})
            for (int q = 2; q <= c->dimension(); ++q)
                require(compose(boundary_operator(*c, q - 1), boundary_operator(*c, q)).is_zero(), name + ": ∂∂ != 0");
        for (int q = 1; q <= k.base().dimension(); ++q)
            require(compose(boundary_operator(k.refined(), q), s[q]) == compose(s[q - 1], boundary_operator(k.base(), q)),
                    name + ": ∂s != s∂ in degree " + std::to_string(q));
    }
    return std::to_string(cases.size()) + " subdivisions";
}

std::string uniqueness_witness() {
    std::mt19937_64 rng(424242);
    std::size_t checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        for (const Complex& x : {corpus::circle3(), corpus::triangle()}) {
            const auto s = oracle::random_assignment(x, rng);
            for (const auto& a : oracle::all_subcomplexes_brute(x)) {
                require(extend_valuation(s, a) == oracle::peel_evaluate(s, a), "Möbius and peeling evaluators differ");
                ++checked;
            }
        }
    }
    return "20 assignments, " + std::to_string(checked) + " evaluations";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "all-ones extension equals Euler characteristic", 5, hadwiger},
        {2, "identity map evaluates to Euler characteristic", 0, identity_is_euler},
        {3, "chain trace equals homology trace", 60, hopf_trace},
        {4, "wrap map of degree d has L = 1 - d", 0, degree_regression},
        {5, "inclusion-exclusion for every evaluator", 0, valuation_axiom},
        {6, "four-way agreement", 0, four_way_agreement},
        {7, "Hopf classification and axiom", 0, hopf_classification},
        {8, "boundary and subdivision identities", 30, chain_identities},
        {9, "Möbius extension equals peeling evaluator", 0, uniqueness_witness},
    };
    int failed = 0;
    for (const auto& c : criteria)
        if (!run(c)) ++failed;
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
