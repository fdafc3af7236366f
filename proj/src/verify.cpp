#include "lefschetz/verify.hpp"

#include <set>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

CheckResult check_boundary_squared(const std::string& which, const Complex& c) {
    const std::string name = "boundary-squared(" + which + ")";
    for (int q = 2; q <= c.dimension(); ++q) {
        const auto dd = compose(boundary_operator(c, q - 1), boundary_operator(c, q));
        if (!dd.is_zero())
            return fail(name, "∂∂ != 0 on " + dd.columns().begin()->first.to_string());
    }
    return pass(name);
}

CheckResult check_subdivision_chain_map(const SubdividedComplex& k) {
    const std::string name = "subdivision-chain-map";
    const auto s = subdivision_operator(k);
    for (int q = 1; q <= k.base().dimension(); ++q) {
        const auto lhs = compose(boundary_operator(k.refined(), q), s[q]);
        const auto rhs = compose(s[q - 1], boundary_operator(k.base(), q));
        if (lhs != rhs) return fail(name, "∂s != s∂ in dimension " + std::to_string(q));
    }
    return pass(name);
}

CheckResult check_induced_chain_map(const SimplicialMap& f) {
    const std::string name = "induced-chain-map";
    for (int q = 1; q <= f.refined().dimension(); ++q) {
        const auto lhs = compose(boundary_operator(f.base(), q), induced_chain_map(f, q));
        const auto rhs = compose(induced_chain_map(f, q - 1), boundary_operator(f.refined(), q));
        if (lhs != rhs) return fail(name, "∂f != f∂ in dimension " + std::to_string(q));
    }
    return pass(name);
}

CheckResult valuation_check(const std::string& name, const ComplexFunction& e, const Complex& ambient,
                            const VerifyOptions& options,
                            const std::function<Complex(std::mt19937_64&)>& sampler = {}) {
    ValuationVerdict v;
    if (!sampler && ambient.size() <= options.exhaustive_limit)
        v = verify_valuation(e, ambient, ExhaustivePairs{options.exhaustive_limit});
    else
        v = verify_valuation(e, ambient, SampledPairs{options.sampled_pairs, options.seed}, sampler);
    return {name, v.holds, v.describe()};
}

}  // namespace

std::vector<CheckResult> verify_problem(const Problem& problem, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    const auto& domain = problem.domain;
    out.push_back(check_boundary_squared("base", domain.base()));
    out.push_back(check_boundary_squared("refined", domain.refined()));
    out.push_back(check_subdivision_chain_map(domain));
    out.push_back(valuation_check(
        "valuation-law(euler)", [](const Complex& a) { return Rational(euler_characteristic(a)); },
        domain.refined(), options));

    std::optional<SimplicialMap> map = problem.map;
    if (!map && domain.is_identity()) map = SimplicialMap::identity(domain.base());
    if (!map) return out;
    const SimplicialMap& f = *map;

    out.push_back(check_induced_chain_map(f));

    for (Method m : {Method::axiomatic, Method::open_sum, Method::chain}) {
        out.push_back(valuation_check(
            "valuation-law(" + to_string(m) + ")",
            [&](const Complex& a) { return *evaluate(m, MapPair(f, a)); }, f.refined(), options));
    }
    // The homological route is only defined where the operator is a chain
    // map on C(A); pairs are drawn from the invariant sublattice.
    out.push_back(valuation_check(
        "valuation-law(homological)",
        [&](const Complex& a) { return homological_lefschetz(MapPair(f, a)); }, f.refined(), options,
        [&](std::mt19937_64& rng) { return invariant_hull(f, random_subcomplex(f.refined(), rng)); }));

    {
        const MapPair whole = MapPair::whole(f);
        const Rational chain = chain_lefschetz(whole);
        const Rational homological = homological_lefschetz(whole);
        out.push_back(chain == homological
                          ? pass("hopf-trace", "L = " + format_rational(chain))
                          : fail("hopf-trace", "chain " + format_rational(chain) + " != homological " +
                                                   format_rational(homological)));
    }
    {
        const auto report = lefschetz_report(MapPair(f, problem.subcomplex));
        std::string detail = "axiomatic " + format_rational(report.value_axiomatic) + ", open-sum " +
                             format_rational(report.value_open_sum) + ", chain " +
                             format_rational(report.value_chain) + ", homological " +
                             (report.value_homological ? format_rational(*report.value_homological)
                                                       : std::string("undefined"));
        out.push_back({"four-way-agreement", report.agree, std::move(detail)});
    }
    {
        const MapPair whole = MapPair::whole(f);
        AxiomaticEvaluator eval(f);
        std::string problem_at;
        for (const auto& x : f.refined()) {
            if (eval.simplex_value(x) != eval.value(boundary_complex(x)) +
                                             (x.dimension() % 2 == 0 ? 1 : -1) * simplex_coefficient(whole, x) ||
                lefschetz_open_sum(MapPair(f, closure(x))) != eval.simplex_value(x)) {
                problem_at = x.to_string();
                break;
            }
        }
        out.push_back(problem_at.empty() ? pass("simplex-axiom") : fail("simplex-axiom", "fails at " + problem_at));
    }

    const auto certs = fixed_point_certificates(f);
    {
        std::string problem_at;
        for (const auto& x : f.refined()) {
            if (self_coefficient(f, x) == 0) continue;
            bool found = false;
            for (const auto& c : certs) found = found || c.simplex.is_face_of(x);
            if (!found) {
                problem_at = x.to_string();
                break;
            }
        }
        for (const auto& c : certs)
            if (apply_affine(f, c.local_weights) != c.witness) problem_at = "witness in " + c.simplex.to_string();
        out.push_back(problem_at.empty() ? pass("fixed-point-soundness", std::to_string(certs.size()) + " certificates")
                                         : fail("fixed-point-soundness", "no fixed point for " + problem_at));
    }
    if (is_hopf_simplicial(f)) {
        AxiomaticEvaluator eval(f);
        std::string problem_at;
        const bool pure = [&] {
            for (const auto& m : f.refined().maximal_simplices())
                if (m.dimension() != f.refined().dimension()) return false;
            return true;
        }();
        if (pure)
            for (const auto& x : f.refined())
                if (hopf_axiom_value(f, x) != eval.simplex_value(x)) {
                    problem_at = x.to_string();
                    break;
                }
        out.push_back(problem_at.empty() ? pass("hopf-axiom", pure ? "" : "skipped: complex is not pure")
                                         : fail("hopf-axiom", "differs from the simplex axiom at " + problem_at));
    }
    return out;
}

}  // namespace lefschetz
