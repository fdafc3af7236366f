#include "lefschetz/lefschetz.hpp"

#include <algorithm>
#include <set>

#include "lefschetz/detail/dense_matrix.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/valuation.hpp"

namespace lefschetz {

namespace {

int parity_sign(int q) { return q % 2 == 0 ? 1 : -1; }

}  // namespace

const Rational& AxiomaticEvaluator::simplex_value(const Simplex& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    Rational v = parity_sign(x.dimension()) * self_coefficient(map_, x) + value(boundary_complex(x));
    return memo_.emplace(x, std::move(v)).first->second;
}

Rational AxiomaticEvaluator::value(const Complex& a) {
    if (a.empty()) return 0;
    std::map<Simplex, Rational> values;
    for (const auto& s : a) values.emplace(s, simplex_value(s));
    return extend_valuation(SimplexAssignment(a, std::move(values)), a);
}

Rational simplex_axiom_value(const MapPair& p, const Simplex& x) {
    if (!p.map.refined().contains(x))
        throw DomainError(x.to_string() + " is not a simplex of the refined domain");
    AxiomaticEvaluator eval(p.map);
    return eval.simplex_value(x);
}

Rational lefschetz_axiomatic(const MapPair& p) {
    AxiomaticEvaluator eval(p.map);
    return eval.value(p.subcomplex);
}

Rational lefschetz_open_sum(const MapPair& p) {
    Rational total = 0;
    for (const auto& cell : open_simplex_decomposition(p.subcomplex))
        total += parity_sign(cell.simplex.dimension()) * simplex_coefficient(p, cell.simplex);
    return total;
}

// ---------------------------------------------------------------------------

namespace {

// Strict system a·y + b > 0, solved by Fourier-Motzkin elimination.
struct StrictInequality {
    std::vector<Rational> a;
    Rational b;
};

std::optional<std::vector<Rational>> solve_strict(const std::vector<StrictInequality>& system,
                                                  std::size_t vars) {
    if (vars == 0) {
        for (const auto& c : system)
            if (c.b <= 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    const std::size_t k = vars - 1;
    std::vector<StrictInequality> lower, upper, reduced;
    for (const auto& c : system) {
        if (c.a[k] > 0)
            lower.push_back(c);
        else if (c.a[k] < 0)
            upper.push_back(c);
        else
            reduced.push_back({std::vector<Rational>(c.a.begin(), c.a.begin() + static_cast<std::ptrdiff_t>(k)), c.b});
    }
    // y_k > -(b_L + a_L·y)/a_Lk and y_k < (b_U + a_U·y)/(-a_Uk)
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            StrictInequality combined{std::vector<Rational>(k), lo.a[k] * up.b - up.a[k] * lo.b};
            for (std::size_t i = 0; i < k; ++i) combined.a[i] = lo.a[k] * up.a[i] - up.a[k] * lo.a[i];
            reduced.push_back(std::move(combined));
        }
    auto rest = solve_strict(reduced, k);
    if (!rest) return std::nullopt;
    auto partial = [&](const StrictInequality& c) {
        Rational v = c.b;
        for (std::size_t i = 0; i < k; ++i) v += c.a[i] * (*rest)[i];
        return v;
    };
    std::optional<Rational> lo_bound, up_bound;
    for (const auto& c : lower) {
        Rational bound = -partial(c) / c.a[k];
        if (!lo_bound || bound > *lo_bound) lo_bound = bound;
    }
    for (const auto& c : upper) {
        Rational bound = partial(c) / -c.a[k];
        if (!up_bound || bound < *up_bound) up_bound = bound;
    }
    Rational y;
    if (lo_bound && up_bound)
        y = (*lo_bound + *up_bound) / 2;
    else if (lo_bound)
        y = *lo_bound + 1;
    else if (up_bound)
        y = *up_bound - 1;
    rest->push_back(y);
    return rest;
}

std::optional<FixedPointCertificate> fixed_points_in(const SimplicialMap& f, const Simplex& cell) {
    const auto& k = f.domain();
    std::set<VertexId> coordinate_set;
    for (auto v : cell.vertices()) {
        for (const auto& [b, w] : k.location(v).weights()) coordinate_set.insert(b);
        coordinate_set.insert(f.image(v));
    }
    const std::vector<VertexId> coords(coordinate_set.begin(), coordinate_set.end());
    const std::size_t n = cell.size();

    // Σ_i t_i (loc(v_i) - f(v_i)) = 0 and Σ_i t_i = 1
    detail::DenseMatrix system(coords.size() + 1, n);
    std::vector<Rational> rhs(coords.size() + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& loc = k.location(cell[i]);
        for (std::size_t r = 0; r < coords.size(); ++r)
            system(r, i) = loc.weight(coords[r]) - (f.image(cell[i]) == coords[r] ? 1 : 0);
        system(coords.size(), i) = 1;
    }
    rhs[coords.size()] = 1;
    auto particular = detail::solve(system, rhs);
    if (!particular) return std::nullopt;
    const auto directions = detail::kernel_basis(system);

    std::vector<StrictInequality> positivity;
    for (std::size_t i = 0; i < n; ++i) {
        StrictInequality c{std::vector<Rational>(directions.size()), (*particular)[i]};
        for (std::size_t j = 0; j < directions.size(); ++j) c.a[j] = directions[j][i];
        positivity.push_back(std::move(c));
    }
    auto y = solve_strict(positivity, directions.size());
    if (!y) return std::nullopt;

    std::map<VertexId, Rational> local;
    for (std::size_t i = 0; i < n; ++i) {
        Rational t = (*particular)[i];
        for (std::size_t j = 0; j < directions.size(); ++j) t += directions[j][i] * (*y)[j];
        local.emplace(cell[i], std::move(t));
    }
    std::map<VertexId, Rational> point;
    for (const auto& [v, t] : local)
        for (const auto& [b, w] : k.location(v).weights()) point[b] += t * w;
    return FixedPointCertificate{cell, static_cast<int>(directions.size()), BarycentricPoint(std::move(point)),
                                 std::move(local)};
}

}  // namespace

std::vector<FixedPointCertificate> fixed_point_certificates(const SimplicialMap& f) {
    std::vector<FixedPointCertificate> out;
    for (const auto& cell : f.refined())
        if (auto cert = fixed_points_in(f, cell)) out.push_back(std::move(*cert));
    return out;
}

BarycentricPoint apply_affine(const SimplicialMap& f, const std::map<VertexId, Rational>& local_weights) {
    std::map<VertexId, Rational> image;
    for (const auto& [v, t] : local_weights)
        if (t != 0) image[f.image(v)] += t;
    return BarycentricPoint(std::move(image));
}

bool is_hopf_simplicial(const SimplicialMap& f) {
    const auto maximal = f.refined().maximal_simplices();
    const std::set<Simplex> maximal_set(maximal.begin(), maximal.end());
    for (const auto& cert : fixed_point_certificates(f))
        if (!maximal_set.contains(cert.simplex)) return false;
    return true;
}

Rational hopf_axiom_value(const SimplicialMap& f, const Simplex& x) {
    if (!f.refined().contains(x))
        throw DomainError(x.to_string() + " is not a simplex of the refined domain");
    const auto maximal = f.refined().maximal_simplices();
    const std::set<Simplex> maximal_set(maximal.begin(), maximal.end());
    for (const auto& cert : fixed_point_certificates(f))
        if (!maximal_set.contains(cert.simplex))
            throw PreconditionViolation("map is not Hopf simplicial: fixed point in non-maximal simplex " +
                                        cert.simplex.to_string());
    if (!maximal_set.contains(x)) return 0;
    return parity_sign(f.refined().dimension()) * self_coefficient(f, x);
}

// ---------------------------------------------------------------------------

std::string to_string(Method m) {
    switch (m) {
        case Method::axiomatic: return "axiomatic";
        case Method::open_sum: return "open-sum";
        case Method::chain: return "chain";
        case Method::homological: return "homological";
    }
    return "unknown";
}

std::optional<Rational> evaluate(Method m, const MapPair& p) {
    switch (m) {
        case Method::axiomatic: return lefschetz_axiomatic(p);
        case Method::open_sum: return lefschetz_open_sum(p);
        case Method::chain: return chain_lefschetz(p);
        case Method::homological: return try_homological_lefschetz(p);
    }
    return std::nullopt;
}

LefschetzReport lefschetz_report(const MapPair& p) {
    LefschetzReport r{p, lefschetz_axiomatic(p), lefschetz_open_sum(p), chain_lefschetz(p), std::nullopt};
    for (int q = 0; q <= p.map.refined().dimension(); ++q) r.chain_traces.push_back(chain_trace(p, q));
    const auto basis = homology_basis(p.subcomplex);
    r.betti_numbers = basis.betti_numbers();
    if (homology_route_defined(p)) {
        const auto induced = induced_homology_map(p, basis);
        r.homology_traces = induced.traces();
        Rational total = 0;
        for (std::size_t q = 0; q < r.homology_traces.size(); ++q)
            total += parity_sign(static_cast<int>(q)) * r.homology_traces[q];
        r.value_homological = total;
    }
    r.agree = r.value_axiomatic == r.value_open_sum && r.value_open_sum == r.value_chain &&
              (!r.value_homological || *r.value_homological == r.value_chain);
    return r;
}

}  // namespace lefschetz
