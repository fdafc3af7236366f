#include "lefschetz/homology.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

std::size_t index_of(const std::vector<Simplex>& order, const Simplex& s) {
    auto it = std::lower_bound(order.begin(), order.end(), s);
    if (it == order.end() || *it != s)
        throw ConsistencyFailure("chain term " + s.to_string() + " is outside the complex");
    return static_cast<std::size_t>(it - order.begin());
}

Chain to_chain(const std::vector<Simplex>& order, const std::vector<Rational>& coords, int q) {
    Chain c(q);
    for (std::size_t i = 0; i < coords.size(); ++i) c.add(order[i], coords[i]);
    return c;
}

}  // namespace

std::size_t HomologyBasis::betti(int q) const {
    if (q < 0 || q > dimension()) return 0;
    return degrees_[static_cast<std::size_t>(q)].cycles.size();
}

std::vector<std::size_t> HomologyBasis::betti_numbers() const {
    std::vector<std::size_t> out;
    for (int q = 0; q <= dimension(); ++q) out.push_back(betti(q));
    return out;
}

const std::vector<Chain>& HomologyBasis::cycles(int q) const {
    return degrees_.at(static_cast<std::size_t>(q)).cycles;
}

const std::vector<Chain>& HomologyBasis::boundaries(int q) const {
    return degrees_.at(static_cast<std::size_t>(q)).boundaries;
}

std::vector<Rational> HomologyBasis::project(const Chain& z) const {
    const int q = z.dimension();
    if (z.is_zero()) return std::vector<Rational>(betti(q));
    if (q < 0 || q > dimension())
        throw ConsistencyFailure("chain of dimension " + std::to_string(q) + " outside the complex");
    const auto& deg = degrees_[static_cast<std::size_t>(q)];
    std::vector<Rational> rhs(deg.simplices.size());
    for (const auto& [s, c] : z.terms()) rhs[index_of(deg.simplices, s)] = c;
    auto x = detail::solve(deg.frame, rhs);
    if (!x) throw ConsistencyFailure("chain passed to homology projection is not a cycle");
    return std::vector<Rational>(x->begin() + static_cast<std::ptrdiff_t>(deg.boundaries.size()), x->end());
}

HomologyBasis homology_basis(const Complex& c) {
    HomologyBasis h;
    h.complex_ = c;
    const int top = c.dimension();
    std::vector<std::vector<Simplex>> simplices(static_cast<std::size_t>(top + 2));
    for (const auto& s : c) simplices[static_cast<std::size_t>(s.dimension())].push_back(s);

    // boundary_matrix(q): rows (q-1)-simplices, columns q-simplices
    auto boundary_matrix = [&](int q) {
        const auto& rows = simplices[static_cast<std::size_t>(q - 1)];
        const auto& cols = simplices[static_cast<std::size_t>(q)];
        detail::DenseMatrix d(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i)
                d(index_of(rows, cols[j].facet(i)), j) = (i % 2 == 0) ? 1 : -1;
        return d;
    };

    for (int q = 0; q <= top; ++q) {
        HomologyBasis::Degree deg;
        deg.simplices = simplices[static_cast<std::size_t>(q)];
        const std::size_t n = deg.simplices.size();

        std::vector<std::vector<Rational>> kernel;
        if (q == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Rational> e(n);
                e[i] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            kernel = detail::kernel_basis(boundary_matrix(q));
        }

        std::vector<std::vector<Rational>> boundary_columns;
        if (q < top) {
            const auto d_next = boundary_matrix(q + 1);
            auto reduced = d_next;
            for (auto col : reduced.row_reduce()) boundary_columns.push_back(d_next.column(col));
        }

        const std::size_t r = boundary_columns.size();
        detail::DenseMatrix candidates(n, r + kernel.size());
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < n; ++i) candidates(i, j) = boundary_columns[j][i];
        for (std::size_t j = 0; j < kernel.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) candidates(i, r + j) = kernel[j][i];
        auto reduced = candidates;
        std::vector<std::size_t> chosen;
        for (auto col : reduced.row_reduce())
            if (col >= r) chosen.push_back(col - r);

        deg.frame = detail::DenseMatrix(n, r + chosen.size());
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < n; ++i) deg.frame(i, j) = boundary_columns[j][i];
            deg.boundaries.push_back(to_chain(deg.simplices, boundary_columns[j], q));
        }
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const auto& v = kernel[chosen[k]];
            for (std::size_t i = 0; i < n; ++i) deg.frame(i, r + k) = v[i];
            deg.cycles.push_back(to_chain(deg.simplices, v, q));
        }
        h.degrees_.push_back(std::move(deg));
    }
    return h;
}

// ---------------------------------------------------------------------------

Rational InducedHomologyMap::trace(int q) const {
    if (q < 0 || q >= static_cast<int>(by_dimension.size())) return 0;
    const auto& m = by_dimension[static_cast<std::size_t>(q)];
    Rational tr = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    return tr;
}

std::vector<Rational> InducedHomologyMap::traces() const {
    std::vector<Rational> out;
    for (int q = 0; q < static_cast<int>(by_dimension.size()); ++q) out.push_back(trace(q));
    return out;
}

ChainOperator restricted_chain_operator(const MapPair& p, int q) {
    return compose(restriction_operator(p.subcomplex, p.map.refined(), q),
                   lefschetz_chain_operator(p, q));
}

bool homology_route_defined(const MapPair& p) {
    const int top = p.subcomplex.dimension();
    std::vector<ChainOperator> ops;
    for (int q = 0; q <= top; ++q) ops.push_back(restricted_chain_operator(p, q));
    for (int q = 1; q <= top; ++q) {
        for (const auto& s : p.subcomplex) {
            if (s.dimension() != q) continue;
            const Chain forward = boundary(ops[static_cast<std::size_t>(q)].apply(s));
            const Chain backward = ops[static_cast<std::size_t>(q - 1)].apply(boundary(Chain::of(s)));
            if (forward == backward) continue;
            if (p.is_whole())
                throw ConsistencyFailure("induced operator on the refined complex fails to commute "
                                         "with the boundary at " + s.to_string());
            return false;
        }
    }
    return true;
}

InducedHomologyMap induced_homology_map(const MapPair& p) {
    return induced_homology_map(p, homology_basis(p.subcomplex));
}

InducedHomologyMap induced_homology_map(const MapPair& p, const HomologyBasis& basis) {
    if (basis.complex() != p.subcomplex)
        throw std::invalid_argument("homology basis was computed for a different complex");
    if (!homology_route_defined(p))
        throw DomainError("the pair's chain operator is not a chain map on the selected subcomplex; "
                          "its homology trace is undefined");
    InducedHomologyMap out;
    for (int q = 0; q <= basis.dimension(); ++q) {
        const auto op = restricted_chain_operator(p, q);
        const auto& reps = basis.cycles(q);
        detail::DenseMatrix m(reps.size(), reps.size());
        for (std::size_t j = 0; j < reps.size(); ++j) {
            const Chain image = op.apply(reps[j]);
            if (!boundary(image).is_zero())
                throw ConsistencyFailure("image of a homology representative in dimension " +
                                         std::to_string(q) + " is not a cycle");
            const auto coords = basis.project(image);
            for (std::size_t i = 0; i < reps.size(); ++i) m(i, j) = coords[i];
        }
        out.by_dimension.push_back(std::move(m));
    }
    return out;
}

Rational homological_lefschetz(const MapPair& p) {
    const auto induced = induced_homology_map(p);
    Rational total = 0;
    for (int q = 0; q < static_cast<int>(induced.by_dimension.size()); ++q)
        total += (q % 2 == 0 ? 1 : -1) * induced.trace(q);
    return total;
}

std::optional<Rational> try_homological_lefschetz(const MapPair& p) {
    if (!homology_route_defined(p)) return std::nullopt;
    return homological_lefschetz(p);
}

}  // namespace lefschetz

namespace lefschetz {

Complex invariant_hull(const SimplicialMap& f, const Complex& seed) {
    if (!seed.is_subcomplex_of(f.refined()))
        throw DomainError("seed is not a subcomplex of the refined domain");
    const auto s = subdivision_operator(f.domain());
    std::vector<Simplex> pending(seed.begin(), seed.end());
    std::set<Simplex> members;
    while (!pending.empty()) {
        Simplex x = std::move(pending.back());
        pending.pop_back();
        if (!members.insert(x).second) continue;
        if (x.dimension() > 0)
            for (std::size_t i = 0; i < x.size(); ++i) pending.push_back(x.facet(i));
        if (auto img = f.oriented_image(x)) {
            const Chain image = s[x.dimension()].apply(img->simplex);
            for (const auto& [y, c] : image.terms()) pending.push_back(y);
        }
    }
    return Complex::from_simplices(std::move(members));
}

}  // namespace lefschetz
