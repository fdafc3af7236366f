#include <doctest.h>

#include "corpus.hpp"
#include "lefschetz/errors.hpp"

using namespace lefschetz;

namespace {

// Rank of the boundary matrix modulo a large prime; agrees with the rational
// rank as long as the prime does not divide any torsion.
std::size_t boundary_rank_mod_p(const Complex& x, int q) {
    constexpr std::int64_t p = 1000003;
    const auto rows = x.simplices_of_dimension(q - 1);
    const auto cols = x.simplices_of_dimension(q);
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int i = 0; i <= q; ++i) {
            const auto face = cols[c].facet(i);
            const auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
            m[r][c] = (i % 2 == 0) ? 1 : p - 1;
        }
    auto power = [&](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        for (b %= p; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = power(m[rank][c], p - 2);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::int64_t factor = m[r][c] * inv % p;
            for (std::size_t k = c; k < cols.size(); ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> betti_oracle(const Complex& x) {
    std::vector<std::size_t> b;
    for (int q = 0; q <= x.dimension(); ++q) {
        const std::size_t in = q >= 1 ? boundary_rank_mod_p(x, q) : 0;
        const std::size_t out = q < x.dimension() ? boundary_rank_mod_p(x, q + 1) : 0;
        b.push_back(x.count(q) - in - out);
    }
    return b;
}

}  // namespace

TEST_CASE("Betti numbers of the basic spaces") {
    CHECK(homology_basis(corpus::circle3()).betti_numbers() == std::vector<std::size_t>{1, 1});
    CHECK(homology_basis(corpus::sphere2()).betti_numbers() == std::vector<std::size_t>{1, 0, 1});
    CHECK(homology_basis(corpus::triangle()).betti_numbers() == std::vector<std::size_t>{1, 0, 0});
    CHECK(homology_basis(Complex{}).betti_numbers().empty());
    const auto sd = barycentric_subdivide(identity_subdivision(corpus::sphere2()));
    CHECK(homology_basis(sd.refined()).betti_numbers() == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("Betti numbers agree with an independent rank computation") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const Complex x = corpus::random_complex(rng, 10, 3);
        const auto h = homology_basis(x);
        REQUIRE(h.betti_numbers() == betti_oracle(x));
        REQUIRE(h.betti(0) == connected_components(x));
        long alternating = 0;
        for (int q = 0; q <= x.dimension(); ++q)
            alternating += (q % 2 ? -1 : 1) * static_cast<long>(h.betti(q));
        REQUIRE(alternating == euler_characteristic(x));
    }
}

TEST_CASE("representatives are cycles and project to unit vectors") {
    const auto sd = barycentric_subdivide(identity_subdivision(corpus::sphere2()));
    for (const Complex& x : {corpus::circle3(), sd.refined(), build_complex({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {3, 5}})}) {
        const auto h = homology_basis(x);
        for (int q = 0; q <= x.dimension(); ++q) {
            const auto& reps = h.cycles(q);
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (q >= 1) REQUIRE(boundary(reps[i]).is_zero());
                const auto coords = h.project(reps[i]);
                for (std::size_t j = 0; j < coords.size(); ++j) REQUIRE(coords[j] == (i == j ? 1 : 0));
            }
            for (const auto& b : h.boundaries(q))
                for (const auto& c : h.project(b)) REQUIRE(c == 0);
        }
    }
    const auto h = homology_basis(corpus::circle3());
    CHECK_THROWS_AS(h.project(Chain::of(Simplex{0, 1})), ConsistencyFailure);
}

TEST_CASE("induced maps on the circle") {
    auto h1 = [](const SimplicialMap& f) {
        const auto m = induced_homology_map(MapPair::whole(f));
        REQUIRE(m.by_dimension.size() == 2);
        REQUIRE(m.by_dimension[1].rows() == 1);
        return m.by_dimension[1](0, 0);
    };
    CHECK(h1(corpus::rotation()) == 1);
    CHECK(h1(corpus::reflection()) == -1);
    CHECK(h1(corpus::hexagon_doubling()) == 2);
    CHECK(h1(corpus::self_map(corpus::circle3(), {1, 1, 1})) == 0);
    for (int d = -2; d <= 3; ++d) CHECK(h1(corpus::wrap_map(d, 1)) == d);
}

TEST_CASE("identity induces the identity on homology") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex x = corpus::random_complex(rng, 9, 2);
        const auto m = induced_homology_map(MapPair::whole(SimplicialMap::identity(x)));
        for (const auto& block : m.by_dimension)
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c) REQUIRE(block(r, c) == (r == c ? 1 : 0));
    }
}

TEST_CASE("homological and chain Lefschetz numbers agree on the whole complex") {
    for (const auto& [name, f] : corpus::named_maps()) {
        INFO(name);
        CHECK(homological_lefschetz(MapPair::whole(f)) == chain_lefschetz(MapPair::whole(f)));
    }
    for (const auto& [name, f] : corpus::random_maps(60, 8)) {
        INFO(name);
        const MapPair p = MapPair::whole(f);
        const auto h = induced_homology_map(p);
        for (std::size_t q = 0; q < h.by_dimension.size(); ++q)
            REQUIRE(h.by_dimension[q].rows() == homology_basis(f.refined()).betti(static_cast<int>(q)));
        REQUIRE(homological_lefschetz(p) == chain_lefschetz(p));
    }
}

TEST_CASE("homological route on subcomplexes") {
    const auto f = SimplicialMap::identity(corpus::sphere2());
    for (const auto& a : sample_subcomplexes(corpus::sphere2(), 40, 2)) {
        const MapPair p(f, a);
        REQUIRE(homology_route_defined(p));
        REQUIRE(homological_lefschetz(p) == euler_characteristic(a));
    }

    // The rotation moves the edge [0,1] off itself, so j_A s f is not a chain
    // map on that edge.
    const MapPair edge(corpus::rotation(), build_complex({{0, 1}}));
    CHECK_FALSE(homology_route_defined(edge));
    CHECK_FALSE(try_homological_lefschetz(edge).has_value());
    CHECK_THROWS_AS(homological_lefschetz(edge), DomainError);

    const MapPair fixed(corpus::reflection(), build_complex({{0}}));
    CHECK(try_homological_lefschetz(fixed) == Rational(1));
}

TEST_CASE("invariant hull") {
    const auto f = corpus::reflection();
    CHECK(invariant_hull(f, build_complex({{0}})) == build_complex({{0}}));
    CHECK(invariant_hull(f, build_complex({{1}})) == build_complex({{1}, {2}}));
    CHECK(invariant_hull(f, build_complex({{0, 1}})) == build_complex({{0, 1}, {0, 2}}));
    std::uint64_t seed = 0;
    for (const auto& [name, g] : corpus::random_maps(30, 12)) {
        INFO(name);
        for (const auto& seed_complex : sample_subcomplexes(g.refined(), 4, ++seed)) {
            const Complex hull = invariant_hull(g, seed_complex);
            REQUIRE(seed_complex.is_subcomplex_of(hull));
            REQUIRE(hull.is_face_closed());
            REQUIRE(homology_route_defined(MapPair(g, hull)));
        }
    }
}
