#include "oracles.hpp"

#include <map>

namespace oracle {

namespace {

struct Peeler {
    const SimplexAssignment& s;
    std::map<std::set<Simplex>, Rational> memo;

    Rational operator()(const Complex& a) {
        if (a.empty()) return 0;
        std::set<Simplex> key(a.begin(), a.end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        // The last simplex in the order has top dimension, hence is maximal.
        const Simplex x = *std::prev(a.end());
        std::set<Simplex> rest(a.begin(), a.end());
        rest.erase(x);
        Rational v = (*this)(Complex::from_simplices(std::move(rest))) + s.value(x);
        if (x.dimension() > 0) v -= (*this)(boundary_complex(x));
        memo.emplace(std::move(key), v);
        return v;
    }
};

}  // namespace

Rational peel_evaluate(const SimplexAssignment& s, const Complex& a) {
    Peeler p{s, {}};
    return p(a);
}

SimplexAssignment random_assignment(const Complex& x, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    std::map<Simplex, Rational> values;
    for (const auto& simplex : x) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        values.emplace(simplex, r);
    }
    return SimplexAssignment(x, std::move(values));
}

std::vector<Complex> all_subcomplexes_brute(const Complex& x) {
    const std::vector<Simplex> all(x.begin(), x.end());
    std::vector<Complex> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::set<Simplex> chosen;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) chosen.insert(all[i]);
        bool closed = true;
        for (const auto& s : chosen)
            for (const auto& f : s.faces())
                if (!chosen.contains(f)) closed = false;
        if (closed) out.push_back(Complex::from_simplices(std::move(chosen)));
    }
    return out;
}

}  // namespace oracle
