#include "lefschetz/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw MalformedInput("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw MalformedInput("repeated vertex " + std::to_string(label(
            *std::adjacent_find(vertices_.begin(), vertices_.end()))) + " in simplex");
}

Simplex::Simplex(std::initializer_list<std::uint32_t> labels)
    : Simplex(from_labels(std::span<const std::uint32_t>(labels.begin(), labels.size()))) {}

Simplex Simplex::from_labels(std::span<const std::uint32_t> labels) {
    std::vector<VertexId> vs;
    vs.reserve(labels.size());
    for (auto l : labels) vs.push_back(vertex(l));
    return Simplex(std::move(vs));
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

Simplex Simplex::facet(std::size_t omitted) const {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (i != omitted) vs.push_back(vertices_[i]);
    return Simplex(Sorted{}, std::move(vs));
}

std::vector<Simplex> Simplex::faces() const {
    const std::size_t n = vertices_.size();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<VertexId> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) vs.push_back(vertices_[i]);
        out.push_back(Simplex(Sorted{}, std::move(vs)));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? "," : "") << label(vertices_[i]);
    os << ']';
    return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

// ---------------------------------------------------------------------------

Complex Complex::from_simplices(std::set<Simplex> simplices) {
    Complex c(std::move(simplices));
    if (!c.is_face_closed())
        throw MalformedInput("simplex set is not closed under taking faces");
    return c;
}

Complex Complex::closure_of(std::span<const Simplex> generators) {
    std::set<Simplex> out;
    for (const auto& g : generators) {
        if (out.contains(g)) continue;
        for (auto& f : g.faces()) out.insert(std::move(f));
    }
    return Complex(std::move(out));
}

int Complex::dimension() const {
    return simplices_.empty() ? -1 : simplices_.rbegin()->dimension();
}

std::size_t Complex::count(int q) const {
    return static_cast<std::size_t>(std::count_if(
        simplices_.begin(), simplices_.end(), [q](const Simplex& s) { return s.dimension() == q; }));
}

std::vector<Simplex> Complex::simplices_of_dimension(int q) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (s.dimension() == q) out.push_back(s);
    return out;
}

std::vector<Simplex> Complex::maximal_simplices() const {
    // A simplex is maximal iff no cofacet is present; cofacets add one vertex,
    // so it suffices to look among the simplices one dimension up.
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        bool maximal = true;
        for (auto it = simplices_.upper_bound(s); it != simplices_.end(); ++it) {
            if (it->dimension() > s.dimension() + 1) break;
            if (it->dimension() == s.dimension() + 1 && s.is_face_of(*it)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<VertexId> Complex::vertices() const {
    std::vector<VertexId> out;
    for (const auto& s : simplices_) {
        if (s.dimension() > 0) break;
        out.push_back(s[0]);
    }
    return out;
}

bool Complex::is_subcomplex_of(const Complex& ambient) const {
    return std::includes(ambient.simplices_.begin(), ambient.simplices_.end(),
                         simplices_.begin(), simplices_.end());
}

bool Complex::is_face_closed() const {
    for (const auto& s : simplices_) {
        if (s.dimension() == 0) continue;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!simplices_.contains(s.facet(i))) return false;
    }
    return true;
}

Complex OpenSimplex::closure() const { return lefschetz::closure(simplex); }

// ---------------------------------------------------------------------------

Complex build_complex(const std::vector<std::vector<std::uint32_t>>& maximal) {
    std::vector<Simplex> gens;
    gens.reserve(maximal.size());
    for (const auto& labels : maximal) gens.push_back(Simplex::from_labels(labels));
    return Complex::closure_of(gens);
}

Complex closure(const Simplex& s) { return Complex::closure_of(std::span(&s, 1)); }

Complex boundary_complex(const Simplex& s) {
    std::set<Simplex> faces;
    for (auto& f : s.faces())
        if (f != s) faces.insert(std::move(f));
    return Complex::from_simplices(std::move(faces));
}

Complex lattice_union(const Complex& a, const Complex& b) {
    std::set<Simplex> out = a.simplices_;
    out.insert(b.simplices_.begin(), b.simplices_.end());
    return Complex(std::move(out));
}

Complex lattice_intersection(const Complex& a, const Complex& b) {
    std::set<Simplex> out;
    std::set_intersection(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                          b.simplices_.end(), std::inserter(out, out.end()));
    return Complex(std::move(out));
}

long euler_characteristic(const Complex& a) {
    long chi = 0;
    for (const auto& s : a) chi += (s.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<OpenSimplex> open_simplex_decomposition(const Complex& a) {
    std::vector<OpenSimplex> out;
    out.reserve(a.size());
    for (const auto& s : a) out.push_back(OpenSimplex{s});
    return out;
}

namespace {

// Down-sets of the face poset. Simplices are visited in ascending dimension,
// so a simplex may be included only when all of its facets already are.
void enumerate_downsets(const std::vector<Simplex>& order, std::size_t index,
                        std::set<Simplex>& current,
                        const std::function<void(const Complex&)>& visit) {
    if (index == order.size()) {
        visit(Complex::from_simplices(current));
        return;
    }
    enumerate_downsets(order, index + 1, current, visit);
    const Simplex& s = order[index];
    bool admissible = true;
    if (s.dimension() > 0)
        for (std::size_t i = 0; i < s.size() && admissible; ++i)
            admissible = current.contains(s.facet(i));
    if (!admissible) return;
    auto [it, inserted] = current.insert(s);
    enumerate_downsets(order, index + 1, current, visit);
    current.erase(it);
}

}  // namespace

void for_each_subcomplex(const Complex& a, const std::function<void(const Complex&)>& visit,
                         std::size_t max_simplices) {
    if (a.size() > max_simplices)
        throw CombinatorialLimit("exhaustive subcomplex enumeration refused: " +
                                 std::to_string(a.size()) + " simplices exceeds limit " +
                                 std::to_string(max_simplices));
    std::vector<Simplex> order(a.begin(), a.end());
    std::set<Simplex> current;
    enumerate_downsets(order, 0, current, visit);
}

std::vector<Complex> enumerate_subcomplexes(const Complex& a, std::size_t max_simplices) {
    std::vector<Complex> out;
    for_each_subcomplex(a, [&](const Complex& c) { out.push_back(c); }, max_simplices);
    return out;
}

Complex random_subcomplex(const Complex& a, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    std::vector<Simplex> chosen;
    for (const auto& s : a)
        if (unit(rng) < p) chosen.push_back(s);
    return Complex::closure_of(chosen);
}

std::vector<Complex> sample_subcomplexes(const Complex& a, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::set<Simplex>> seen;
    std::vector<Complex> out;
    const std::size_t max_attempts = 64 * count + 64;
    for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
        Complex c = random_subcomplex(a, rng);
        if (seen.insert(c.simplices()).second) out.push_back(std::move(c));
    }
    return out;
}

std::size_t connected_components(const Complex& a) {
    auto verts = a.vertices();
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto index = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    std::size_t components = verts.size();
    for (const auto& s : a) {
        if (s.dimension() != 1) continue;
        auto r0 = find(index(s[0])), r1 = find(index(s[1]));
        if (r0 != r1) {
            parent[r0] = r1;
            --components;
        }
    }
    return components;
}

}  // namespace lefschetz
