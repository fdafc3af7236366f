#ifndef LEFSCHETZ_COMPLEX_HPP
#define LEFSCHETZ_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

/// Vertex label. Ascending label order is the positive orientation of every
/// simplex.
enum class VertexId : std::uint32_t {};

constexpr VertexId vertex(std::uint32_t label) { return VertexId{label}; }
constexpr std::uint32_t label(VertexId v) { return static_cast<std::uint32_t>(v); }

/**
 * A non-empty set of vertices, stored sorted ascending.
 *
 * Simplices order first by dimension and then lexicographically by vertex
 * labels, which is the canonical basis order for chains and for every
 * emitted document.
 */
class Simplex {
  public:
    /// Sorts the vertices. Throws MalformedInput if empty or if a vertex repeats.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<std::uint32_t> labels);

    static Simplex from_labels(std::span<const std::uint32_t> labels);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const VertexId> vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    std::size_t size() const { return vertices_.size(); }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    /// The face obtained by deleting the vertex at position `omitted`; it
    /// enters the boundary with sign (-1)^omitted. Requires dimension >= 1.
    Simplex facet(std::size_t omitted) const;

    /// Every non-empty vertex subset, including the simplex itself.
    std::vector<Simplex> faces() const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

  private:
    struct Sorted {};
    Simplex(Sorted, std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

    std::vector<VertexId> vertices_;
};

/**
 * A finite abstract simplicial complex: a face-closed set of simplices.
 *
 * The full simplex set is stored. Every constructor output is face-closed;
 * the only public way to supply an arbitrary set is from_simplices, which
 * checks it.
 */
class Complex {
  public:
    Complex() = default;

    /// Checked construction from an explicit simplex set. Throws
    /// MalformedInput if the set is not face-closed.
    static Complex from_simplices(std::set<Simplex> simplices);

    /// Face closure of arbitrary simplices.
    static Complex closure_of(std::span<const Simplex> generators);

    const std::set<Simplex>& simplices() const { return simplices_; }
    auto begin() const { return simplices_.begin(); }
    auto end() const { return simplices_.end(); }

    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    bool contains(const Simplex& s) const { return simplices_.contains(s); }

    /// -1 for the empty complex.
    int dimension() const;
    std::size_t count(int q) const;
    std::vector<Simplex> simplices_of_dimension(int q) const;
    std::vector<Simplex> maximal_simplices() const;
    std::vector<VertexId> vertices() const;

    bool is_subcomplex_of(const Complex& ambient) const;
    bool is_face_closed() const;

    friend bool operator==(const Complex&, const Complex&) = default;

  private:
    friend Complex lattice_union(const Complex&, const Complex&);
    friend Complex lattice_intersection(const Complex&, const Complex&);

    explicit Complex(std::set<Simplex> closed) : simplices_(std::move(closed)) {}

    std::set<Simplex> simplices_;
};

/// A simplex regarded as a single lattice cell, without its proper faces.
struct OpenSimplex {
    Simplex simplex;

    Complex closure() const;
    friend bool operator==(const OpenSimplex&, const OpenSimplex&) = default;
};

/// Face closure of the given simplices. Throws MalformedInput on an empty
/// list entry or a repeated vertex within one entry.
Complex build_complex(const std::vector<std::vector<std::uint32_t>>& maximal);

/// The closed simplex: `s` with all of its faces.
Complex closure(const Simplex& s);

/// Closed simplex minus its top cell; empty for a vertex.
Complex boundary_complex(const Simplex& s);

Complex lattice_union(const Complex& a, const Complex& b);
Complex lattice_intersection(const Complex& a, const Complex& b);

/// Alternating count of simplices; 0 on the empty complex.
long euler_characteristic(const Complex& a);

std::vector<OpenSimplex> open_simplex_decomposition(const Complex& a);

constexpr std::size_t kDefaultExhaustiveLimit = 20;

/// Calls `visit` once for every subcomplex of `a` (including the empty one
/// and `a` itself). Throws CombinatorialLimit if `a` has more than
/// `max_simplices` simplices.
void for_each_subcomplex(const Complex& a, const std::function<void(const Complex&)>& visit,
                         std::size_t max_simplices = kDefaultExhaustiveLimit);

std::vector<Complex> enumerate_subcomplexes(const Complex& a,
                                            std::size_t max_simplices = kDefaultExhaustiveLimit);

/// Closure of a random subset of the simplices of `a`. The inclusion
/// probability is itself drawn uniformly per call so that both small and
/// large subcomplexes occur.
Complex random_subcomplex(const Complex& a, std::mt19937_64& rng);

/// Up to `count` distinct random subcomplexes. Fewer are returned when the
/// lattice is exhausted before `count` distinct values are found.
std::vector<Complex> sample_subcomplexes(const Complex& a, std::size_t count, std::uint64_t seed);

/// Number of connected components (0 for the empty complex).
std::size_t connected_components(const Complex& a);

}  // namespace lefschetz

#endif
