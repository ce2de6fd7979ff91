#pragma once

// Vertices, coloured edges and the rotation acting on them.
//
// Vertex labels run 0..n-1. Label n-1 is the point at infinity, fixed by the
// rotation; labels 0..n-2 form the cyclic group Z_{n-1}.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hop {

using Vertex = int;

inline constexpr int min_order = 4;

inline constexpr Vertex infinity_vertex(int n) { return n - 1; }
inline constexpr bool is_infinity(Vertex v, int n) { return v == n - 1; }

class Difference {
public:
    static Difference finite(int d) { return Difference{d}; }
    static Difference infinity() { return Difference{0}; }

    bool is_infinite() const { return value_ == 0; }
    /// Only meaningful when finite.
    int value() const { return value_; }

    auto operator<=>(const Difference &) const = default;

    std::string to_string() const;

private:
    explicit Difference(int v) : value_(v) {}
    int value_;
};

/// Canonical difference of the pair {u, v}.
Difference difference(Vertex u, Vertex v, int n);

/// Largest finite difference, floor((n-1)/2).
inline constexpr int max_finite_difference(int n) { return (n - 1) / 2; }

// Black edges are either undirected (two-fold graph only) or an arc u -> v.
enum class Colour : std::uint8_t { Pink, Blue, Arc, Black };

const char * colour_name(Colour c);

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Colour colour = Colour::Pink;

    Vertex tail() const { return u; }
    Vertex head() const { return v; }
    bool is_arc() const { return colour == Colour::Arc; }
    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge &) const = default;
};

/// Builds an edge in canonical storage: undirected colours keep u < v,
/// arcs keep (tail, head). Throws ArgumentError on a loop or bad vertex.
Edge make_edge(Vertex u, Vertex v, Colour colour, int n);

inline Edge make_arc(Vertex tail, Vertex head, int n) { return make_edge(tail, head, Colour::Arc, n); }

Edge reversed(const Edge & e);

inline Difference difference(const Edge & e, int n) { return difference(e.u, e.v, n); }

std::string to_string(const Edge & e, int n);

// ---- rotation --------------------------------------------------------------

inline Vertex rotate(Vertex x, int k, int n)
{
    if (is_infinity(x, n))
        return x;
    int m = n - 1;
    return ((x + k) % m + m) % m;
}

/// Shifts finite endpoints by k, fixing infinity. Colour and direction kept.
Edge rotate(const Edge & e, int k, int n);

// ---- orbits ----------------------------------------------------------------

enum class GraphKind {
    TwoFold,  // one pink and one undirected black edge per pair
    FourFold  // one pink, one blue and two opposite arcs per pair
};

struct Orbit {
    Edge representative;
    std::vector<Edge> members; // sorted
    int n = 0;

    std::size_t size() const { return members.size(); }
    bool contains(const Edge & e) const;
};

/// Closure of {e} under the rotation.
Orbit orbit_of(const Edge & e, int n);

/// Every edge of the indicated multigraph, in sorted order.
std::vector<Edge> all_edges(int n, GraphKind kind);

/// Partition of all edges of the multigraph into rotation orbits, ordered by
/// their least member.
std::vector<Orbit> all_orbits(int n, GraphKind kind);

/// Dense lookup from edge to orbit number, built from all_orbits().
class OrbitIndex {
public:
    OrbitIndex(int n, GraphKind kind);

    int n() const { return n_; }
    GraphKind kind() const { return kind_; }
    int orbit_count() const { return static_cast<int>(orbits_.size()); }
    const std::vector<Orbit> & orbits() const { return orbits_; }
    const Orbit & orbit(int id) const { return orbits_.at(static_cast<std::size_t>(id)); }

    /// -1 when the edge does not belong to this multigraph.
    int id_of(const Edge & e) const;

    /// Human-readable name such as "[4,pink]" or "[inf,arc->inf]".
    std::string describe(int id) const;

private:
    std::size_t slot(const Edge & e) const;

    int n_;
    GraphKind kind_;
    std::vector<Orbit> orbits_;
    std::vector<int> ids_;
};

/// Shared, lazily built index; safe to call from several threads.
const OrbitIndex & orbit_index(int n, GraphKind kind);

} // namespace hop
