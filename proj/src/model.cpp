#include "hop/model.hpp"

#include "hop/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace hop {

std::string Difference::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(value_);
}

namespace {

void check_vertex(Vertex x, int n)
{
    if (n < min_order)
        throw ArgumentError("order n=" + std::to_string(n) + " is below " + std::to_string(min_order));
    if (x < 0 || x >= n)
        throw ArgumentError("vertex " + std::to_string(x) + " out of range for n=" + std::to_string(n));
}

} // namespace

Difference difference(Vertex u, Vertex v, int n)
{
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v)
        throw ArgumentError("degenerate edge at vertex " + std::to_string(u));
    if (is_infinity(u, n) || is_infinity(v, n))
        return Difference::infinity();
    int m = n - 1;
    int d = ((v - u) % m + m) % m;
    return Difference::finite(std::min(d, m - d));
}

const char * colour_name(Colour c)
{
    switch (c) {
    case Colour::Pink: return "pink";
    case Colour::Blue: return "blue";
    case Colour::Arc: return "arc";
    case Colour::Black: return "black";
    }
    return "?";
}

Edge make_edge(Vertex u, Vertex v, Colour colour, int n)
{
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v)
        throw ArgumentError("degenerate edge at vertex " + std::to_string(u));
    if (colour != Colour::Arc && u > v)
        std::swap(u, v);
    return Edge{u, v, colour};
}

Edge reversed(const Edge & e)
{
    return e.colour == Colour::Arc ? Edge{e.v, e.u, e.colour} : e;
}

std::string to_string(const Edge & e, int n)
{
    auto name = [n](Vertex x) { return is_infinity(x, n) ? std::string("inf") : std::to_string(x); };
    if (e.colour == Colour::Arc)
        return "(" + name(e.u) + "->" + name(e.v) + ")";
    return std::string(colour_name(e.colour)) + "{" + name(e.u) + "," + name(e.v) + "}";
}

Edge rotate(const Edge & e, int k, int n)
{
    Vertex a = rotate(e.u, k, n);
    Vertex b = rotate(e.v, k, n);
    if (e.colour != Colour::Arc && a > b)
        std::swap(a, b);
    return Edge{a, b, e.colour};
}

bool Orbit::contains(const Edge & e) const
{
    return std::binary_search(members.begin(), members.end(), e);
}

Orbit orbit_of(const Edge & e, int n)
{
    Edge start = make_edge(e.u, e.v, e.colour, n);
    std::set<Edge> seen;
    for (int k = 0; k < n - 1; ++k)
        seen.insert(rotate(start, k, n));
    Orbit o;
    o.n = n;
    o.members.assign(seen.begin(), seen.end());
    o.representative = o.members.front();
    return o;
}

std::vector<Edge> all_edges(int n, GraphKind kind)
{
    if (n < min_order)
        throw ArgumentError("order n=" + std::to_string(n) + " is below " + std::to_string(min_order));
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            out.push_back(Edge{u, v, Colour::Pink});
            if (kind == GraphKind::TwoFold) {
                out.push_back(Edge{u, v, Colour::Black});
            }
            else {
                out.push_back(Edge{u, v, Colour::Blue});
                out.push_back(Edge{u, v, Colour::Arc});
                out.push_back(Edge{v, u, Colour::Arc});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Orbit> all_orbits(int n, GraphKind kind)
{
    std::vector<Orbit> out;
    std::set<Edge> covered;
    for (const Edge & e : all_edges(n, kind)) {
        if (covered.count(e))
            continue;
        Orbit o = orbit_of(e, n);
        covered.insert(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

OrbitIndex::OrbitIndex(int n, GraphKind kind) :
    n_(n), kind_(kind), orbits_(all_orbits(n, kind)),
    ids_(static_cast<std::size_t>(4 * n * n), -1)
{
    for (std::size_t i = 0; i < orbits_.size(); ++i)
        for (const Edge & e : orbits_[i].members)
            ids_[slot(e)] = static_cast<int>(i);
}

std::size_t OrbitIndex::slot(const Edge & e) const
{
    return (static_cast<std::size_t>(e.colour) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.u))
        * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.v);
}

int OrbitIndex::id_of(const Edge & e) const
{
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v)
        return -1;
    Edge c = e;
    if (c.colour != Colour::Arc && c.u > c.v)
        std::swap(c.u, c.v);
    return ids_[slot(c)];
}

const OrbitIndex & orbit_index(int n, GraphKind kind)
{
    static std::mutex mutex;
    static std::map<std::pair<int, GraphKind>, std::unique_ptr<OrbitIndex>> cache;
    std::lock_guard lock(mutex);
    auto & slot = cache[{n, kind}];
    if (! slot)
        slot = std::make_unique<OrbitIndex>(n, kind);
    return *slot;
}

std::string OrbitIndex::describe(int id) const
{
    const Edge & e = orbit(id).representative;
    Difference d = difference(e, n_);
    std::string what;
    if (e.colour != Colour::Arc)
        what = colour_name(e.colour);
    else if (d.is_infinite())
        what = is_infinity(e.v, n_) ? "arc->inf" : "arc<-inf";
    else if (2 * d.value() == n_ - 1)
        what = "arc";
    else
        what = rotate(e.u, d.value(), n_) == e.v ? "arc+" : "arc-";
    return "[" + d.to_string() + "," + what + "]";
}

} // namespace hop
