#include "hop/factor.hpp"

#include <algorithm>
#include <functional>

namespace hop {

std::vector<Edge> TwoFactor::edges() const
{
    std::vector<Edge> out;
    for (const Cycle & c : cycles)
        out.insert(out.end(), c.edges.begin(), c.edges.end());
    return out;
}

std::vector<int> TwoFactor::cycle_type() const
{
    std::vector<int> out;
    for (const Cycle & c : cycles)
        out.push_back(static_cast<int>(c.size()));
    return sorted_descending(std::move(out));
}

Cycle rotate(const Cycle & c, int k, int n)
{
    Cycle out;
    for (Vertex x : c.vertices)
        out.vertices.push_back(rotate(x, k, n));
    for (const Edge & e : c.edges)
        out.edges.push_back(rotate(e, k, n));
    return out;
}

TwoFactor rotate(const TwoFactor & f, int k, int n)
{
    TwoFactor out{f.n, {}};
    for (const Cycle & c : f.cycles)
        out.cycles.push_back(rotate(c, k, n));
    return out;
}

Cycle conjugate(const Cycle & c)
{
    Cycle out = c;
    for (Edge & e : out.edges) {
        if (e.colour == Colour::Pink)
            e.colour = Colour::Blue;
        else if (e.colour == Colour::Blue)
            e.colour = Colour::Pink;
        else
            e = reversed(e);
    }
    return out;
}

TwoFactor conjugate(const TwoFactor & f)
{
    TwoFactor out{f.n, {}};
    for (const Cycle & c : f.cycles)
        out.cycles.push_back(conjugate(c));
    return out;
}

std::vector<int> sorted_descending(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

} // namespace hop
