#pragma once

#include "hop/model.hpp"

#include <vector>

namespace hop {

/// edges[i] joins vertices[i] and vertices[(i+1) % size()].
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::size_t size() const { return vertices.size(); }

    bool operator==(const Cycle &) const = default;
};

struct TwoFactor {
    int n = 0;
    std::vector<Cycle> cycles;

    std::vector<Edge> edges() const;
    /// Cycle lengths, descending.
    std::vector<int> cycle_type() const;

    bool operator==(const TwoFactor &) const = default;
};

struct Factorization {
    int n = 0;
    std::vector<int> cycle_type; // descending
    std::vector<TwoFactor> factors;
};

Cycle rotate(const Cycle & c, int k, int n);
TwoFactor rotate(const TwoFactor & f, int k, int n);

/// Swaps pink and blue and reverses every arc.
Cycle conjugate(const Cycle & c);
TwoFactor conjugate(const TwoFactor & f);

std::vector<int> sorted_descending(std::vector<int> parts);

} // namespace hop
