#pragma once

// Plain-text starter records.
//
//   # comment
//   starter n=10 type=[4,2,2,2] kind=one
//   C: [6, [4, 1], 2, [4, 0], 7, [9, 1], 9, [9, 0]]
//   C: [5, [2, 0], 3, [2, 1]]
//   --
//   C: ...                       (second factor, kinds two and three)
//
// Records are separated by blank lines. An edge code [d, c] gives the
// difference d (n-1 meaning infinity) and colour c: 0 pink, 2 blue, 1 black
// (kind one) or forward arc, -1 backward arc. A finite arc (a, a+d) with
// d < (n-1)/2 is forward. An arc towards infinity is forward. When
// d == (n-1)/2 both directions are "forward", so code 1 there means the arc
// follows the listed cycle order.

#include "hop/factor.hpp"
#include "hop/seating.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hop {

enum class StarterKind { One, Two, Three };

const char * kind_name(StarterKind k);
StarterKind parse_kind(std::string_view s);

struct RawEdgeCode {
    int d = 0;
    int c = 0;
    bool operator==(const RawEdgeCode &) const = default;
};

struct RawCycle {
    std::vector<Vertex> vertices;
    std::vector<RawEdgeCode> codes; // codes[i] labels vertices[i] -- vertices[i+1]
    bool operator==(const RawCycle &) const = default;
};

using RawFactor = std::vector<RawCycle>;

struct StarterRecord {
    int n = 0;
    std::vector<int> cycle_type;
    StarterKind kind = StarterKind::One;
    std::vector<RawFactor> factors;
    int line = 0; // header line in the source text, 0 if synthesized

    /// Stable label used in reports, e.g. "n10[4,2,2,2]".
    std::string id() const;

    bool operator==(const StarterRecord & o) const
    {
        return n == o.n && cycle_type == o.cycle_type && kind == o.kind && factors == o.factors;
    }
};

std::string format_type(const std::vector<int> & parts);
/// Accepts "8,2" or "[8,2]".
std::vector<int> parse_type(std::string_view s);

/// Throws ParseError on syntax errors, difference mismatches and cycle-type
/// mismatches.
std::vector<StarterRecord> parse_starter_file(std::string_view text);

std::string serialize_starter(const StarterRecord & r);
std::string serialize_starters(const std::vector<StarterRecord> & rs);

/// Decodes one factor of a record into coloured edges. Kind one yields pink
/// and undirected black edges, the other kinds pink, blue and arcs.
TwoFactor decode_factor(const RawFactor & raw, int n, StarterKind kind);
RawFactor encode_factor(const TwoFactor & f, StarterKind kind);

/// Record whose factors are the given two-factors.
StarterRecord make_record(StarterKind kind, const std::vector<TwoFactor> & factors);

// ---- full factorizations ----------------------------------------------------

std::string serialize_factorization(const Factorization & d);
std::vector<Factorization> parse_factorizations(std::string_view text);

// ---- seating schedules ------------------------------------------------------
//
//   seating couples=10 type=[8,6,6]
//   round 1
//   (0 1 4 5 ...) (2 3 ...)

std::string serialize_seating(const SeatingSolution & s, const std::vector<int> & table_sizes);
SeatingSolution parse_seating(std::string_view text);

std::string read_file(const std::string & path);

} // namespace hop
