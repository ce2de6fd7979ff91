#pragma once

#include <utility>
#include <vector>

namespace hop {

// Guests are 0..2n-1; couple x is {2x, 2x+1}.
using Guest = int;
using GuestPair = std::pair<Guest, Guest>;
using Matching = std::vector<GuestPair>;

/// Guests in cyclic seating order around one table.
using Table = std::vector<Guest>;
using Round = std::vector<Table>;

struct SeatingSolution {
    int couples = 0;
    Matching spouses; // the I-factor
    std::vector<Round> rounds;
};

/// The spouse matching {2x, 2x+1} for x = 0..couples-1.
Matching couple_matching(int couples);

} // namespace hop
