#pragma once

// Backtracking search for starter 2-factors.
//
// Factors are built one cycle at a time. Each new cycle starts at the least
// vertex not yet covered by its factor and is grown edge by edge; every edge
// must come from an orbit not used so far. Two- and three-starter searches
// reject a step as soon as it breaks Condition (C) at a vertex, one-starter
// searches reject cycles with an odd number of pink edges.
//
// Canonical form, relative to which an Exhausted outcome is complete:
//  - a factor that may be rotated freely puts vertex 0 on a longest cycle;
//  - a cycle of length >= 3 lists its second vertex below its last one;
//  - the two edges of a 2-cycle appear in increasing order;
//  - the three-starter F1 carries its special 2-cycle on {0, (n-1)/2}.

#include "hop/format.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hop {

struct DispatchTable;

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
    std::uint64_t seed = 0; // 0 keeps the natural branching order
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

const char * status_name(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<StarterRecord> record; // set when Found
    SearchStats stats;
};

/// Throws ArgumentError when the type does not sum to n, has a part below 2,
/// or does not suit the kind (One and Two need even n, Three needs odd n and
/// a part equal to 2).
SearchOutcome search_starter(int n, const std::vector<int> & cycle_type, StarterKind kind,
                             const SearchBudget & budget = {});

/// Searches every type that no general theorem covers, concurrently. Even n
/// uses the kind cited in `table` when present and falls back to a one-starter
/// search followed by a two-starter search.
std::map<std::vector<int>, SearchOutcome> search_all(int n, const SearchBudget & budget,
                                                     const DispatchTable * table = nullptr);

} // namespace hop
