#pragma once

// Turning starters into full factorizations of the four-fold graph, and
// factorizations into seating schedules.

#include "hop/factor.hpp"
#include "hop/format.hpp"
#include "hop/seating.hpp"
#include "hop/verify.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hop {

/// Index of the unique pink+blue 2-cycle of difference (n-1)/2 in f.
/// Throws StructureError when there is none or more than one.
std::size_t special_two_cycle(const TwoFactor & f, int n);

/// Second starter of the three-starter method: f1 rotated by (n-1)/2 with the
/// image of its special 2-cycle replaced by two opposite arcs.
TwoFactor derive_f2(const TwoFactor & f1, int n);

/// Converts a one-starter over the two-fold graph into a pair of two-starters.
/// Throws ArgumentError if f fails check_a and StructureError if the result
/// fails check_d.
std::pair<TwoFactor, TwoFactor> one_to_two(const TwoFactor & f, int n);

Factorization expand_two(const TwoFactor & f1, const TwoFactor & f2, int n);
Factorization expand_three(const TwoFactor & f1, const TwoFactor & f2, const TwoFactor & f3, int n);

/// Starters of a record decoded into two-starter or three-starter form.
struct Starters {
    StarterKind kind = StarterKind::Two;
    int n = 0;
    TwoFactor f1;
    TwoFactor f2;
    std::optional<TwoFactor> f3; // three-starter only
    std::optional<TwoFactor> source; // the one-starter, when kind is One
};

/// Decodes a record and applies the starter-level check (A, D or E).
/// `report` receives the violations; the returned starters are usable only
/// when the report is ok.
Starters prepare(const StarterRecord & r, Report & report);

Factorization expand(const Starters & s);

struct RecordCheck {
    Report report;
    std::optional<Factorization> factorization;
};

/// Starter-level check, expansion and full factorization check of a record.
RecordCheck check_record(const StarterRecord & r);

// ---- lifting to seating schedules ---------------------------------------------

/// Which guest of a couple each coloured edge uses.
enum class LiftTable {
    Standard, // pink on even guests, blue on odd, arcs leave from odd and enter on even
    Swapped   // pink and blue exchanged, arcs reversed
};

struct LiftResult {
    SeatingSolution seating;
    LiftTable table = LiftTable::Standard;
    std::vector<int> table_sizes; // doubled cycle type
};

/// Maps vertex x to couple {2x, 2x+1}. Every output passes
/// verify_alternating_factorization; throws StructureError otherwise.
LiftResult lift(const Factorization & d);

/// I-factor followed by the non-spouse edges of each round.
std::vector<Matching> to_one_factorization(const SeatingSolution & s);

} // namespace hop
