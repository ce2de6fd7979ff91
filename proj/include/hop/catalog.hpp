#pragma once

// Cycle types of order n, their classification against the general
// existence theorems, and the per-n dispatch report.

#include "hop/format.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hop {

/// Partitions of n into parts >= 2, each descending, listed in reverse
/// lexicographic order. Throws ArgumentError for n < 4.
std::vector<std::vector<int>> cycle_types(int n);

enum class CoverageKind {
    Uniform,        // all parts equal
    AllPartsDiv4,   // every part divisible by 4
    OddPair,        // n odd, two parts
    OddSmallAllGe3, // n odd, n < 40, every part at least 3
    SmallN,         // n <= 9
    NeedsStarter
};

enum class StarterHint { None, OneOrTwo, Three };

struct Coverage {
    CoverageKind kind = CoverageKind::NeedsStarter;
    StarterHint starter = StarterHint::None;

    bool covered() const { return kind != CoverageKind::NeedsStarter; }
    std::string name() const;

    bool operator==(const Coverage &) const = default;
};

/// First matching case in the order of the enumerators; n is the sum of parts.
Coverage classify(std::vector<int> parts);

// ---- published dispatch table -------------------------------------------------

enum class Citation { UniformTheorem, One, Two, Three };

const char * citation_name(Citation c);

struct DispatchEntry {
    int n = 0;
    std::vector<int> type; // descending
    Citation citation = Citation::UniformTheorem;

    std::optional<StarterKind> starter_kind() const;
};

struct DispatchTable {
    std::vector<DispatchEntry> entries;

    const DispatchEntry * find(int n, const std::vector<int> & type) const;
    std::vector<DispatchEntry> rows(int n) const;
};

/// Lines of the form "10 [8,2] one"; '#' starts a comment. Throws ParseError.
DispatchTable parse_dispatch_table(const std::string & text);
DispatchTable load_dispatch_table(const std::string & path);

enum class Agreement {
    Agrees,   // same theorem, or the same family of starter
    Flagged,  // covered either way, but by a different result than cited
    Conflict  // cited as covered by a theorem that does not apply, or wrong starter family
};

const char * agreement_name(Agreement a);

Agreement compare(const Coverage & c, Citation cited);

// ---- report -------------------------------------------------------------------

struct ReportRow {
    std::vector<int> type;
    Coverage coverage;
    std::optional<Citation> cited;
    Agreement agreement = Agreement::Agrees;
    std::string fixture; // verified, failed, missing, or "-" when none is needed
    std::string search;  // search status, or "-" when not run
};

/// One row per cycle type. `fixtures` and `searches` map types to status words.
std::vector<ReportRow> report(int n, const DispatchTable * table,
                              const std::map<std::vector<int>, std::string> & fixtures,
                              const std::map<std::vector<int>, std::string> & searches);

std::string render_text(const std::vector<ReportRow> & rows);
/// Header "type,coverage,fixture,search"; a discrepancy appears as
/// "<coverage>;cited=<citation>" in the coverage column.
std::string render_csv(const std::vector<ReportRow> & rows);

} // namespace hop
