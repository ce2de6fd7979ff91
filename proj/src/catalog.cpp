#include "hop/catalog.hpp"

#include "hop/error.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace hop {

namespace {

void partitions(int rest, int cap, std::vector<int> & prefix, std::vector<std::vector<int>> & out)
{
    if (rest == 0) {
        out.push_back(prefix);
        return;
    }
    for (int m = std::min(rest, cap); m >= 2; --m) {
        if (rest - m == 1)
            continue;
        prefix.push_back(m);
        partitions(rest - m, m, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> cycle_types(int n)
{
    if (n < min_order)
        throw ArgumentError("order n=" + std::to_string(n) + " is below " + std::to_string(min_order));
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions(n, n, prefix, out);
    return out;
}

std::string Coverage::name() const
{
    switch (kind) {
    case CoverageKind::Uniform: return "uniform";
    case CoverageKind::AllPartsDiv4: return "all-parts-div-4";
    case CoverageKind::OddPair: return "odd-pair";
    case CoverageKind::OddSmallAllGe3: return "odd-small-all-ge-3";
    case CoverageKind::SmallN: return "small-n";
    case CoverageKind::NeedsStarter: return starter == StarterHint::Three ? "starter:three" : "starter:one-or-two";
    }
    return "?";
}

Coverage classify(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    bool odd = n % 2 != 0;
    auto all = [&](auto pred) { return std::all_of(parts.begin(), parts.end(), pred); };
    if (all([&](int m) { return m == parts.front(); }))
        return {CoverageKind::Uniform};
    if (all([](int m) { return m % 4 == 0; }))
        return {CoverageKind::AllPartsDiv4};
    if (odd && parts.size() == 2)
        return {CoverageKind::OddPair};
    if (odd && n < 40 && parts.back() >= 3)
        return {CoverageKind::OddSmallAllGe3};
    if (n <= 9)
        return {CoverageKind::SmallN};
    return {CoverageKind::NeedsStarter, odd ? StarterHint::Three : StarterHint::OneOrTwo};
}

const char * citation_name(Citation c)
{
    switch (c) {
    case Citation::UniformTheorem: return "uniform-theorem";
    case Citation::One: return "one";
    case Citation::Two: return "two";
    case Citation::Three: return "three";
    }
    return "?";
}

std::optional<StarterKind> DispatchEntry::starter_kind() const
{
    switch (citation) {
    case Citation::One: return StarterKind::One;
    case Citation::Two: return StarterKind::Two;
    case Citation::Three: return StarterKind::Three;
    default: return std::nullopt;
    }
}

const DispatchEntry * DispatchTable::find(int n, const std::vector<int> & type) const
{
    auto sorted = sorted_descending(type);
    for (const DispatchEntry & e : entries)
        if (e.n == n && e.type == sorted)
            return &e;
    return nullptr;
}

std::vector<DispatchEntry> DispatchTable::rows(int n) const
{
    std::vector<DispatchEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [n](const auto & e) { return e.n == n; });
    return out;
}

DispatchTable parse_dispatch_table(const std::string & text)
{
    DispatchTable table;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        DispatchEntry e;
        std::string type, cited;
        if (! (fields >> e.n))
            continue;
        if (! (fields >> type >> cited))
            throw ParseError(number, "expected: n [type] citation");
        try {
            e.type = sorted_descending(parse_type(type));
        }
        catch (const ArgumentError & err) {
            throw ParseError(number, err.what());
        }
        if (std::accumulate(e.type.begin(), e.type.end(), 0) != e.n)
            throw ParseError(number, "type " + type + " does not sum to " + std::to_string(e.n));
        if (cited == "uniform-theorem")
            e.citation = Citation::UniformTheorem;
        else if (cited == "one")
            e.citation = Citation::One;
        else if (cited == "two")
            e.citation = Citation::Two;
        else if (cited == "three")
            e.citation = Citation::Three;
        else
            throw ParseError(number, "unknown citation '" + cited + "'");
        table.entries.push_back(std::move(e));
    }
    return table;
}

DispatchTable load_dispatch_table(const std::string & path)
{
    return parse_dispatch_table(read_file(path));
}

const char * agreement_name(Agreement a)
{
    switch (a) {
    case Agreement::Agrees: return "agrees";
    case Agreement::Flagged: return "flagged";
    case Agreement::Conflict: return "conflict";
    }
    return "?";
}

Agreement compare(const Coverage & c, Citation cited)
{
    if (cited == Citation::UniformTheorem) {
        if (! c.covered())
            return Agreement::Conflict;
        return c.kind == CoverageKind::Uniform ? Agreement::Agrees : Agreement::Flagged;
    }
    if (c.covered())
        return Agreement::Flagged;
    bool three = cited == Citation::Three;
    return three == (c.starter == StarterHint::Three) ? Agreement::Agrees : Agreement::Conflict;
}

std::vector<ReportRow> report(int n, const DispatchTable * table,
                              const std::map<std::vector<int>, std::string> & fixtures,
                              const std::map<std::vector<int>, std::string> & searches)
{
    std::vector<ReportRow> rows;
    for (auto & type : cycle_types(n)) {
        ReportRow row;
        row.type = type;
        row.coverage = classify(type);
        if (const DispatchEntry * e = table ? table->find(n, type) : nullptr) {
            row.cited = e->citation;
            row.agreement = compare(row.coverage, e->citation);
        }
        auto f = fixtures.find(type);
        row.fixture = f != fixtures.end() ? f->second : row.coverage.covered() ? "-" : "missing";
        auto s = searches.find(type);
        row.search = s != searches.end() ? s->second : "-";
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string coverage_cell(const ReportRow & r)
{
    std::string s = r.coverage.name();
    if (r.cited && r.agreement != Agreement::Agrees)
        s += std::string(";cited=") + citation_name(*r.cited);
    return s;
}

} // namespace

std::string render_text(const std::vector<ReportRow> & rows)
{
    std::vector<std::vector<std::string>> cells{{"type", "coverage", "cited", "fixture", "search"}};
    for (const ReportRow & r : rows) {
        std::string cited = r.cited ? citation_name(*r.cited) : "-";
        if (r.agreement != Agreement::Agrees)
            cited += std::string(" [") + agreement_name(r.agreement) + "]";
        cells.push_back({format_type(r.type), r.coverage.name(), cited, r.fixture, r.search});
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto & row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto & row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

std::string render_csv(const std::vector<ReportRow> & rows)
{
    std::ostringstream out;
    out << "type,coverage,fixture,search\n";
    for (const ReportRow & r : rows)
        out << std::quoted(format_type(r.type)) << ',' << coverage_cell(r) << ',' << r.fixture << ',' << r.search
            << '\n';
    return out.str();
}

} // namespace hop
