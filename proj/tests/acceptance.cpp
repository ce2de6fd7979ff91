// Acceptance suite: one PASS/FAIL line per criterion.

#include "hop/catalog.hpp"
#include "hop/expand.hpp"
#include "hop/format.hpp"
#include "hop/search.hpp"
#include "hop/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

using namespace hop;

namespace {

using Type = std::vector<int>;

std::vector<StarterRecord> load(int n)
{
    return parse_starter_file(read_file(std::string(HOP_FIXTURE_DIR) + "/starters_n" + std::to_string(n) + ".txt"));
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string & why)
    {
        if (pass)
            detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

// 1. Every mandatory record passes its starter check and expands to a
// verified factorization with 2n-2 factors.
Outcome fixture_verification()
{
    Outcome o;
    const std::map<int, std::size_t> expected{{10, 9}, {11, 7}, {12, 15}};
    std::size_t total = 0;
    for (auto [n, count] : expected) {
        auto rs = load(n);
        if (rs.size() != count)
            o.fail("n=" + std::to_string(n) + " has " + std::to_string(rs.size()) + " records");
        for (const StarterRecord & r : rs) {
            RecordCheck c = check_record(r);
            if (! c.report.ok() || ! c.factorization)
                o.fail(r.id() + ": " + c.report.violations.front().clause);
            else if (c.factorization->factors.size() != static_cast<std::size_t>(2 * n - 2))
                o.fail(r.id() + ": wrong factor count");
            else
                ++total;
        }
    }
    if (o.pass)
        o.detail << total << " records (9 + 7 + 15) verified";
    return o;
}

// 2. Edge totals and per-pair multiplicities of every verified expansion.
Outcome edge_conservation()
{
    Outcome o;
    std::size_t checked = 0;
    for (int n : {10, 11, 12})
        for (const StarterRecord & r : load(n)) {
            RecordCheck c = check_record(r);
            if (! c.factorization) {
                o.fail(r.id() + " did not expand");
                continue;
            }
            std::size_t total = 0;
            // per unordered pair: pink, blue, arc low->high, arc high->low
            std::map<std::pair<Vertex, Vertex>, std::array<int, 4>> tally;
            for (const TwoFactor & f : c.factorization->factors)
                for (const Edge & e : f.edges()) {
                    ++total;
                    auto key = std::minmax(e.u, e.v);
                    auto & t = tally[{key.first, key.second}];
                    if (e.colour == Colour::Pink)
                        ++t[0];
                    else if (e.colour == Colour::Blue)
                        ++t[1];
                    else if (e.colour == Colour::Arc)
                        ++t[e.u < e.v ? 2 : 3];
                }
            if (total != static_cast<std::size_t>(2 * n * (n - 1)))
                o.fail(r.id() + " has " + std::to_string(total) + " edges");
            if (tally.size() != static_cast<std::size_t>(n * (n - 1) / 2))
                o.fail(r.id() + " misses pairs");
            for (const auto & [pair, t] : tally)
                if (t != std::array<int, 4>{1, 1, 1, 1})
                    o.fail(r.id() + " pair " + std::to_string(pair.first) + "," + std::to_string(pair.second));
            ++checked;
        }
    if (o.pass)
        o.detail << checked << " expansions: 180/220/264 edges, each pair {pink, blue, two opposite arcs}";
    return o;
}

// 3. Row counts, citation agreement, and the enumerated discrepancy flags.
Outcome table_reproduction()
{
    Outcome o;
    DispatchTable table = load_dispatch_table(std::string(HOP_FIXTURE_DIR) + "/dispatch_tables.txt");
    const std::map<int, std::size_t> rows{{10, 12}, {11, 14}, {12, 21}};
    const std::map<int, std::vector<Type>> expected_flags{
        {10, {}}, {11, {{9, 2}, {8, 3}, {7, 4}, {6, 5}, {5, 3, 3}, {4, 4, 3}}}, {12, {{8, 4}}}};
    std::ostringstream flags;
    for (auto [n, count] : rows) {
        auto types = cycle_types(n);
        if (types.size() != count)
            o.fail("n=" + std::to_string(n) + " has " + std::to_string(types.size()) + " types");
        if (table.rows(n).size() != count)
            o.fail("n=" + std::to_string(n) + " table has " + std::to_string(table.rows(n).size()) + " rows");
        std::vector<Type> flagged;
        for (const Type & t : types) {
            const DispatchEntry * e = table.find(n, t);
            if (! e) {
                o.fail("n=" + std::to_string(n) + " " + format_type(t) + " absent from table");
                continue;
            }
            Agreement a = compare(classify(t), e->citation);
            if (a == Agreement::Conflict)
                o.fail("n=" + std::to_string(n) + " " + format_type(t) + " conflicts with its citation");
            if (a == Agreement::Flagged) {
                flagged.push_back(t);
                flags << " n" << n << format_type(t);
            }
        }
        if (flagged != expected_flags.at(n))
            o.fail("n=" + std::to_string(n) + " flags differ");
    }
    if (o.pass)
        o.detail << "12/14/21 rows, no conflicts, flagged:" << flags.str();
    return o;
}

// 4. The search finds verified starters for the listed rows within 300 s each.
Outcome search_rediscovery()
{
    Outcome o;
    struct Case {
        int n;
        Type type;
        StarterKind kind;
    };
    const std::vector<Case> cases{{10, {8, 2}, StarterKind::One},
                                  {10, {6, 4}, StarterKind::Two},
                                  {10, {4, 3, 3}, StarterKind::Two},
                                  {11, {3, 2, 2, 2, 2}, StarterKind::Three},
                                  {12, {5, 4, 3}, StarterKind::One}};
    double slowest = 0;
    for (const Case & c : cases) {
        SearchBudget budget;
        budget.max_seconds = 300;
        SearchOutcome s = search_starter(c.n, c.type, c.kind, budget);
        std::string id = "n" + std::to_string(c.n) + format_type(c.type);
        if (s.status != SearchStatus::Found || ! s.record)
            o.fail(id + " " + status_name(s.status));
        else if (! check_record(*s.record).report.ok())
            o.fail(id + " found an unverified starter");
        else if (s.stats.seconds > 300)
            o.fail(id + " took " + std::to_string(s.stats.seconds) + " s");
        slowest = std::max(slowest, s.stats.seconds);
    }
    if (o.pass)
        o.detail << "5/5 found and verified, slowest " << slowest << " s";
    return o;
}

// 5. Lifting two fixtures to certified seating schedules.
Outcome lift_gate()
{
    Outcome o;
    struct Case {
        int n;
        Type type;
        std::size_t rounds;
    };
    for (const Case & c : {Case{10, {4, 3, 3}, 18}, Case{11, {7, 2, 2}, 20}}) {
        std::string id = "n" + std::to_string(c.n) + format_type(c.type);
        const StarterRecord * rec = nullptr;
        auto rs = load(c.n);
        for (const auto & r : rs)
            if (r.cycle_type == c.type)
                rec = &r;
        if (! rec) {
            o.fail(id + " missing");
            continue;
        }
        RecordCheck check = check_record(*rec);
        if (! check.factorization) {
            o.fail(id + " did not expand");
            continue;
        }
        LiftResult l = lift(*check.factorization);
        Type doubled;
        for (int m : c.type)
            doubled.push_back(2 * m);
        if (l.table_sizes != doubled)
            o.fail(id + " table sizes");
        if (l.seating.rounds.size() != c.rounds)
            o.fail(id + " has " + std::to_string(l.seating.rounds.size()) + " rounds");
        if (! verify_alternating_factorization(l.seating, doubled).ok())
            o.fail(id + " seating rejected");
        auto matchings = to_one_factorization(l.seating);
        if (matchings.size() != c.rounds + 1)
            o.fail(id + " has " + std::to_string(matchings.size()) + " matchings");
        if (! verify_semi_uniform(matchings, 2 * c.n, doubled).ok())
            o.fail(id + " 1-factorization rejected");
    }
    if (o.pass)
        o.detail << "n10[4,3,3]: 18 rounds, 19 matchings; n11[7,2,2]: 20 rounds, 21 matchings";
    return o;
}

// Whether some checker along the chain rejects the starters.
bool rejected(StarterKind kind, const std::vector<TwoFactor> & factors)
{
    try {
        StarterRecord r = make_record(kind, factors);
        // a re-encoded record must parse back; the parser is the first checker
        auto parsed = parse_starter_file(serialize_starter(r));
        return ! check_record(parsed.at(0)).report.ok();
    }
    catch (const std::exception &) {
        return true;
    }
}

// 6. Random single-edge recolourings and reorientations of passing fixtures.
Outcome mutation_fuzzing()
{
    Outcome o;
    std::vector<StarterRecord> pool;
    for (int n : {10, 11, 12})
        for (auto & r : load(n))
            pool.push_back(r);
    std::mt19937_64 rng(20240611);
    const int trials = 1000;
    int escapes = 0;
    for (int t = 0; t < trials; ++t) {
        const StarterRecord & r = pool[rng() % pool.size()];
        std::vector<TwoFactor> factors;
        for (const RawFactor & raw : r.factors)
            factors.push_back(decode_factor(raw, r.n, r.kind));
        TwoFactor & f = factors[rng() % factors.size()];
        Cycle & c = f.cycles[rng() % f.cycles.size()];
        std::size_t at = rng() % c.edges.size();
        Edge & e = c.edges[at];
        Vertex a = c.vertices[at];
        Vertex b = c.vertices[(at + 1) % c.size()];
        std::vector<Edge> options;
        if (r.kind == StarterKind::One)
            options = {make_edge(a, b, Colour::Pink, r.n), make_edge(a, b, Colour::Black, r.n)};
        else
            options = {make_edge(a, b, Colour::Pink, r.n), make_edge(a, b, Colour::Blue, r.n), make_arc(a, b, r.n),
                       make_arc(b, a, r.n)};
        options.erase(std::remove(options.begin(), options.end(), e), options.end());
        Edge was = e;
        e = options[rng() % options.size()];
        if (! rejected(r.kind, factors)) {
            ++escapes;
            o.fail(r.id() + " accepted " + to_string(was, r.n) + " -> " + to_string(e, r.n));
        }
    }
    if (o.pass)
        o.detail << trials << " mutations over " << pool.size() << " records, 0 escapes";
    else
        o.detail << escapes << " escapes";
    return o;
}

// 7. Orbits against a brute-force closure written here.
Outcome orbit_oracle()
{
    Outcome o;
    using Key = std::tuple<int, int, int>;
    int compared = 0;
    for (int n = 4; n <= 12; ++n)
        for (GraphKind kind : {GraphKind::TwoFold, GraphKind::FourFold}) {
            auto shift = [n](Key e) {
                auto [u, v, c] = e;
                auto r = [n](int x) { return x == n - 1 ? x : (x + 1) % (n - 1); };
                u = r(u);
                v = r(v);
                if (c != static_cast<int>(Colour::Arc) && u > v)
                    std::swap(u, v);
                return Key{u, v, c};
            };
            std::set<Key> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    edges.insert({u, v, static_cast<int>(Colour::Pink)});
                    if (kind == GraphKind::TwoFold) {
                        edges.insert({u, v, static_cast<int>(Colour::Black)});
                    }
                    else {
                        edges.insert({u, v, static_cast<int>(Colour::Blue)});
                        edges.insert({u, v, static_cast<int>(Colour::Arc)});
                        edges.insert({v, u, static_cast<int>(Colour::Arc)});
                    }
                }
            std::set<std::set<Key>> oracle;
            for (const Key & e : edges) {
                std::set<Key> orbit{e};
                for (Key f = shift(e); f != e; f = shift(f))
                    orbit.insert(f);
                oracle.insert(orbit);
            }
            std::set<std::set<Key>> library;
            std::size_t members = 0;
            for (const Orbit & orb : all_orbits(n, kind)) {
                std::set<Key> s;
                for (const Edge & e : orb.members)
                    s.insert({e.u, e.v, static_cast<int>(e.colour)});
                members += orb.size();
                library.insert(s);
            }
            if (library != oracle || members != edges.size())
                o.fail("n=" + std::to_string(n) + (kind == GraphKind::TwoFold ? " two-fold" : " four-fold"));
            ++compared;
        }
    if (o.pass)
        o.detail << compared << " (n, graph) pairs identical";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 fixture verification", fixture_verification},
        {"2 edge conservation", edge_conservation},
        {"3 table reproduction", table_reproduction},
        {"4 search rediscovery", search_rediscovery},
        {"5 lift gate", lift_gate},
        {"6 mutation fuzzing", mutation_fuzzing},
        {"7 orbit oracle", orbit_oracle},
    };
    int failed = 0;
    for (const auto & [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
