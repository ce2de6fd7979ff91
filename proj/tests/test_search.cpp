#include "hop/catalog.hpp"
#include "hop/error.hpp"
#include "hop/expand.hpp"
#include "hop/search.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hop;

namespace {

// Every one-starter of order 6 with the given type, by enumerating vertex
// orders and all pink/black colourings and keeping those that pass check_a.
int brute_one_starters(const std::vector<int> & type)
{
    const int n = 6;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    int found = 0;
    do {
        TwoFactor f{n, {}};
        std::size_t at = 0;
        for (int m : type) {
            Cycle c;
            c.vertices.assign(order.begin() + static_cast<long>(at), order.begin() + static_cast<long>(at) + m);
            at += static_cast<std::size_t>(m);
            f.cycles.push_back(c);
        }
        for (int mask = 0; mask < (1 << n); ++mask) {
            int bit = 0;
            for (Cycle & c : f.cycles) {
                c.edges.clear();
                for (std::size_t i = 0; i < c.size(); ++i) {
                    Colour col = (mask >> bit++) & 1 ? Colour::Black : Colour::Pink;
                    c.edges.push_back(make_edge(c.vertices[i], c.vertices[(i + 1) % c.size()], col, n));
                }
            }
            if (check_a(f, n).ok())
                ++found;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return found;
}

} // namespace

TEST_CASE("search rediscovers starters for n = 10..12")
{
    struct Case {
        int n;
        std::vector<int> type;
        StarterKind kind;
    };
    for (const Case & c : {Case{10, {8, 2}, StarterKind::One}, Case{10, {6, 4}, StarterKind::Two},
                           Case{10, {4, 3, 3}, StarterKind::Two}, Case{11, {3, 2, 2, 2, 2}, StarterKind::Three},
                           Case{12, {5, 4, 3}, StarterKind::One}}) {
        CAPTURE(c.n);
        SearchOutcome o = search_starter(c.n, c.type, c.kind);
        REQUIRE(o.status == SearchStatus::Found);
        REQUIRE(o.record);
        CHECK(o.record->kind == c.kind);
        CHECK(o.record->cycle_type == c.type);
        CHECK(check_record(*o.record).report.ok());
    }
}

TEST_CASE("three-starter search places the special 2-cycle on {0, (n-1)/2}")
{
    SearchOutcome o = search_starter(11, {7, 2, 2}, StarterKind::Three);
    REQUIRE(o.record);
    Report report;
    Starters s = prepare(*o.record, report);
    REQUIRE(report.ok());
    const Cycle & c = s.f1.cycles[special_two_cycle(s.f1, 11)];
    std::vector<Vertex> pair = c.vertices;
    std::sort(pair.begin(), pair.end());
    CHECK(pair == std::vector<Vertex>{0, 5});
}

TEST_CASE("search is deterministic for a given seed")
{
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        SearchBudget b;
        b.seed = seed;
        SearchOutcome a = search_starter(12, {4, 4, 2, 2}, StarterKind::Two, b);
        SearchOutcome c = search_starter(12, {4, 4, 2, 2}, StarterKind::Two, b);
        REQUIRE(a.status == SearchStatus::Found);
        CHECK(a.stats.nodes == c.stats.nodes);
        CHECK(*a.record == *c.record);
        CHECK(check_record(*a.record).report.ok());
    }
}

TEST_CASE("exhausted searches agree with brute force")
{
    for (const std::vector<int> & type : cycle_types(6)) {
        CAPTURE(format_type(type));
        SearchOutcome o = search_starter(6, type, StarterKind::One);
        bool exists = brute_one_starters(type) > 0;
        CHECK(o.status == (exists ? SearchStatus::Found : SearchStatus::Exhausted));
    }
    CHECK(search_starter(8, {6, 2}, StarterKind::One).status == SearchStatus::Exhausted);
    CHECK(search_starter(8, {6, 2}, StarterKind::Two).status == SearchStatus::Found);
}

TEST_CASE("budgets stop the search")
{
    SearchBudget tiny;
    tiny.max_nodes = 5;
    SearchOutcome o = search_starter(12, {5, 4, 3}, StarterKind::One, tiny);
    CHECK(o.status == SearchStatus::BudgetExceeded);
    CHECK_FALSE(o.record);
    CHECK(o.stats.nodes == 6);

    SearchBudget none;
    none.max_nodes = 0;
    CHECK_THROWS_AS(search_starter(10, {8, 2}, StarterKind::One, none), ArgumentError);
}

TEST_CASE("inconsistent requests are argument errors")
{
    CHECK_THROWS_AS(search_starter(10, {8, 3}, StarterKind::One), ArgumentError);
    CHECK_THROWS_AS(search_starter(10, {8, 1, 1}, StarterKind::One), ArgumentError);
    CHECK_THROWS_AS(search_starter(11, {9, 2}, StarterKind::One), ArgumentError);
    CHECK_THROWS_AS(search_starter(10, {8, 2}, StarterKind::Three), ArgumentError);
    CHECK_THROWS_AS(search_starter(11, {5, 3, 3}, StarterKind::Three), ArgumentError);
    CHECK_THROWS_AS(search_starter(3, {3}, StarterKind::Three), ArgumentError);
}

TEST_CASE("search_all covers every uncovered type")
{
    DispatchTable table = load_dispatch_table(hop_test::fixture_path("dispatch_tables.txt"));
    auto even = search_all(10, {}, &table);
    CHECK(even.size() == 9);
    for (const auto & [type, o] : even) {
        CAPTURE(format_type(type));
        CHECK(o.status == SearchStatus::Found);
        CHECK(o.record->kind == table.find(10, type)->starter_kind());
    }
    auto odd = search_all(11, {});
    CHECK(odd.size() == 7);
    for (const auto & [type, o] : odd)
        CHECK(o.status == SearchStatus::Found);
    CHECK(search_all(4, {}).empty());
    CHECK(search_all(9, {}).empty());
}
