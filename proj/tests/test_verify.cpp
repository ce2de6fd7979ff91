#include "hop/error.hpp"
#include "hop/expand.hpp"
#include "hop/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hop;
using hop_test::find_record;
using hop_test::load_starters;

namespace {

TwoFactor decoded(const StarterRecord & r, std::size_t i)
{
    return decode_factor(r.factors.at(i), r.n, r.kind);
}

Edge recoloured(const Edge & e, Colour c, int n)
{
    return make_edge(e.u, e.v, c, n);
}

} // namespace

TEST_CASE("condition C on pairs of edges at a vertex")
{
    const int n = 10;
    Edge pink = make_edge(0, 1, Colour::Pink, n);
    Edge blue = make_edge(1, 2, Colour::Blue, n);
    Edge pink2 = make_edge(1, 2, Colour::Pink, n);
    CHECK(allowed_pair(pink, blue, 1));
    CHECK(allowed_pair(blue, pink, 1));
    CHECK_FALSE(allowed_pair(pink, pink2, 1));
    CHECK_FALSE(allowed_pair(make_edge(0, 1, Colour::Blue, n), blue, 1));

    CHECK(allowed_pair(make_arc(0, 1, n), make_arc(1, 2, n), 1));
    CHECK(allowed_pair(make_arc(1, 0, n), make_arc(2, 1, n), 1));
    CHECK_FALSE(allowed_pair(make_arc(0, 1, n), make_arc(2, 1, n), 1));
    CHECK_FALSE(allowed_pair(make_arc(1, 0, n), make_arc(1, 2, n), 1));

    // blue meets the head of an arc, pink its tail
    CHECK(allowed_pair(make_arc(0, 1, n), blue, 1));
    CHECK_FALSE(allowed_pair(make_arc(1, 0, n), blue, 1));
    CHECK(allowed_pair(pink, make_arc(1, 2, n), 1));
    CHECK_FALSE(allowed_pair(pink, make_arc(2, 1, n), 1));
}

TEST_CASE("condition C checks both vertices of a 2-cycle")
{
    const int n = 10;
    Cycle good{{0, 4}, {make_arc(0, 4, n), make_arc(4, 0, n)}};
    CHECK(check_condition_c(good, n).empty());
    Cycle bad{{0, 4}, {make_edge(0, 4, Colour::Pink, n), make_arc(0, 4, n)}};
    auto v = check_condition_c(bad, n);
    REQUIRE(v.size() == 1);
    CHECK(v[0].vertex == 4);
    Cycle other{{0, 4}, {make_edge(0, 4, Colour::Blue, n), make_arc(0, 4, n)}};
    auto w = check_condition_c(other, n);
    REQUIRE(w.size() == 1);
    CHECK(w[0].vertex == 0);
    Cycle black{{0, 4}, {make_edge(0, 4, Colour::Pink, n), make_edge(0, 4, Colour::Black, n)}};
    CHECK_THROWS_AS(check_condition_c(black, n), ArgumentError);
}

TEST_CASE("structure check finds gaps and repeats")
{
    const int n = 6;
    TwoFactor f{n, {Cycle{{0, 1, 2}, {make_edge(0, 1, Colour::Pink, n), make_edge(1, 2, Colour::Pink, n),
                                      make_edge(2, 0, Colour::Pink, n)}}}};
    Report r = check_factor_structure(f, std::vector<int>{3, 3});
    CHECK(r.has("structure"));
    CHECK(r.has("type"));
    CHECK(r.text().find("vertex 3 missing") != std::string::npos);

    f.cycles[0].edges[1] = make_edge(1, 3, Colour::Pink, n);
    CHECK(check_factor_structure(f).text().find("does not join") != std::string::npos);
}

TEST_CASE("one-starter conditions")
{
    auto rs = load_starters(10);
    const StarterRecord & r = find_record(rs, {8, 2});
    TwoFactor f = decoded(r, 0);
    CHECK(check_a(f, 10).ok());

    TwoFactor odd = f;
    Edge & e = odd.cycles[0].edges[0];
    e = recoloured(e, e.colour == Colour::Pink ? Colour::Black : Colour::Pink, 10);
    Report bad = check_a(odd, 10);
    CHECK(bad.has("A1"));
    CHECK(bad.has("A2"));
    CHECK_THROWS_AS(check_a(f, 11), ArgumentError);
}

TEST_CASE("two-starter conditions")
{
    auto rs = load_starters(10);
    const StarterRecord & r = find_record(rs, {6, 4});
    TwoFactor f1 = decoded(r, 0);
    TwoFactor f2 = decoded(r, 1);
    CHECK(check_d(f1, f2, 10).ok());

    TwoFactor g = f2;
    Edge & e = g.cycles[0].edges[0];
    e = e.is_arc() ? reversed(e) : recoloured(e, e.colour == Colour::Pink ? Colour::Blue : Colour::Pink, 10);
    Report bad = check_d(f1, g, 10);
    CHECK(bad.has("D2"));
    CHECK(bad.text().find("uncovered") != std::string::npos);
    CHECK(check_d(f1, f1, 10).has("disjoint"));
    CHECK_THROWS_AS(check_d(f1, f2, 11), ArgumentError);
}

TEST_CASE("three-starter conditions")
{
    auto rs = load_starters(11);
    Report report;
    Starters s = prepare(find_record(rs, {7, 2, 2}), report);
    REQUIRE(report.ok());
    CHECK(check_e(s.f1, s.f2, *s.f3, 11).ok());

    CHECK(check_e(s.f1, s.f2, s.f1, 11).has("E2"));

    TwoFactor shifted = rotate(s.f2, 1, 11);
    CHECK(check_e(s.f1, shifted, *s.f3, 11).has("E3"));
    CHECK_THROWS_AS(check_e(s.f1, s.f2, *s.f3, 10), ArgumentError);
}

TEST_CASE("full factorization check")
{
    auto rs = load_starters(10);
    RecordCheck c = check_record(find_record(rs, {4, 2, 2, 2}));
    REQUIRE(c.report.ok());
    Factorization d = *c.factorization;
    CHECK(verify_hop_factorization(d).ok());

    Factorization missing = d;
    missing.factors.pop_back();
    Report r = verify_hop_factorization(missing);
    CHECK(r.has("cardinality"));
    CHECK(r.has("coverage"));

    Factorization doubled = d;
    doubled.factors.back() = doubled.factors.front();
    Report twice = verify_hop_factorization(doubled);
    CHECK(twice.text().find("appears 2 times") != std::string::npos);

    Factorization wrong = d;
    wrong.cycle_type = {5, 5};
    CHECK(verify_hop_factorization(wrong).has("type"));
}

TEST_CASE("reports render plain and porcelain text")
{
    Report r;
    CHECK(r.ok());
    r.add("D2", "orbit [1,pink] used 2 times");
    r.add("C", "F1.C0 at 3");
    CHECK_FALSE(r.ok());
    CHECK(r.has("C"));
    CHECK_FALSE(r.has("E1"));
    CHECK(r.porcelain("n10[8,2]") == "FAIL n10[8,2] D2 orbit [1,pink] used 2 times\nFAIL n10[8,2] C F1.C0 at 3\n");
    CHECK(r.text().find("orbit [1,pink] used 2 times") != std::string::npos);
}

TEST_CASE("semi-uniform 1-factorization of K_4")
{
    std::vector<Matching> good{{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    CHECK(verify_semi_uniform(good, 4, {4}).ok());

    auto dup = good;
    dup[2] = dup[1];
    Report r = verify_semi_uniform(dup, 4, {4});
    CHECK_FALSE(r.ok());
    CHECK(r.has("partition"));

    CHECK(verify_semi_uniform({good[0], good[1]}, 4, {4}).has("count"));

    auto broken = good;
    broken[1] = {{0, 2}};
    CHECK(verify_semi_uniform(broken, 4, {4}).has("matching"));
}

TEST_CASE("alternating factorization of K_4 plus I")
{
    SeatingSolution s;
    s.couples = 2;
    s.spouses = couple_matching(2);
    s.rounds = {{{0, 1, 3, 2}}, {{0, 1, 2, 3}}};
    CHECK(verify_alternating_factorization(s, {4}).ok());

    SeatingSolution same = s;
    same.rounds[1] = same.rounds[0];
    CHECK(verify_alternating_factorization(same, {4}).has("multiplicity"));

    SeatingSolution apart = s;
    apart.rounds[0] = {{0, 2, 1, 3}};
    CHECK(verify_alternating_factorization(apart, {4}).has("alternation"));

    SeatingSolution short_ = s;
    short_.rounds.pop_back();
    CHECK(verify_alternating_factorization(short_, {4}).has("rounds"));
}
