#include "hop/verify.hpp"

#include "hop/error.hpp"
#include "hop/format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hop {

void Report::append(const Report & other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool Report::has(const std::string & clause) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation & v) { return v.clause == clause; });
}

std::string Report::text() const
{
    if (ok())
        return "ok\n";
    std::ostringstream os;
    for (const Violation & v : violations)
        os << v.clause << ": " << v.locus << "\n";
    return os.str();
}

std::string Report::porcelain(const std::string & record_id) const
{
    std::ostringstream os;
    for (const Violation & v : violations) {
        std::string locus = v.locus;
        std::replace(locus.begin(), locus.end(), '\n', ' ');
        os << "FAIL " << record_id << " " << v.clause << " " << locus << "\n";
    }
    return os.str();
}

bool allowed_pair(const Edge & a, const Edge & b, Vertex x)
{
    auto is = [](const Edge & e, Colour c) { return e.colour == c; };
    if ((is(a, Colour::Pink) && is(b, Colour::Blue)) || (is(a, Colour::Blue) && is(b, Colour::Pink)))
        return true;
    if (a.is_arc() && b.is_arc())
        return (a.head() == x && b.tail() == x) || (a.tail() == x && b.head() == x);
    if (a.is_arc() || b.is_arc()) {
        const Edge & arc = a.is_arc() ? a : b;
        const Edge & other = a.is_arc() ? b : a;
        if (is(other, Colour::Blue))
            return arc.head() == x;
        if (is(other, Colour::Pink))
            return arc.tail() == x;
    }
    return false;
}

std::vector<ConditionCViolation> check_condition_c(const Cycle & c, int n)
{
    for (const Edge & e : c.edges)
        if (e.colour == Colour::Black)
            throw ArgumentError("undirected black edge " + to_string(e, n) + " has no orientation");
    std::vector<ConditionCViolation> out;
    std::size_t k = c.edges.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Edge & a = c.edges[i];
        const Edge & b = c.edges[(i + 1) % k];
        Vertex x = c.vertices[(i + 1) % k];
        if (! allowed_pair(a, b, x))
            out.push_back({x, a, b});
    }
    return out;
}

namespace {

std::string vname(Vertex x, int n)
{
    return is_infinity(x, n) ? std::string("inf") : std::to_string(x);
}

std::string cycle_name(const std::string & label, std::size_t i)
{
    return label + ".C" + std::to_string(i);
}

void condition_c(const TwoFactor & f, const std::string & label, const std::string & clause, Report & r)
{
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle & c = f.cycles[i];
        bool oriented = std::none_of(c.edges.begin(), c.edges.end(),
                                     [](const Edge & e) { return e.colour == Colour::Black; });
        if (! oriented) {
            r.add("colour", cycle_name(label, i) + " has an undirected black edge");
            continue;
        }
        for (const auto & v : check_condition_c(c, f.n))
            r.add(clause, cycle_name(label, i) + " at vertex " + vname(v.vertex, f.n) + ": " + to_string(v.first, f.n)
                              + " then " + to_string(v.second, f.n));
    }
}

void orbit_exactly_once(const std::vector<Edge> & edges, const OrbitIndex & idx, const std::string & clause,
                        Report & r)
{
    std::vector<int> count(static_cast<std::size_t>(idx.orbit_count()), 0);
    for (const Edge & e : edges) {
        int id = idx.id_of(e);
        if (id < 0) {
            r.add(clause, to_string(e, idx.n()) + " is not an edge of this graph");
            continue;
        }
        ++count[static_cast<std::size_t>(id)];
    }
    for (int id = 0; id < idx.orbit_count(); ++id) {
        int k = count[static_cast<std::size_t>(id)];
        if (k == 0)
            r.add(clause, "orbit " + idx.describe(id) + " uncovered");
        else if (k > 1)
            r.add(clause, "orbit " + idx.describe(id) + " used " + std::to_string(k) + " times");
    }
}

void disjoint(const TwoFactor & a, const std::string & la, const TwoFactor & b, const std::string & lb, Report & r)
{
    auto ea = a.edges();
    std::set<Edge> sa(ea.begin(), ea.end());
    for (const Edge & e : b.edges())
        if (sa.count(e))
            r.add("disjoint", to_string(e, a.n) + " in both " + la + " and " + lb);
}

void same_type(const TwoFactor & base, const TwoFactor & other, const std::string & label, Report & r)
{
    if (base.cycle_type() != other.cycle_type())
        r.add("type", label + " has type " + format_type(other.cycle_type()) + ", expected "
                          + format_type(base.cycle_type()));
}

} // namespace

Report check_factor_structure(const TwoFactor & f, const std::optional<std::vector<int>> & type,
                              const std::string & label)
{
    Report r;
    int n = f.n;
    if (n < min_order) {
        r.add("structure", label + " has order " + std::to_string(n));
        return r;
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle & c = f.cycles[i];
        std::string where = cycle_name(label, i);
        if (c.vertices.size() < 2 || c.edges.size() != c.vertices.size()) {
            r.add("structure", where + " is malformed");
            continue;
        }
        bool in_range = true;
        for (Vertex x : c.vertices) {
            if (x < 0 || x >= n) {
                r.add("structure", where + " has vertex " + std::to_string(x) + " out of range");
                in_range = false;
                continue;
            }
            if (seen[static_cast<std::size_t>(x)]++)
                r.add("structure", "vertex " + vname(x, n) + " repeated in " + label);
        }
        if (! in_range)
            continue;
        for (std::size_t j = 0; j < c.size(); ++j) {
            Vertex a = c.vertices[j];
            Vertex b = c.vertices[(j + 1) % c.size()];
            const Edge & e = c.edges[j];
            if (! ((e.u == a && e.v == b) || (e.u == b && e.v == a)))
                r.add("structure", where + " edge " + std::to_string(j) + " " + to_string(e, n) + " does not join "
                                       + vname(a, n) + " and " + vname(b, n));
        }
        if (c.size() == 2 && c.edges[0] == c.edges[1])
            r.add("structure", where + " repeats " + to_string(c.edges[0], n));
    }
    for (Vertex x = 0; x < n; ++x)
        if (! seen[static_cast<std::size_t>(x)])
            r.add("structure", "vertex " + vname(x, n) + " missing from " + label);
    if (type && f.cycle_type() != sorted_descending(*type))
        r.add("type", label + " has type " + format_type(f.cycle_type()) + ", expected "
                          + format_type(sorted_descending(*type)));
    return r;
}

Report check_a(const TwoFactor & f, int n)
{
    if (n % 2 != 0)
        throw ArgumentError("one-starter conditions need even n, got " + std::to_string(n));
    Report r = check_factor_structure(f, std::nullopt, "F");
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle & c = f.cycles[i];
        int pink = 0;
        for (const Edge & e : c.edges) {
            if (e.colour == Colour::Pink)
                ++pink;
            else if (e.colour != Colour::Black)
                r.add("colour", cycle_name("F", i) + " has " + to_string(e, n) + " outside the two-fold graph");
        }
        if (c.size() >= 3 && pink % 2 != 0)
            r.add("A1", cycle_name("F", i) + " has " + std::to_string(pink) + " pink edges");
    }
    orbit_exactly_once(f.edges(), orbit_index(n, GraphKind::TwoFold), "A2", r);
    return r;
}

Report check_d(const TwoFactor & f1, const TwoFactor & f2, int n)
{
    if (n % 2 != 0)
        throw ArgumentError("two-starter conditions need even n, got " + std::to_string(n));
    Report r = check_factor_structure(f1, std::nullopt, "F1");
    r.append(check_factor_structure(f2, std::nullopt, "F2"));
    same_type(f1, f2, "F2", r);
    disjoint(f1, "F1", f2, "F2", r);
    condition_c(f1, "F1", "D1", r);
    condition_c(f2, "F2", "D1", r);
    auto edges = f1.edges();
    auto e2 = f2.edges();
    edges.insert(edges.end(), e2.begin(), e2.end());
    orbit_exactly_once(edges, orbit_index(n, GraphKind::FourFold), "D2", r);
    return r;
}

Report check_e(const TwoFactor & f1, const TwoFactor & f2, const TwoFactor & f3, int n)
{
    if (n % 2 == 0)
        throw ArgumentError("three-starter conditions need odd n, got " + std::to_string(n));
    Report r = check_factor_structure(f1, std::nullopt, "F1");
    r.append(check_factor_structure(f2, std::nullopt, "F2"));
    r.append(check_factor_structure(f3, std::nullopt, "F3"));
    same_type(f1, f2, "F2", r);
    same_type(f1, f3, "F3", r);
    disjoint(f1, "F1", f2, "F2", r);
    disjoint(f1, "F1", f3, "F3", r);
    disjoint(f2, "F2", f3, "F3", r);
    condition_c(f1, "F1", "E1", r);
    condition_c(f2, "F2", "E1", r);
    condition_c(f3, "F3", "E1", r);

    const OrbitIndex & idx = orbit_index(n, GraphKind::FourFold);
    auto first = f1.edges();
    auto e2 = f2.edges();
    first.insert(first.end(), e2.begin(), e2.end());
    std::set<int> first_orbits;
    for (const Edge & e : first)
        if (int id = idx.id_of(e); id >= 0)
            first_orbits.insert(id);
    std::set<int> reported;
    for (const Edge & e : f3.edges()) {
        int id = idx.id_of(e);
        if (id >= 0 && first_orbits.count(id) && reported.insert(id).second)
            r.add("E2", "orbit " + idx.describe(id) + " meets both F1+F2 and F3");
    }

    int half = (n - 1) / 2;
    std::set<Edge> union12(first.begin(), first.end());
    for (const Edge & e : first)
        if (! union12.count(rotate(e, half, n)))
            r.add("E3", "image of " + to_string(e, n) + " under rotation by " + std::to_string(half)
                            + " is not in F1+F2");

    auto has = [&](Colour c) {
        return std::any_of(first.begin(), first.end(), [&](const Edge & e) {
            Difference d = difference(e, n);
            return e.colour == c && ! d.is_infinite() && d.value() == half;
        });
    };
    if (! has(Colour::Pink))
        r.add("E4", "no pink edge of difference " + std::to_string(half) + " in F1+F2");
    if (! has(Colour::Blue))
        r.add("E4", "no blue edge of difference " + std::to_string(half) + " in F1+F2");
    return r;
}

Report verify_hop_factorization(const Factorization & d)
{
    Report r;
    int n = d.n;
    if (n < min_order) {
        r.add("structure", "order " + std::to_string(n));
        return r;
    }
    std::size_t want = static_cast<std::size_t>(2 * n - 2);
    if (d.factors.size() != want)
        r.add("cardinality", std::to_string(d.factors.size()) + " factors, expected " + std::to_string(want));

    auto N = static_cast<std::size_t>(n);
    std::vector<int> pink(N * N, 0), blue(N * N, 0), arc(N * N, 0);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const TwoFactor & f = d.factors[i];
        std::string label = "D" + std::to_string(i);
        if (f.n != n) {
            r.add("structure", label + " has order " + std::to_string(f.n));
            continue;
        }
        Report s = check_factor_structure(f, d.cycle_type, label);
        r.append(s);
        if (s.has("structure"))
            continue;
        condition_c(f, label, "C", r);
        for (const Edge & e : f.edges()) {
            std::size_t at = static_cast<std::size_t>(e.u) * N + static_cast<std::size_t>(e.v);
            switch (e.colour) {
            case Colour::Pink: ++pink[at]; break;
            case Colour::Blue: ++blue[at]; break;
            case Colour::Arc: ++arc[at]; break;
            case Colour::Black: break; // reported by condition_c
            }
        }
    }
    auto tally = [&](const std::vector<int> & counts, Vertex a, Vertex b, const Edge & e) {
        int k = counts[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)];
        if (k == 0)
            r.add("coverage", "missing " + to_string(e, n));
        else if (k > 1)
            r.add("coverage", to_string(e, n) + " appears " + std::to_string(k) + " times");
    };
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            tally(pink, a, b, Edge{a, b, Colour::Pink});
            tally(blue, a, b, Edge{a, b, Colour::Blue});
            tally(arc, a, b, Edge{a, b, Colour::Arc});
            tally(arc, b, a, Edge{b, a, Colour::Arc});
        }
    return r;
}

namespace {

std::string pair_name(Guest a, Guest b)
{
    return "{" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + "}";
}

/// Partner of each guest, or empty when m is not a perfect matching.
std::vector<Guest> partners(const Matching & m, int two_n, const std::string & label, Report & r)
{
    std::vector<Guest> p(static_cast<std::size_t>(two_n), -1);
    bool ok = true;
    for (auto [a, b] : m) {
        if (a < 0 || b < 0 || a >= two_n || b >= two_n || a == b) {
            r.add("matching", label + " has bad pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            ok = false;
            continue;
        }
        if (p[static_cast<std::size_t>(a)] != -1 || p[static_cast<std::size_t>(b)] != -1) {
            r.add("matching", label + " covers a guest twice at " + pair_name(a, b));
            ok = false;
        }
        p[static_cast<std::size_t>(a)] = b;
        p[static_cast<std::size_t>(b)] = a;
    }
    for (Guest g = 0; g < two_n; ++g)
        if (p[static_cast<std::size_t>(g)] == -1) {
            r.add("matching", label + " misses guest " + std::to_string(g));
            ok = false;
        }
    if (! ok)
        p.clear();
    return p;
}

} // namespace

Report verify_semi_uniform(const std::vector<Matching> & factors, int two_n, const std::vector<int> & cycle_type_2x)
{
    Report r;
    if (two_n < 2 || two_n % 2 != 0) {
        r.add("structure", "vertex count " + std::to_string(two_n) + " is not a positive even number");
        return r;
    }
    if (factors.size() != static_cast<std::size_t>(two_n - 1))
        r.add("count", std::to_string(factors.size()) + " matchings, expected " + std::to_string(two_n - 1));

    std::vector<std::vector<Guest>> p;
    for (std::size_t i = 0; i < factors.size(); ++i)
        p.push_back(partners(factors[i], two_n, "M" + std::to_string(i), r));

    std::map<std::pair<Guest, Guest>, int> uses;
    for (const Matching & m : factors)
        for (auto [a, b] : m)
            ++uses[{std::min(a, b), std::max(a, b)}];
    for (Guest a = 0; a < two_n; ++a)
        for (Guest b = a + 1; b < two_n; ++b) {
            auto it = uses.find({a, b});
            int k = it == uses.end() ? 0 : it->second;
            if (k != 1)
                r.add("partition", pair_name(a, b) + " used " + std::to_string(k) + " times");
        }

    auto want = sorted_descending(cycle_type_2x);
    if (p.empty() || p[0].empty())
        return r;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i].empty())
            continue;
        std::vector<bool> seen(static_cast<std::size_t>(two_n), false);
        std::vector<int> lengths;
        bool simple = true;
        for (Guest s = 0; s < two_n; ++s) {
            if (seen[static_cast<std::size_t>(s)])
                continue;
            int len = 0;
            Guest g = s;
            bool use_first = true;
            do {
                seen[static_cast<std::size_t>(g)] = true;
                g = use_first ? p[0][static_cast<std::size_t>(g)] : p[i][static_cast<std::size_t>(g)];
                use_first = ! use_first;
                ++len;
            } while (g != s || ! use_first);
            if (len == 2)
                simple = false;
            lengths.push_back(len);
        }
        if (! simple)
            r.add("union", "M0 and M" + std::to_string(i) + " share an edge");
        else if (sorted_descending(lengths) != want)
            r.add("type", "M0+M" + std::to_string(i) + " has cycle lengths " + format_type(sorted_descending(lengths))
                              + ", expected " + format_type(want));
    }
    return r;
}

Report verify_alternating_factorization(const SeatingSolution & s, const std::vector<int> & cycle_type_2x)
{
    Report r;
    int two_n = 2 * s.couples;
    if (s.couples < 2) {
        r.add("structure", std::to_string(s.couples) + " couples");
        return r;
    }
    auto spouse = partners(s.spouses, two_n, "I", r);
    if (spouse.empty())
        return r;
    if (s.rounds.size() != static_cast<std::size_t>(two_n - 2))
        r.add("rounds", std::to_string(s.rounds.size()) + " rounds, expected " + std::to_string(two_n - 2));

    auto want = sorted_descending(cycle_type_2x);
    std::map<std::pair<Guest, Guest>, int> uses;
    for (std::size_t ri = 0; ri < s.rounds.size(); ++ri) {
        const Round & round = s.rounds[ri];
        std::string label = "round " + std::to_string(ri + 1);
        std::vector<int> seen(static_cast<std::size_t>(two_n), 0);
        std::vector<int> lengths;
        bool guests_ok = true;
        for (std::size_t ti = 0; ti < round.size(); ++ti) {
            const Table & t = round[ti];
            lengths.push_back(static_cast<int>(t.size()));
            for (Guest g : t) {
                if (g < 0 || g >= two_n) {
                    r.add("round", label + " has guest " + std::to_string(g) + " out of range");
                    guests_ok = false;
                    continue;
                }
                if (seen[static_cast<std::size_t>(g)]++)
                    r.add("round", label + " seats guest " + std::to_string(g) + " twice");
            }
        }
        for (Guest g = 0; g < two_n; ++g)
            if (guests_ok && ! seen[static_cast<std::size_t>(g)])
                r.add("round", label + " misses guest " + std::to_string(g));
        if (sorted_descending(lengths) != want)
            r.add("type", label + " has tables " + format_type(sorted_descending(lengths)) + ", expected "
                              + format_type(want));
        if (! guests_ok)
            continue;
        for (std::size_t ti = 0; ti < round.size(); ++ti) {
            const Table & t = round[ti];
            std::size_t k = t.size();
            if (k < 2)
                continue;
            for (std::size_t i = 0; i < k; ++i) {
                Guest a = t[i];
                Guest b = t[(i + 1) % k];
                Guest c = t[(i + 2) % k];
                bool ab = spouse[static_cast<std::size_t>(a)] == b;
                bool bc = spouse[static_cast<std::size_t>(b)] == c;
                if (ab == bc)
                    r.add("alternation", label + " table " + std::to_string(ti + 1) + " at guest " + std::to_string(b));
                if (k > 2 || i == 0)
                    ++uses[{std::min(a, b), std::max(a, b)}];
            }
        }
    }
    for (Guest a = 0; a < two_n; ++a)
        for (Guest b = a + 1; b < two_n; ++b) {
            auto it = uses.find({a, b});
            int k = it == uses.end() ? 0 : it->second;
            int expected = spouse[static_cast<std::size_t>(a)] == b ? two_n - 2 : 1;
            if (k != expected)
                r.add("multiplicity", pair_name(a, b) + " adjacent " + std::to_string(k) + " times, expected "
                                          + std::to_string(expected));
        }
    return r;
}

} // namespace hop
