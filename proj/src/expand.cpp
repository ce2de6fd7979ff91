#include "hop/expand.hpp"

#include "hop/error.hpp"

#include <algorithm>

namespace hop {

std::size_t special_two_cycle(const TwoFactor & f, int n)
{
    if (n % 2 == 0)
        throw ArgumentError("special 2-cycle only exists for odd n, got " + std::to_string(n));
    int half = (n - 1) / 2;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle & c = f.cycles[i];
        if (c.size() != 2 || c.edges.size() != 2)
            continue;
        Difference d = difference(c.vertices[0], c.vertices[1], n);
        if (d.is_infinite() || d.value() != half)
            continue;
        auto a = c.edges[0].colour;
        auto b = c.edges[1].colour;
        bool pink_blue = (a == Colour::Pink && b == Colour::Blue) || (a == Colour::Blue && b == Colour::Pink);
        if (! pink_blue)
            continue;
        if (found)
            throw StructureError("more than one pink+blue 2-cycle of difference " + std::to_string(half));
        found = i;
    }
    if (! found)
        throw StructureError("no pink+blue 2-cycle of difference " + std::to_string(half));
    return *found;
}

TwoFactor derive_f2(const TwoFactor & f1, int n)
{
    if (n % 2 == 0)
        throw ArgumentError("derive_f2 needs odd n, got " + std::to_string(n));
    std::size_t special = special_two_cycle(f1, n);
    TwoFactor f2 = rotate(f1, (n - 1) / 2, n);
    Cycle & c = f2.cycles[special];
    c.edges = {make_arc(c.vertices[0], c.vertices[1], n), make_arc(c.vertices[1], c.vertices[0], n)};
    return f2;
}

namespace {

// Starts at the least vertex and walks towards its smaller neighbour.
Cycle canonical_walk(const Cycle & c)
{
    std::size_t k = c.size();
    auto start = static_cast<std::size_t>(std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
    Vertex next = c.vertices[(start + 1) % k];
    Vertex prev = c.vertices[(start + k - 1) % k];
    Cycle out;
    if (next < prev) {
        for (std::size_t i = 0; i < k; ++i) {
            out.vertices.push_back(c.vertices[(start + i) % k]);
            out.edges.push_back(c.edges[(start + i) % k]);
        }
    }
    else {
        for (std::size_t i = 0; i < k; ++i) {
            out.vertices.push_back(c.vertices[(start + k - i) % k]);
            out.edges.push_back(c.edges[(start + 2 * k - i - 1) % k]);
        }
    }
    return out;
}

std::pair<Cycle, Cycle> split_cycle(const Cycle & source, int n)
{
    if (source.size() == 2) {
        Cycle first = source;
        Cycle second = source;
        Vertex a = source.vertices[0];
        Vertex b = source.vertices[1];
        first.edges = {make_edge(a, b, Colour::Pink, n), make_edge(b, a, Colour::Blue, n)};
        second.edges = {make_arc(a, b, n), make_arc(b, a, n)};
        return {first, second};
    }

    Cycle c = canonical_walk(source);
    std::size_t k = c.size();
    std::vector<std::size_t> pinks;
    for (std::size_t i = 0; i < k; ++i)
        if (c.edges[i].colour == Colour::Pink)
            pinks.push_back(i);

    // forward[i]: the arc on position i points from vertices[i] to vertices[i+1]
    std::vector<Colour> colour(k, Colour::Arc);
    std::vector<bool> forward(k, true);
    for (std::size_t j = 0; j < pinks.size(); ++j)
        colour[pinks[j]] = j % 2 == 0 ? Colour::Pink : Colour::Blue;
    if (! pinks.empty()) {
        Colour last = colour[pinks.back()];
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t i = (pinks.front() + step) % k;
            if (colour[i] != Colour::Arc) {
                last = colour[i];
                continue;
            }
            // runs leave pink edges and enter blue ones
            forward[i] = last == Colour::Pink;
        }
    }

    Cycle first;
    first.vertices = c.vertices;
    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = c.vertices[i];
        Vertex b = c.vertices[(i + 1) % k];
        if (colour[i] == Colour::Arc)
            first.edges.push_back(forward[i] ? make_arc(a, b, n) : make_arc(b, a, n));
        else
            first.edges.push_back(make_edge(a, b, colour[i], n));
    }
    return {first, conjugate(first)};
}

} // namespace

std::pair<TwoFactor, TwoFactor> one_to_two(const TwoFactor & f, int n)
{
    Report a = check_a(f, n);
    if (! a.ok())
        throw ArgumentError("one-starter fails its conditions:\n" + a.text());
    TwoFactor f1{n, {}};
    TwoFactor f2{n, {}};
    for (const Cycle & c : f.cycles) {
        auto [x, y] = split_cycle(c, n);
        f1.cycles.push_back(std::move(x));
        f2.cycles.push_back(std::move(y));
    }
    Report d = check_d(f1, f2, n);
    if (! d.ok())
        throw StructureError("one-starter reconstruction failed the two-starter check:\n" + d.text());
    return {f1, f2};
}

Factorization expand_two(const TwoFactor & f1, const TwoFactor & f2, int n)
{
    Factorization d{n, f1.cycle_type(), {}};
    for (int i = 0; i < n - 1; ++i) {
        d.factors.push_back(rotate(f1, i, n));
        d.factors.push_back(rotate(f2, i, n));
    }
    return d;
}

Factorization expand_three(const TwoFactor & f1, const TwoFactor & f2, const TwoFactor & f3, int n)
{
    Factorization d{n, f1.cycle_type(), {}};
    for (int i = 0; i <= (n - 3) / 2; ++i) {
        d.factors.push_back(rotate(f1, i, n));
        d.factors.push_back(rotate(f2, i, n));
    }
    for (int i = 0; i < n - 1; ++i)
        d.factors.push_back(rotate(f3, i, n));
    return d;
}

Starters prepare(const StarterRecord & r, Report & report)
{
    Starters s;
    s.kind = r.kind;
    s.n = r.n;
    int n = r.n;
    bool even = n % 2 == 0;
    std::size_t want = r.kind == StarterKind::One ? 1 : 2;
    if (r.factors.size() != want) {
        report.add("structure", "kind " + std::string(kind_name(r.kind)) + " needs " + std::to_string(want)
                                    + " factor(s)");
        return s;
    }
    if ((r.kind == StarterKind::Three) == even) {
        report.add("parity", "kind " + std::string(kind_name(r.kind)) + " does not apply to n=" + std::to_string(n));
        return s;
    }
    try {
        switch (r.kind) {
        case StarterKind::One: {
            TwoFactor f = decode_factor(r.factors[0], n, r.kind);
            report.append(check_factor_structure(f, r.cycle_type, "F"));
            report.append(check_a(f, n));
            s.source = f;
            if (report.ok()) {
                auto [f1, f2] = one_to_two(f, n);
                s.f1 = std::move(f1);
                s.f2 = std::move(f2);
            }
            break;
        }
        case StarterKind::Two: {
            s.f1 = decode_factor(r.factors[0], n, r.kind);
            s.f2 = decode_factor(r.factors[1], n, r.kind);
            report.append(check_factor_structure(s.f1, r.cycle_type, "F1"));
            report.append(check_d(s.f1, s.f2, n));
            break;
        }
        case StarterKind::Three: {
            TwoFactor a = decode_factor(r.factors[0], n, r.kind);
            TwoFactor b = decode_factor(r.factors[1], n, r.kind);
            auto has_special = [n](const TwoFactor & f) {
                try {
                    special_two_cycle(f, n);
                    return true;
                }
                catch (const StructureError &) {
                    return false;
                }
            };
            bool in_a = has_special(a);
            bool in_b = has_special(b);
            if (in_a == in_b) {
                report.add("E4", in_a ? "both listed factors hold a pink+blue 2-cycle of difference (n-1)/2"
                                      : "no listed factor holds a single pink+blue 2-cycle of difference (n-1)/2");
                return s;
            }
            s.f1 = in_a ? a : b;
            s.f3 = in_a ? b : a;
            s.f2 = derive_f2(s.f1, n);
            report.append(check_factor_structure(s.f1, r.cycle_type, "F1"));
            report.append(check_e(s.f1, s.f2, *s.f3, n));
            break;
        }
        }
    }
    catch (const ArgumentError & e) {
        report.add("decode", e.what());
    }
    catch (const StructureError & e) {
        report.add("reconstruction", e.what());
    }
    return s;
}

Factorization expand(const Starters & s)
{
    if (s.kind == StarterKind::Three)
        return expand_three(s.f1, s.f2, s.f3.value(), s.n);
    return expand_two(s.f1, s.f2, s.n);
}

RecordCheck check_record(const StarterRecord & r)
{
    RecordCheck out;
    Starters s = prepare(r, out.report);
    if (! out.report.ok())
        return out;
    Factorization d = expand(s);
    out.report.append(verify_hop_factorization(d));
    out.factorization = std::move(d);
    return out;
}

// ---- lift --------------------------------------------------------------------

namespace {

std::optional<int> side(const Edge & e, Vertex x, LiftTable table)
{
    int s;
    switch (e.colour) {
    case Colour::Pink: s = 0; break;
    case Colour::Blue: s = 1; break;
    case Colour::Arc: s = e.tail() == x ? 1 : 0; break;
    default: return std::nullopt;
    }
    return table == LiftTable::Standard ? s : 1 - s;
}

std::optional<SeatingSolution> try_lift(const Factorization & d, LiftTable table)
{
    SeatingSolution s;
    s.couples = d.n;
    s.spouses = couple_matching(d.n);
    for (const TwoFactor & f : d.factors) {
        Round round;
        for (const Cycle & c : f.cycles) {
            Table t;
            std::size_t k = c.size();
            for (std::size_t i = 0; i < k; ++i) {
                Vertex x = c.vertices[i];
                auto in = side(c.edges[(i + k - 1) % k], x, table);
                auto out = side(c.edges[i], x, table);
                if (! in || ! out || *in == *out)
                    return std::nullopt;
                t.push_back(2 * x + *in);
                t.push_back(2 * x + *out);
            }
            round.push_back(std::move(t));
        }
        s.rounds.push_back(std::move(round));
    }
    return s;
}

} // namespace

LiftResult lift(const Factorization & d)
{
    std::vector<int> doubled;
    for (int m : d.cycle_type)
        doubled.push_back(2 * m);
    doubled = sorted_descending(doubled);
    std::string why;
    for (LiftTable table : {LiftTable::Standard, LiftTable::Swapped}) {
        auto s = try_lift(d, table);
        if (! s) {
            why += "walk does not alternate; ";
            continue;
        }
        Report r = verify_alternating_factorization(*s, doubled);
        r.append(verify_semi_uniform(to_one_factorization(*s), 2 * d.n, doubled));
        if (r.ok())
            return LiftResult{std::move(*s), table, doubled};
        why += r.violations.front().clause + ": " + r.violations.front().locus + "; ";
    }
    throw StructureError("lift failed under both colour tables: " + why);
}

std::vector<Matching> to_one_factorization(const SeatingSolution & s)
{
    std::vector<Guest> spouse(static_cast<std::size_t>(2 * s.couples), -1);
    for (auto [a, b] : s.spouses) {
        spouse.at(static_cast<std::size_t>(a)) = b;
        spouse.at(static_cast<std::size_t>(b)) = a;
    }
    std::vector<Matching> out{s.spouses};
    for (const Round & round : s.rounds) {
        Matching m;
        for (const Table & t : round)
            for (std::size_t i = 0; i < t.size(); ++i) {
                Guest a = t[i];
                Guest b = t[(i + 1) % t.size()];
                if (spouse.at(static_cast<std::size_t>(a)) != b)
                    m.emplace_back(std::min(a, b), std::max(a, b));
            }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace hop
