#include "hop/format.hpp"

#include "hop/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace hop {

const char * kind_name(StarterKind k)
{
    switch (k) {
    case StarterKind::One: return "one";
    case StarterKind::Two: return "two";
    case StarterKind::Three: return "three";
    }
    return "?";
}

StarterKind parse_kind(std::string_view s)
{
    if (s == "one" || s == "1")
        return StarterKind::One;
    if (s == "two" || s == "2")
        return StarterKind::Two;
    if (s == "three" || s == "3")
        return StarterKind::Three;
    throw ArgumentError("unknown starter kind '" + std::string(s) + "'");
}

std::string format_type(const std::vector<int> & parts)
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

namespace {

std::string_view trim(std::string_view s)
{
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool starts_with(std::string_view s, std::string_view p)
{
    return s.substr(0, p.size()) == p;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string_view strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::optional<int> to_int(std::string_view s)
{
    s = trim(s);
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return value;
}

// key=value fields of a header line.
std::string field(std::string_view line, std::string_view key, int lineno)
{
    std::string pat = std::string(key) + "=";
    std::size_t pos = 0;
    while ((pos = line.find(pat, pos)) != std::string_view::npos) {
        if (pos == 0 || std::isspace(static_cast<unsigned char>(line[pos - 1])))
            break;
        ++pos;
    }
    if (pos == std::string_view::npos)
        throw ParseError(lineno, "missing field '" + std::string(key) + "'");
    auto start = pos + pat.size();
    auto end = line.find_first_of(" \t", start);
    return std::string(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
}

class CycleLexer {
public:
    CycleLexer(std::string_view s, int lineno) : s_(s), line_(lineno) {}

    RawCycle parse()
    {
        RawCycle c;
        expect('[');
        bool want_vertex = true;
        for (;;) {
            skip_space();
            if (peek() == ']')
                break;
            if (want_vertex) {
                c.vertices.push_back(number());
            }
            else {
                expect('[');
                RawEdgeCode code;
                code.d = number();
                expect(',');
                code.c = number();
                expect(']');
                c.codes.push_back(code);
            }
            want_vertex = ! want_vertex;
            skip_space();
            if (peek() == ',')
                ++pos_;
            else if (peek() != ']')
                fail("expected ',' or ']'");
        }
        expect(']');
        skip_space();
        if (pos_ != s_.size())
            fail("trailing characters after cycle");
        if (! want_vertex)
            fail("cycle must end with an edge code");
        if (c.vertices.size() < 2)
            fail("cycle needs at least two vertices");
        return c;
    }

private:
    [[noreturn]] void fail(const std::string & what) const
    {
        throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    void expect(char ch)
    {
        skip_space();
        if (peek() != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    int number()
    {
        skip_space();
        auto start = pos_;
        if (peek() == '-')
            ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        auto v = to_int(s_.substr(start, pos_ - start));
        if (! v)
            fail("expected an integer");
        return *v;
    }

    std::string_view s_;
    int line_;
    std::size_t pos_ = 0;
};

void check_type(const std::vector<int> & parts, int n, int lineno)
{
    int sum = 0;
    for (int m : parts) {
        if (m < 2)
            throw ParseError(lineno, "cycle length " + std::to_string(m) + " is below 2");
        sum += m;
    }
    if (sum != n)
        throw ParseError(lineno, "type " + format_type(parts) + " does not sum to n=" + std::to_string(n));
}

std::size_t expected_factor_count(StarterKind k)
{
    return k == StarterKind::One ? 1 : 2;
}

struct PendingRecord {
    StarterRecord record;
    std::vector<std::vector<int>> cycle_lines;
};

void validate_codes(const RawCycle & c, int n, StarterKind kind, int lineno)
{
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        Vertex a = c.vertices[i];
        Vertex b = c.vertices[(i + 1) % c.vertices.size()];
        const RawEdgeCode & code = c.codes[i];
        bool declared_infinite = code.d == n - 1;
        if (! declared_infinite && (code.d < 1 || code.d > max_finite_difference(n)))
            throw ParseError(lineno, "difference " + std::to_string(code.d) + " out of range on edge "
                                         + std::to_string(a) + "-" + std::to_string(b));
        if (a == b)
            throw ParseError(lineno, "degenerate edge at vertex " + std::to_string(a));
        Difference actual = difference(a, b, n);
        bool ok = declared_infinite ? actual.is_infinite() : (! actual.is_infinite() && actual.value() == code.d);
        if (! ok)
            throw ParseError(lineno, "difference mismatch on edge " + std::to_string(a) + "-" + std::to_string(b)
                                         + ": declared " + std::to_string(code.d) + ", computed "
                                         + actual.to_string());
        bool colour_ok = kind == StarterKind::One ? (code.c == 0 || code.c == 1)
                                                  : (code.c >= -1 && code.c <= 2);
        if (! colour_ok)
            throw ParseError(lineno, "colour code " + std::to_string(code.c) + " not allowed for kind "
                                         + kind_name(kind) + " on edge " + std::to_string(a) + "-"
                                         + std::to_string(b));
    }
}

void finish(PendingRecord & p, std::vector<StarterRecord> & out)
{
    StarterRecord & r = p.record;
    if (r.factors.size() != expected_factor_count(r.kind))
        throw ParseError(r.line, "kind " + std::string(kind_name(r.kind)) + " needs "
                                     + std::to_string(expected_factor_count(r.kind)) + " factor(s), found "
                                     + std::to_string(r.factors.size()));
    for (std::size_t f = 0; f < r.factors.size(); ++f) {
        std::vector<bool> seen(static_cast<std::size_t>(r.n), false);
        std::vector<int> lengths;
        for (std::size_t ci = 0; ci < r.factors[f].size(); ++ci) {
            const RawCycle & c = r.factors[f][ci];
            int lineno = p.cycle_lines[f][ci];
            for (Vertex v : c.vertices) {
                if (v < 0 || v >= r.n)
                    throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
                if (seen[static_cast<std::size_t>(v)])
                    throw ParseError(lineno, "vertex " + std::to_string(v) + " repeated in factor");
                seen[static_cast<std::size_t>(v)] = true;
            }
            validate_codes(c, r.n, r.kind, lineno);
            lengths.push_back(static_cast<int>(c.vertices.size()));
        }
        if (sorted_descending(lengths) != r.cycle_type)
            throw ParseError(r.line, "cycle-type mismatch in factor " + std::to_string(f + 1) + ": found "
                                         + format_type(sorted_descending(lengths)) + ", declared "
                                         + format_type(r.cycle_type));
    }
    out.push_back(std::move(r));
}

} // namespace

std::vector<int> parse_type(std::string_view s)
{
    s = trim(s);
    if (! s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw ArgumentError("unbalanced brackets in type '" + std::string(s) + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto v = to_int(piece);
        if (! v)
            throw ArgumentError("bad cycle length '" + std::string(trim(piece)) + "'");
        parts.push_back(*v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

std::string StarterRecord::id() const
{
    return "n" + std::to_string(n) + format_type(cycle_type);
}

std::vector<StarterRecord> parse_starter_file(std::string_view text)
{
    std::vector<StarterRecord> out;
    std::optional<PendingRecord> cur;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i + 1);
        std::string_view line = strip_comment(lines[i]);
        if (line.empty()) {
            // comment-only lines do not end a record
            if (trim(lines[i]).empty() && cur) {
                finish(*cur, out);
                cur.reset();
            }
            continue;
        }
        if (starts_with(line, "starter")) {
            if (cur)
                finish(*cur, out);
            cur.emplace();
            StarterRecord & r = cur->record;
            r.line = lineno;
            auto n = to_int(field(line, "n", lineno));
            if (! n || *n < min_order)
                throw ParseError(lineno, "bad order n");
            r.n = *n;
            try {
                r.cycle_type = sorted_descending(parse_type(field(line, "type", lineno)));
                r.kind = parse_kind(field(line, "kind", lineno));
            }
            catch (const ArgumentError & e) {
                throw ParseError(lineno, e.what());
            }
            check_type(r.cycle_type, r.n, lineno);
            r.factors.emplace_back();
            cur->cycle_lines.emplace_back();
        }
        else if (line == "--") {
            if (! cur)
                throw ParseError(lineno, "factor separator outside a record");
            cur->record.factors.emplace_back();
            cur->cycle_lines.emplace_back();
        }
        else if (starts_with(line, "C:")) {
            if (! cur)
                throw ParseError(lineno, "cycle outside a record");
            cur->record.factors.back().push_back(CycleLexer(line.substr(2), lineno).parse());
            cur->cycle_lines.back().push_back(lineno);
        }
        else {
            throw ParseError(lineno, "unrecognised line '" + std::string(line) + "'");
        }
    }
    if (cur)
        finish(*cur, out);
    return out;
}

namespace {

void write_cycle(std::ostringstream & os, const RawCycle & c)
{
    os << "C: [";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i)
            os << ", ";
        os << c.vertices[i] << ", [" << c.codes[i].d << ", " << c.codes[i].c << "]";
    }
    os << "]\n";
}

} // namespace

std::string serialize_starter(const StarterRecord & r)
{
    std::ostringstream os;
    os << "starter n=" << r.n << " type=" << format_type(sorted_descending(r.cycle_type))
       << " kind=" << kind_name(r.kind) << "\n";
    for (std::size_t f = 0; f < r.factors.size(); ++f) {
        if (f)
            os << "--\n";
        for (const RawCycle & c : r.factors[f])
            write_cycle(os, c);
    }
    return os.str();
}

std::string serialize_starters(const std::vector<StarterRecord> & rs)
{
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i)
            out += "\n";
        out += serialize_starter(rs[i]);
    }
    return out;
}

TwoFactor decode_factor(const RawFactor & raw, int n, StarterKind kind)
{
    TwoFactor f{n, {}};
    for (const RawCycle & rc : raw) {
        Cycle c;
        c.vertices = rc.vertices;
        for (std::size_t i = 0; i < rc.vertices.size(); ++i) {
            Vertex a = rc.vertices[i];
            Vertex b = rc.vertices[(i + 1) % rc.vertices.size()];
            int code = rc.codes.at(i).c;
            if (code == 0) {
                c.edges.push_back(make_edge(a, b, Colour::Pink, n));
                continue;
            }
            if (code == 2) {
                if (kind == StarterKind::One)
                    throw ArgumentError("blue edge in a two-fold factor");
                c.edges.push_back(make_edge(a, b, Colour::Blue, n));
                continue;
            }
            if (kind == StarterKind::One) {
                if (code != 1)
                    throw ArgumentError("oriented black edge in a two-fold factor");
                c.edges.push_back(make_edge(a, b, Colour::Black, n));
                continue;
            }
            if (code != 1 && code != -1)
                throw ArgumentError("bad colour code " + std::to_string(code));
            // forward arc as (tail, head)
            Vertex tail = a;
            Vertex head = b;
            Difference d = difference(a, b, n);
            if (d.is_infinite()) {
                if (is_infinity(a, n))
                    std::swap(tail, head);
            }
            else if (2 * d.value() != n - 1 && rotate(a, d.value(), n) != b) {
                std::swap(tail, head);
            }
            if (code == -1)
                std::swap(tail, head);
            c.edges.push_back(make_arc(tail, head, n));
        }
        f.cycles.push_back(std::move(c));
    }
    return f;
}

RawFactor encode_factor(const TwoFactor & f, StarterKind kind)
{
    int n = f.n;
    RawFactor out;
    for (const Cycle & c : f.cycles) {
        RawCycle rc;
        rc.vertices = c.vertices;
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            Vertex a = c.vertices[i];
            Vertex b = c.vertices[(i + 1) % c.vertices.size()];
            const Edge & e = c.edges[i];
            Difference d = difference(a, b, n);
            RawEdgeCode code;
            code.d = d.is_infinite() ? n - 1 : d.value();
            switch (e.colour) {
            case Colour::Pink: code.c = 0; break;
            case Colour::Blue: code.c = 2; break;
            case Colour::Black: code.c = 1; break;
            case Colour::Arc: {
                if (kind == StarterKind::One)
                    throw ArgumentError("arc in a two-fold factor");
                bool forward;
                if (d.is_infinite())
                    forward = is_infinity(e.head(), n);
                else if (2 * d.value() == n - 1)
                    forward = e.tail() == a;
                else
                    forward = rotate(e.tail(), d.value(), n) == e.head();
                code.c = forward ? 1 : -1;
                break;
            }
            }
            rc.codes.push_back(code);
        }
        out.push_back(std::move(rc));
    }
    return out;
}

StarterRecord make_record(StarterKind kind, const std::vector<TwoFactor> & factors)
{
    StarterRecord r;
    r.kind = kind;
    r.n = factors.at(0).n;
    r.cycle_type = factors.at(0).cycle_type();
    for (const TwoFactor & f : factors)
        r.factors.push_back(encode_factor(f, kind));
    return r;
}

// ---- factorizations ----------------------------------------------------------

std::string serialize_factorization(const Factorization & d)
{
    std::ostringstream os;
    os << "factorization n=" << d.n << " type=" << format_type(d.cycle_type) << " factors=" << d.factors.size()
       << "\n";
    for (std::size_t f = 0; f < d.factors.size(); ++f) {
        if (f)
            os << "--\n";
        for (const RawCycle & c : encode_factor(d.factors[f], StarterKind::Two))
            write_cycle(os, c);
    }
    return os.str();
}

std::vector<Factorization> parse_factorizations(std::string_view text)
{
    std::vector<Factorization> out;
    std::vector<RawFactor> raw;
    std::optional<Factorization> cur;
    std::size_t declared = 0;
    int header_line = 0;
    auto flush = [&]() {
        if (! cur)
            return;
        if (raw.size() != declared)
            throw ParseError(header_line, "declared " + std::to_string(declared) + " factors, found "
                                              + std::to_string(raw.size()));
        for (const RawFactor & rf : raw)
            cur->factors.push_back(decode_factor(rf, cur->n, StarterKind::Two));
        out.push_back(std::move(*cur));
        cur.reset();
        raw.clear();
    };
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i + 1);
        std::string_view line = strip_comment(lines[i]);
        if (line.empty()) {
            if (trim(lines[i]).empty())
                flush();
            continue;
        }
        if (starts_with(line, "factorization")) {
            flush();
            cur.emplace();
            header_line = lineno;
            auto n = to_int(field(line, "n", lineno));
            auto count = to_int(field(line, "factors", lineno));
            if (! n || *n < min_order || ! count || *count < 0)
                throw ParseError(lineno, "bad factorization header");
            cur->n = *n;
            declared = static_cast<std::size_t>(*count);
            try {
                cur->cycle_type = sorted_descending(parse_type(field(line, "type", lineno)));
            }
            catch (const ArgumentError & e) {
                throw ParseError(lineno, e.what());
            }
            raw.emplace_back();
        }
        else if (line == "--") {
            if (! cur)
                throw ParseError(lineno, "factor separator outside a factorization");
            raw.emplace_back();
        }
        else if (starts_with(line, "C:")) {
            if (! cur)
                throw ParseError(lineno, "cycle outside a factorization");
            RawCycle c = CycleLexer(line.substr(2), lineno).parse();
            for (Vertex v : c.vertices)
                if (v < 0 || v >= cur->n)
                    throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            validate_codes(c, cur->n, StarterKind::Two, lineno);
            raw.back().push_back(std::move(c));
        }
        else {
            throw ParseError(lineno, "unrecognised line '" + std::string(line) + "'");
        }
    }
    flush();
    return out;
}

// ---- seating -------------------------------------------------------------------

std::string serialize_seating(const SeatingSolution & s, const std::vector<int> & table_sizes)
{
    std::ostringstream os;
    os << "seating couples=" << s.couples << " type=" << format_type(table_sizes) << "\n";
    for (std::size_t r = 0; r < s.rounds.size(); ++r) {
        os << "round " << r + 1 << "\n";
        bool first_table = true;
        for (const Table & t : s.rounds[r]) {
            if (! first_table)
                os << ' ';
            first_table = false;
            os << '(';
            for (std::size_t i = 0; i < t.size(); ++i)
                os << (i ? " " : "") << t[i];
            os << ')';
        }
        os << "\n";
    }
    return os.str();
}

SeatingSolution parse_seating(std::string_view text)
{
    SeatingSolution s;
    bool have_header = false;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i + 1);
        std::string_view line = strip_comment(lines[i]);
        if (line.empty())
            continue;
        if (starts_with(line, "seating")) {
            auto c = to_int(field(line, "couples", lineno));
            if (! c || *c < 1)
                throw ParseError(lineno, "bad couple count");
            s.couples = *c;
            s.spouses = couple_matching(*c);
            have_header = true;
        }
        else if (starts_with(line, "round")) {
            if (! have_header)
                throw ParseError(lineno, "round before seating header");
            s.rounds.emplace_back();
        }
        else if (line.front() == '(') {
            if (s.rounds.empty())
                throw ParseError(lineno, "tables outside a round");
            std::size_t pos = 0;
            while (pos < line.size()) {
                auto open = line.find('(', pos);
                if (open == std::string_view::npos)
                    break;
                auto close = line.find(')', open);
                if (close == std::string_view::npos)
                    throw ParseError(lineno, "unclosed table");
                Table t;
                std::istringstream is{std::string(line.substr(open + 1, close - open - 1))};
                Guest g;
                while (is >> g)
                    t.push_back(g);
                if (! is.eof())
                    throw ParseError(lineno, "bad guest number");
                s.rounds.back().push_back(std::move(t));
                pos = close + 1;
            }
        }
        else {
            throw ParseError(lineno, "unrecognised line '" + std::string(line) + "'");
        }
    }
    if (! have_header)
        throw ParseError(1, "missing seating header");
    return s;
}

Matching couple_matching(int couples)
{
    Matching m;
    for (int x = 0; x < couples; ++x)
        m.emplace_back(2 * x, 2 * x + 1);
    return m;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ArgumentError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace hop
