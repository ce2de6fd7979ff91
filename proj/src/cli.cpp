#include "hop/cli.hpp"

#include "hop/catalog.hpp"
#include "hop/error.hpp"
#include "hop/expand.hpp"
#include "hop/format.hpp"
#include "hop/search.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef HOP_FIXTURE_DIR
#define HOP_FIXTURE_DIR "fixtures"
#endif

namespace hop {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string file;
    std::string output;
    bool porcelain = false;
    int n = 0;
    std::string type;
    std::string kind;
    SearchBudget budget;
    bool csv = false;
    bool run_search = false;
    std::string fixtures = HOP_FIXTURE_DIR;
};

void write_output(const std::string & path, const std::string & text, std::ostream & out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (! f)
        throw ArgumentError("cannot write " + path);
    f << text;
}

bool is_factorization_text(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        return line.compare(start, 13, "factorization") == 0;
    }
    return false;
}

void print_report(const std::string & id, const Report & r, bool porcelain, std::ostream & out)
{
    if (porcelain)
        out << r.porcelain(id);
    else
        out << id << ": FAILED\n" << r.text();
}

int cmd_verify(const Options & o, std::ostream & out)
{
    auto records = parse_starter_file(read_file(o.file));
    int failed = 0;
    for (const StarterRecord & r : records) {
        RecordCheck c = check_record(r);
        if (c.report.ok()) {
            if (o.porcelain)
                out << "PASS " << r.id() << '\n';
            continue;
        }
        ++failed;
        print_report(r.id(), c.report, o.porcelain, out);
    }
    if (failed) {
        if (! o.porcelain)
            out << failed << " of " << records.size() << " records failed\n";
        return exit_failed;
    }
    if (! o.porcelain)
        out << records.size() << " records verified\n";
    return exit_ok;
}

// Starters in a file, expanded and checked; nullopt entries failed.
std::vector<Factorization> expanded(const std::string & text, bool porcelain, std::ostream & out, bool & failed)
{
    std::vector<Factorization> result;
    if (is_factorization_text(text)) {
        for (Factorization & d : parse_factorizations(text)) {
            Report r = verify_hop_factorization(d);
            if (! r.ok()) {
                failed = true;
                print_report("factorization n=" + std::to_string(d.n) + format_type(d.cycle_type), r, porcelain, out);
                continue;
            }
            result.push_back(std::move(d));
        }
        return result;
    }
    for (const StarterRecord & rec : parse_starter_file(text)) {
        RecordCheck c = check_record(rec);
        if (! c.report.ok()) {
            failed = true;
            print_report(rec.id(), c.report, porcelain, out);
            continue;
        }
        result.push_back(std::move(*c.factorization));
    }
    return result;
}

int cmd_expand(const Options & o, std::ostream & out)
{
    bool failed = false;
    auto all = expanded(read_file(o.file), o.porcelain, out, failed);
    if (failed)
        return exit_failed;
    std::string text;
    for (std::size_t i = 0; i < all.size(); ++i)
        text += (i ? "\n" : "") + serialize_factorization(all[i]);
    write_output(o.output, text, out);
    return exit_ok;
}

int cmd_lift(const Options & o, std::ostream & out, std::ostream & err)
{
    bool failed = false;
    auto all = expanded(read_file(o.file), o.porcelain, out, failed);
    if (failed)
        return exit_failed;
    std::string text;
    for (std::size_t i = 0; i < all.size(); ++i) {
        try {
            LiftResult l = lift(all[i]);
            text += (i ? "\n" : "") + serialize_seating(l.seating, l.table_sizes);
        }
        catch (const StructureError & e) {
            err << "n=" << all[i].n << ' ' << format_type(all[i].cycle_type) << ": " << e.what() << '\n';
            return exit_failed;
        }
    }
    write_output(o.output, text, out);
    return exit_ok;
}

int cmd_search(const Options & o, std::ostream & out, std::ostream & err)
{
    if (o.type.empty()) {
        std::optional<DispatchTable> table;
        fs::path tables = fs::path(o.fixtures) / "dispatch_tables.txt";
        if (fs::exists(tables))
            table = load_dispatch_table(tables.string());
        auto results = search_all(o.n, o.budget, table ? &*table : nullptr);
        bool all_found = true;
        for (const auto & [type, outcome] : results) {
            out << "# " << format_type(type) << ' ' << status_name(outcome.status) << " nodes=" << outcome.stats.nodes
                << '\n';
            if (outcome.record)
                out << '\n' << serialize_starter(*outcome.record);
            all_found = all_found && outcome.status == SearchStatus::Found;
        }
        return all_found ? exit_ok : exit_failed;
    }

    std::vector<int> type = parse_type(o.type);
    std::vector<StarterKind> kinds;
    if (! o.kind.empty())
        kinds = {parse_kind(o.kind)};
    else if (o.n % 2 != 0)
        kinds = {StarterKind::Three};
    else
        kinds = {StarterKind::One, StarterKind::Two};
    SearchOutcome outcome;
    for (StarterKind k : kinds) {
        outcome = search_starter(o.n, type, k, o.budget);
        if (outcome.status == SearchStatus::Found)
            break;
    }
    if (! outcome.record) {
        err << "n=" << o.n << ' ' << format_type(type) << ": " << status_name(outcome.status) << " after "
            << outcome.stats.nodes << " nodes\n";
        return exit_failed;
    }
    write_output(o.output, serialize_starter(*outcome.record), out);
    return exit_ok;
}

std::map<std::vector<int>, std::string> fixture_statuses(const std::string & dir, int n)
{
    std::map<std::vector<int>, std::string> status;
    fs::path path = fs::path(dir) / ("starters_n" + std::to_string(n) + ".txt");
    if (! fs::exists(path))
        return status;
    for (const StarterRecord & r : parse_starter_file(read_file(path.string())))
        status[r.cycle_type] = check_record(r).report.ok() ? "verified" : "failed";
    return status;
}

int cmd_catalog(const Options & o, std::ostream & out)
{
    std::optional<DispatchTable> table;
    fs::path tables = fs::path(o.fixtures) / "dispatch_tables.txt";
    if (fs::exists(tables))
        table = load_dispatch_table(tables.string());
    auto fixtures = fixture_statuses(o.fixtures, o.n);
    std::map<std::vector<int>, std::string> searches;
    if (o.run_search)
        for (const auto & [type, outcome] : search_all(o.n, o.budget, table ? &*table : nullptr))
            searches[type] = status_name(outcome.status);
    auto rows = report(o.n, table ? &*table : nullptr, fixtures, searches);
    out << (o.csv ? render_csv(rows) : render_text(rows));
    bool ok = std::none_of(rows.begin(), rows.end(), [](const ReportRow & r) {
        return r.agreement == Agreement::Conflict || r.fixture == "failed";
    });
    return ok ? exit_ok : exit_failed;
}

// Every stage of the pipeline on one record; empty on success.
std::string selftest_record(const StarterRecord & r)
{
    if (! (parse_starter_file(serialize_starter(r)).at(0) == r))
        return "starter text does not round-trip";
    RecordCheck c = check_record(r);
    if (! c.report.ok())
        return c.report.text();
    const Factorization & d = *c.factorization;
    if (d.factors.size() != static_cast<std::size_t>(2 * d.n - 2))
        return "expansion has " + std::to_string(d.factors.size()) + " factors";
    auto back = parse_factorizations(serialize_factorization(d));
    if (back.size() != 1 || back[0].factors != d.factors)
        return "factorization text does not round-trip";
    LiftResult l = lift(d);
    Report seating = verify_alternating_factorization(l.seating, l.table_sizes);
    seating.append(verify_semi_uniform(to_one_factorization(l.seating), 2 * d.n, l.table_sizes));
    if (! seating.ok())
        return seating.text();
    SeatingSolution parsed = parse_seating(serialize_seating(l.seating, l.table_sizes));
    if (parsed.rounds != l.seating.rounds)
        return "seating text does not round-trip";
    return {};
}

int cmd_selftest(const Options & o, std::ostream & out)
{
    int passed = 0;
    int failed = 0;
    for (int n : {10, 11, 12}) {
        fs::path path = fs::path(o.fixtures) / ("starters_n" + std::to_string(n) + ".txt");
        auto records = parse_starter_file(read_file(path.string()));
        int here = 0;
        for (const StarterRecord & r : records) {
            std::string problem;
            try {
                problem = selftest_record(r);
            }
            catch (const std::exception & e) {
                problem = e.what();
            }
            if (problem.empty()) {
                ++here;
                continue;
            }
            ++failed;
            out << "FAIL " << r.id() << ' ' << problem << '\n';
        }
        passed += here;
        out << path.filename().string() << ": " << here << '/' << records.size() << " records passed\n";
    }
    out << "selftest: " << passed << " passed, " << failed << " failed\n";
    return failed ? exit_failed : exit_ok;
}

void add_budget(CLI::App * sub, Options & o)
{
    sub->add_option("--max-nodes", o.budget.max_nodes, "Node budget per search")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-seconds", o.budget.max_seconds, "Time budget per search, seconds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.budget.seed, "Branch-order seed, 0 for natural order")->capture_default_str();
}

} // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"Starter 2-factors for the Honeymoon Oberwolfach Problem", "hop"};
    app.require_subcommand(1);

    auto * verify = app.add_subcommand("verify", "Check every starter record in a file");
    verify->add_option("file", o.file, "Starter file")->required();
    verify->add_flag("--porcelain", o.porcelain, "One PASS/FAIL line per record or violation");

    auto * expand = app.add_subcommand("expand", "Expand starters into full factorizations");
    expand->add_option("file", o.file, "Starter file")->required();
    expand->add_option("-o,--output", o.output, "Output file, default standard output");
    expand->add_flag("--porcelain", o.porcelain, "Machine-readable failure lines");

    auto * lift_cmd = app.add_subcommand("lift", "Turn starters or factorizations into seating schedules");
    lift_cmd->add_option("file", o.file, "Starter or factorization file")->required();
    lift_cmd->add_option("-o,--output", o.output, "Output file, default standard output");
    lift_cmd->add_flag("--porcelain", o.porcelain, "Machine-readable failure lines");

    auto * search = app.add_subcommand("search", "Search for a starter of the given type");
    search->add_option("--n", o.n, "Number of couples")->required()->check(CLI::Range(min_order, 64));
    search->add_option("--type", o.type, "Cycle type, e.g. 8,2; omit to search every uncovered type");
    search->add_option("--kind", o.kind, "one, two or three")->check(CLI::IsMember({"one", "two", "three"}));
    search->add_option("-o,--output", o.output, "Output file, default standard output");
    search->add_option("--fixtures", o.fixtures, "Directory holding dispatch_tables.txt")->capture_default_str();
    add_budget(search, o);

    auto * catalog = app.add_subcommand("catalog", "Classify every cycle type of order n");
    catalog->add_option("--n", o.n, "Number of couples")->required()->check(CLI::Range(min_order, 64));
    catalog->add_flag("--csv", o.csv, "Comma-separated output");
    catalog->add_flag("--search", o.run_search, "Also search every uncovered type");
    catalog->add_option("--fixtures", o.fixtures, "Fixture directory")->capture_default_str();
    add_budget(catalog, o);

    auto * selftest = app.add_subcommand("selftest", "Run the full chain on the shipped fixtures");
    selftest->add_option("--fixtures", o.fixtures, "Fixture directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::Error & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*verify)
            return cmd_verify(o, out);
        if (*expand)
            return cmd_expand(o, out);
        if (*lift_cmd)
            return cmd_lift(o, out, err);
        if (*search)
            return cmd_search(o, out, err);
        if (*catalog)
            return cmd_catalog(o, out);
        if (*selftest)
            return cmd_selftest(o, out);
    }
    catch (const hop::ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ArgumentError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const StructureError & e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}

} // namespace hop
