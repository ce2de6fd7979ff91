#include "hop/search.hpp"

#include "hop/catalog.hpp"
#include "hop/error.hpp"
#include "hop/expand.hpp"
#include "hop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <random>
#include <thread>

namespace hop {

const char * status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

struct OutOfBudget {};

struct Slot {
    bool rotation_free = true;
    std::vector<int> remaining; // remaining[L] = cycles of length L still to place
    std::vector<char> covered;
    std::vector<Cycle> cycles;
};

class Searcher {
public:
    Searcher(int n, const std::vector<int> & type, StarterKind kind, const SearchBudget & budget) :
        n_(n), kind_(kind), budget_(budget),
        index_(orbit_index(n, kind == StarterKind::One ? GraphKind::TwoFold : GraphKind::FourFold)),
        used_(static_cast<std::size_t>(index_.orbit_count()), 0), rng_(budget.seed)
    {
        int slots = kind == StarterKind::One ? 1 : 2;
        for (int i = 0; i < slots; ++i) {
            Slot s;
            s.remaining.assign(static_cast<std::size_t>(n + 1), 0);
            for (int m : type)
                ++s.remaining[static_cast<std::size_t>(m)];
            s.covered.assign(static_cast<std::size_t>(n), 0);
            slots_.push_back(std::move(s));
        }
        if (kind == StarterKind::Three)
            seed_special();
        if (kind == StarterKind::One)
            colours_ = {Colour::Pink, Colour::Black};
        else
            colours_ = {Colour::Pink, Colour::Blue, Colour::Arc, Colour::Arc};
    }

    SearchOutcome run()
    {
        start_ = std::chrono::steady_clock::now();
        SearchOutcome out;
        try {
            out.status = next_cycle() ? SearchStatus::Found : SearchStatus::Exhausted;
        }
        catch (const OutOfBudget &) {
            out.status = SearchStatus::BudgetExceeded;
        }
        out.stats.nodes = nodes_;
        out.stats.seconds = elapsed();
        if (out.status == SearchStatus::Found)
            out.record = record();
        return out;
    }

private:
    // F1 of a three-starter holds the pink+blue 2-cycle {0, h}; its rotation
    // image in F2 takes both arcs of difference h, and the pink and blue
    // orbits of difference h are covered by that 2-cycle alone.
    void seed_special()
    {
        int h = (n_ - 1) / 2;
        Slot & s = slots_[0];
        if (s.remaining[2] == 0)
            throw ArgumentError("three-starter search needs a 2-cycle in the type");
        --s.remaining[2];
        s.covered[0] = s.covered[static_cast<std::size_t>(h)] = 1;
        s.rotation_free = false;
        Cycle c{{0, h}, {make_edge(0, h, Colour::Pink, n_), make_edge(h, 0, Colour::Blue, n_)}};
        s.cycles.push_back(c);
        use(c.edges[0]);
        use(c.edges[1]);
        use(make_arc(0, h, n_));
    }

    void use(const Edge & e) { used_[static_cast<std::size_t>(index_.id_of(e))] = 1; }

    int orbit(const Edge & e) const { return index_.id_of(e); }

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void tick()
    {
        ++nodes_;
        if (nodes_ > budget_.max_nodes)
            throw OutOfBudget{};
        if ((nodes_ & 0xfff) == 0 && elapsed() > budget_.max_seconds)
            throw OutOfBudget{};
    }

    template <class T>
    void shuffle(std::vector<T> & v)
    {
        if (budget_.seed != 0)
            std::shuffle(v.begin(), v.end(), rng_);
    }

    std::vector<Edge> candidates(Vertex a, Vertex b)
    {
        std::vector<Edge> out;
        bool arc_forward = true;
        for (Colour c : colours_) {
            Edge e;
            if (c == Colour::Arc) {
                e = arc_forward ? make_arc(a, b, n_) : make_arc(b, a, n_);
                arc_forward = false;
            }
            else {
                e = make_edge(a, b, c, n_);
            }
            if (! used_[static_cast<std::size_t>(orbit(e))])
                out.push_back(e);
        }
        shuffle(out);
        return out;
    }

    bool compatible(const Edge & a, const Edge & b, Vertex x) const
    {
        return kind_ == StarterKind::One || allowed_pair(a, b, x);
    }

    // Opens the next cycle of the current factor, or moves to the next factor.
    bool next_cycle()
    {
        tick();
        Slot & s = slots_[slot_];
        auto start = std::find(s.covered.begin(), s.covered.end(), 0);
        if (start == s.covered.end()) {
            if (slot_ + 1 == slots_.size())
                return true;
            ++slot_;
            if (next_cycle())
                return true;
            --slot_;
            return false;
        }
        Vertex x = static_cast<Vertex>(start - s.covered.begin());
        std::vector<int> lengths;
        for (int m = n_; m >= 2; --m)
            if (s.remaining[static_cast<std::size_t>(m)] > 0)
                lengths.push_back(m);
        if (s.rotation_free && s.cycles.empty())
            lengths.resize(1);
        for (int m : lengths) {
            --s.remaining[static_cast<std::size_t>(m)];
            s.covered[static_cast<std::size_t>(x)] = 1;
            target_ = m;
            path_ = {x};
            edges_.clear();
            if (extend())
                return true;
            s.covered[static_cast<std::size_t>(x)] = 0;
            ++s.remaining[static_cast<std::size_t>(m)];
        }
        return false;
    }

    bool extend()
    {
        tick();
        Slot & s = slots_[slot_];
        std::size_t k = path_.size();
        auto length = static_cast<std::size_t>(target_);
        Vertex last = path_.back();
        if (k == length)
            return close();

        std::vector<Vertex> next;
        for (Vertex w = 0; w < n_; ++w) {
            if (s.covered[static_cast<std::size_t>(w)])
                continue;
            if (length >= 3 && k == length - 1 && w < path_[1])
                continue;
            next.push_back(w);
        }
        shuffle(next);
        for (Vertex w : next) {
            for (const Edge & e : candidates(last, w)) {
                if (! edges_.empty() && ! compatible(edges_.back(), e, last))
                    continue;
                int id = orbit(e);
                used_[static_cast<std::size_t>(id)] = 1;
                s.covered[static_cast<std::size_t>(w)] = 1;
                path_.push_back(w);
                edges_.push_back(e);
                if (extend())
                    return true;
                edges_.pop_back();
                path_.pop_back();
                s.covered[static_cast<std::size_t>(w)] = 0;
                used_[static_cast<std::size_t>(id)] = 0;
            }
        }
        return false;
    }

    bool close()
    {
        Slot & s = slots_[slot_];
        Vertex first = path_.front();
        Vertex last = path_.back();
        for (const Edge & e : candidates(last, first)) {
            if (path_.size() == 2 && ! (edges_.front() < e))
                continue;
            if (! compatible(edges_.back(), e, last) || ! compatible(e, edges_.front(), first))
                continue;
            if (kind_ == StarterKind::One && path_.size() >= 3) {
                auto pink = std::count_if(edges_.begin(), edges_.end(),
                                          [](const Edge & x) { return x.colour == Colour::Pink; });
                if ((pink + (e.colour == Colour::Pink ? 1 : 0)) % 2 != 0)
                    continue;
            }
            int id = orbit(e);
            used_[static_cast<std::size_t>(id)] = 1;
            Cycle c{path_, edges_};
            c.edges.push_back(e);
            s.cycles.push_back(c);
            std::vector<Vertex> saved_path = path_;
            std::vector<Edge> saved_edges = edges_;
            int saved_target = target_;
            if (next_cycle())
                return true;
            path_ = std::move(saved_path);
            edges_ = std::move(saved_edges);
            target_ = saved_target;
            s.cycles.pop_back();
            used_[static_cast<std::size_t>(id)] = 0;
        }
        return false;
    }

    StarterRecord record() const
    {
        std::vector<TwoFactor> factors;
        for (const Slot & s : slots_)
            factors.push_back(TwoFactor{n_, s.cycles});
        if (kind_ == StarterKind::Three)
            std::swap(factors[0], factors[1]);
        return make_record(kind_, factors);
    }

    int n_;
    StarterKind kind_;
    SearchBudget budget_;
    const OrbitIndex & index_;
    std::vector<char> used_;
    std::mt19937_64 rng_;
    std::vector<Colour> colours_;
    std::vector<Slot> slots_;
    std::size_t slot_ = 0;
    int target_ = 0;
    std::vector<Vertex> path_;
    std::vector<Edge> edges_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

void validate(int n, const std::vector<int> & type, StarterKind kind)
{
    if (n < min_order)
        throw ArgumentError("order n=" + std::to_string(n) + " is below " + std::to_string(min_order));
    if (std::accumulate(type.begin(), type.end(), 0) != n)
        throw ArgumentError("type " + format_type(type) + " does not sum to " + std::to_string(n));
    if (std::any_of(type.begin(), type.end(), [](int m) { return m < 2; }))
        throw ArgumentError("type " + format_type(type) + " has a part below 2");
    bool even = n % 2 == 0;
    if (kind == StarterKind::Three && even)
        throw ArgumentError("three-starter search needs odd n");
    if (kind != StarterKind::Three && ! even)
        throw ArgumentError(std::string(kind_name(kind)) + "-starter search needs even n");
    if (kind == StarterKind::Three && std::find(type.begin(), type.end(), 2) == type.end())
        throw ArgumentError("three-starter search needs a 2-cycle in the type");
}

} // namespace

SearchOutcome search_starter(int n, const std::vector<int> & cycle_type, StarterKind kind,
                             const SearchBudget & budget)
{
    validate(n, cycle_type, kind);
    if (budget.max_nodes == 0 || budget.max_seconds <= 0)
        throw ArgumentError("search budget must be positive");
    SearchOutcome out = Searcher(n, sorted_descending(cycle_type), kind, budget).run();
    if (out.record) {
        RecordCheck check = check_record(*out.record);
        if (! check.report.ok())
            throw StructureError("search produced a starter that fails verification:\n" + check.report.text());
    }
    return out;
}

std::map<std::vector<int>, SearchOutcome> search_all(int n, const SearchBudget & budget,
                                                     const DispatchTable * table)
{
    struct Job {
        std::vector<int> type;
        std::vector<StarterKind> kinds;
        SearchOutcome outcome;
    };
    std::vector<Job> jobs;
    for (const auto & type : cycle_types(n)) {
        if (classify(type).covered())
            continue;
        Job job{type, {}, {}};
        if (n % 2 != 0)
            job.kinds = {StarterKind::Three};
        else if (const DispatchEntry * e = table ? table->find(n, type) : nullptr; e && e->starter_kind())
            job.kinds = {*e->starter_kind()};
        else
            job.kinds = {StarterKind::One, StarterKind::Two};
        jobs.push_back(std::move(job));
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            Job & job = jobs[i];
            for (StarterKind k : job.kinds) {
                job.outcome = search_starter(n, job.type, k, budget);
                if (job.outcome.status == SearchStatus::Found)
                    break;
            }
        }
    };
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, jobs.size());
    std::vector<std::future<void>> pool;
    for (std::size_t i = 0; i < threads; ++i)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto & f : pool)
        f.get();

    std::map<std::vector<int>, SearchOutcome> out;
    for (Job & job : jobs)
        out.emplace(std::move(job.type), std::move(job.outcome));
    return out;
}

} // namespace hop
