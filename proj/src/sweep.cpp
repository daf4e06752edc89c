#include <acp/bounds.hpp>
#include <acp/error.hpp>
#include <acp/graph6.hpp>
#include <acp/sweep.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <istream>
#include <sstream>
#include <thread>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace acp
{
    auto name_of(EtaSource s) -> const char *
    {
        return s == EtaSource::formula ? "formula" : "solver";
    }

    auto name_of(ChiSource s) -> const char *
    {
        return s == ChiSource::exact ? "exact" : "dsatur-only";
    }

    auto name_of(ConjectureStatus s) -> const char *
    {
        switch (s) {
            case ConjectureStatus::holds: return "holds";
            case ConjectureStatus::violation: return "VIOLATION";
            case ConjectureStatus::budget_exceeded: return "budget-exceeded";
            case ConjectureStatus::parse_error: return "parse-error";
        }
        return "?";
    }

    auto solve_eta(const Graph & g, const EtaSearchOptions & options, bool want_certificate) -> GraphEta
    {
        GraphEta result;
        vector<int> labels(static_cast<size_t>(g.order()), 1);
        bool complete_certificate = true;
        for (auto & component : connected_components(g)) {
            auto sub = induced_subgraph(g, component);
            auto bounds = combined_bounds(sub);
            std::optional<Labeling> local;
            int value;
            if (bounds.eta_lower == bounds.eta_upper) {
                value = bounds.eta_lower;
                if (value == 1)
                    local = Labeling(vector<int>(component.size(), 1));
                else if (want_certificate) {
                    auto r = eta_exact(sub, value, value, options);
                    result.stats.nodes += r.stats.nodes;
                    result.stats.elapsed += r.stats.elapsed;
                    if (r.status != SolveStatus::solved)
                        throw std::logic_error("bounds pinched eta at " + to_string(value) + " but the search disagrees: " + name_of(r.status));
                    local = std::move(r.certificate);
                }
            }
            else {
                result.source = EtaSource::solver;
                auto r = eta_exact(sub, bounds.eta_lower, bounds.eta_upper, options);
                result.stats.nodes += r.stats.nodes;
                result.stats.elapsed += r.stats.elapsed;
                if (r.status != SolveStatus::solved) {
                    result.status = r.status;
                    result.certificate.reset();
                    return result;
                }
                value = r.value;
                local = std::move(r.certificate);
            }
            result.value = std::max(result.value, value);
            if (local)
                for (size_t i = 0; i < component.size(); ++i)
                    labels[component[i]] = (*local)[static_cast<Vertex>(i)];
            else
                complete_certificate = false;
        }
        if (complete_certificate)
            result.certificate = Labeling(std::move(labels));
        return result;
    }

    auto selected_for_audit(std::string_view line, int per_mille) -> bool
    {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char c : line) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return static_cast<int>(h % 1000) < per_mille;
    }

    auto evaluate_graph(const Graph & g, const SweepOptions & options, string line, size_t line_number) -> SweepRecord
    {
        SweepRecord record;
        record.line_number = line_number;
        record.line = std::move(line);
        record.n = g.order();
        record.m = g.size();

        EtaSearchOptions search;
        search.node_budget = options.node_budget;
        auto eta = solve_eta(g, search);
        record.eta_source = eta.source;
        record.eta_solved = eta.status == SolveStatus::solved;
        record.eta = eta.value;
        record.eta_certificate = eta.certificate;

        if (g.order() <= options.chromatic_max_order) {
            auto chi = chromatic_exact(g, ChromaticOptions{options.chromatic_max_order});
            record.chi = chi.value;
            record.chi_certificate = chi.certificate;
        }
        else {
            auto colouring = dsatur(g);
            record.chi = colouring.colours;
            record.chi_source = ChiSource::dsatur_only;
            record.chi_certificate = colouring;
        }

        if (! record.eta_solved || record.chi_source != ChiSource::exact) {
            record.status = ConjectureStatus::budget_exceeded;
            return record;
        }

        if (record.eta_source == EtaSource::formula && selected_for_audit(record.line, options.audit_per_mille)) {
            record.audited = true;
            for (auto & component : connected_components(g)) {
                auto sub = induced_subgraph(g, component);
                auto r = eta_exact(sub, 1, record.eta, search);
                if (r.status == SolveStatus::budget_exceeded)
                    continue;
                auto expected = combined_bounds(sub).eta_lower;
                if (r.status != SolveStatus::solved || r.value != expected)
                    record.audit_failed = true;
            }
        }

        if (record.eta > record.chi) {
            record.status = ConjectureStatus::violation;
            if (! record.eta_certificate) {
                auto full = solve_eta(g, search, true);
                record.eta_certificate = full.certificate;
            }
        }
        return record;
    }

    namespace
    {
        auto csv(std::span<const int> values) -> string
        {
            string out;
            for (size_t i = 0; i < values.size(); ++i)
                out += (i ? "," : "") + to_string(values[i]);
            return out;
        }
    }

    auto format_record(const SweepRecord & r) -> string
    {
        if (r.status == ConjectureStatus::parse_error)
            return "line=" + to_string(r.line_number) + " status=parse-error error=\"" + r.error + "\"";
        string out = "graph6=" + r.line + " n=" + to_string(r.n) + " m=" + to_string(r.m);
        out += " eta=" + (r.eta_solved ? to_string(r.eta) : string("?"));
        out += " chi=" + to_string(r.chi);
        out += string(" eta_source=") + name_of(r.eta_source) + " chi_source=" + name_of(r.chi_source);
        out += string(" status=") + name_of(r.status);
        if (r.audited)
            out += r.audit_failed ? " audit=MISMATCH" : " audit=ok";
        if (r.status == ConjectureStatus::violation) {
            if (r.eta_certificate)
                out += " eta_labeling=" + csv(r.eta_certificate->values());
            if (r.chi_certificate)
                out += " chi_colouring=" + csv(r.chi_certificate->colour);
        }
        return out;
    }

    auto SweepSummary::same_aggregates(const SweepSummary & o) const -> bool
    {
        return records == o.records && holds == o.holds && violations == o.violations && budget_exceeded == o.budget_exceeded
            && parse_errors == o.parse_errors && skipped == o.skipped && eta_from_formula == o.eta_from_formula && audited == o.audited
            && audit_failures == o.audit_failures && graphs_per_n == o.graphs_per_n && max_gap == o.max_gap
            && budget_exceeded_lines == o.budget_exceeded_lines;
    }

    auto format_summary(const SweepSummary & s) -> string
    {
        std::ostringstream out;
        out << "# summary\n";
        out << "records=" << s.records << " holds=" << s.holds << " violations=" << s.violations << " budget_exceeded=" << s.budget_exceeded
            << " parse_errors=" << s.parse_errors << " skipped=" << s.skipped << "\n";
        for (auto [n, count] : s.graphs_per_n)
            out << "n=" << n << " graphs=" << count << "\n";
        out << "max_gap=" << (s.max_gap ? to_string(*s.max_gap) : string("none")) << "\n";
        out << "eta_formula=" << s.eta_from_formula << " eta_solver=" << (s.records - s.parse_errors - s.eta_from_formula) << "\n";
        out << "audited=" << s.audited << " audit_failures=" << s.audit_failures << "\n";
        if (! s.budget_exceeded_lines.empty()) {
            out << "budget_exceeded_lines=";
            for (size_t i = 0; i < s.budget_exceeded_lines.size(); ++i)
                out << (i ? "," : "") << s.budget_exceeded_lines[i];
            out << "\n";
        }
        out << "runtime_s=" << s.elapsed.count() << "\n";
        return out.str();
    }

    namespace
    {
        struct Job
        {
            size_t line_number;
            string line;
            std::optional<SweepRecord> record; // empty when skipped
        };

        auto process(Job & job, const SweepOptions & options) -> void
        {
            Graph g(0);
            try {
                g = parse_graph6(job.line);
            }
            catch (const std::exception & e) {
                SweepRecord r;
                r.line_number = job.line_number;
                r.line = job.line;
                r.status = ConjectureStatus::parse_error;
                r.error = e.what();
                job.record = std::move(r);
                return;
            }
            if (options.max_n > 0 && g.order() > options.max_n)
                return;
            job.record = evaluate_graph(g, options, job.line, job.line_number);
        }

        auto tally(SweepSummary & s, const SweepRecord & r) -> void
        {
            ++s.records;
            switch (r.status) {
                case ConjectureStatus::holds: ++s.holds; break;
                case ConjectureStatus::violation: ++s.violations; break;
                case ConjectureStatus::budget_exceeded:
                    ++s.budget_exceeded;
                    s.budget_exceeded_lines.push_back(r.line_number);
                    break;
                case ConjectureStatus::parse_error: ++s.parse_errors; return;
            }
            ++s.graphs_per_n[r.n];
            if (r.eta_source == EtaSource::formula && r.eta_solved)
                ++s.eta_from_formula;
            if (r.audited)
                ++s.audited;
            if (r.audit_failed)
                ++s.audit_failures;
            if (r.status == ConjectureStatus::holds || r.status == ConjectureStatus::violation)
                s.max_gap = std::max(s.max_gap.value_or(r.eta - r.chi), r.eta - r.chi);
        }
    }

    auto run_sweep(std::istream & in, const SweepOptions & options, const std::function<void(const SweepRecord &)> & on_record) -> SweepSummary
    {
        if (options.workers < 1)
            throw InputError("need at least one worker, got " + to_string(options.workers));
        auto start = std::chrono::steady_clock::now();
        SweepSummary summary;
        const size_t batch_size = 256 * static_cast<size_t>(options.workers);
        size_t line_number = 0;
        string line;
        bool more = true;
        while (more) {
            vector<Job> batch;
            while (batch.size() < batch_size && (more = static_cast<bool>(std::getline(in, line)))) {
                ++line_number;
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty())
                    continue;
                batch.push_back({line_number, line, std::nullopt});
            }
            if (batch.empty())
                break;

            std::atomic<size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_lock;
            auto work = [&] {
                for (size_t i; (i = next++) < batch.size();) {
                    try {
                        process(batch[i], options);
                    }
                    catch (...) {
                        std::lock_guard guard(failure_lock);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            };
            if (options.workers == 1)
                work();
            else {
                vector<std::jthread> threads;
                for (int w = 0; w < options.workers; ++w)
                    threads.emplace_back(work);
            }
            if (failure)
                std::rethrow_exception(failure);

            for (auto & job : batch) {
                if (! job.record) {
                    ++summary.skipped;
                    continue;
                }
                tally(summary, *job.record);
                on_record(*job.record);
            }
        }
        summary.elapsed = std::chrono::steady_clock::now() - start;
        return summary;
    }
}
