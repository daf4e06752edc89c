#pragma once

#include <acp/graph.hpp>
#include <acp/solver.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace acp
{
    enum class EtaSource
    {
        formula, // bounds pinched, no search
        solver
    };

    enum class ChiSource
    {
        exact,
        dsatur_only
    };

    enum class ConjectureStatus
    {
        holds,
        violation,
        budget_exceeded,
        parse_error
    };

    auto name_of(EtaSource s) -> const char *;
    auto name_of(ChiSource s) -> const char *;
    auto name_of(ConjectureStatus s) -> const char *;

    struct GraphEta
    {
        SolveStatus status = SolveStatus::solved;
        int value = 0;
        std::optional<Labeling> certificate; // over the whole graph; absent on pinched bounds with k > 1
        EtaSource source = EtaSource::formula;
        SolveStats stats;
    };

    /// Exact eta as the max over connected components. A component whose bounds meet is not
    /// searched; its certificate is the constant labeling when eta = 1 and otherwise absent,
    /// unless want_certificate asks for a search at k = eta.
    auto solve_eta(const Graph & g, const EtaSearchOptions & options = {}, bool want_certificate = false) -> GraphEta;

    struct SweepOptions
    {
        int max_n = 0; // 0: no limit
        int workers = 1;
        std::uint64_t node_budget = 10'000'000;
        int chromatic_max_order = 16;
        int audit_per_mille = 10; // share of formula short-circuits re-solved from lb = 1
    };

    struct SweepRecord
    {
        std::size_t line_number = 0;
        std::string line;
        ConjectureStatus status = ConjectureStatus::holds;
        std::string error;
        int n = 0;
        int m = 0;
        int eta = 0;
        int chi = 0;
        EtaSource eta_source = EtaSource::solver;
        ChiSource chi_source = ChiSource::exact;
        bool eta_solved = false;
        bool audited = false;
        bool audit_failed = false;
        std::optional<Labeling> eta_certificate;
        std::optional<Coloring> chi_certificate;
    };

    struct SweepSummary
    {
        std::size_t records = 0;
        std::size_t holds = 0;
        std::size_t violations = 0;
        std::size_t budget_exceeded = 0;
        std::size_t parse_errors = 0;
        std::size_t skipped = 0;
        std::size_t eta_from_formula = 0;
        std::size_t audited = 0;
        std::size_t audit_failures = 0;
        std::map<int, std::size_t> graphs_per_n;
        std::optional<int> max_gap; // max eta - chi over records with both values exact
        std::vector<std::size_t> budget_exceeded_lines;
        std::chrono::duration<double> elapsed{0};

        /// Everything except elapsed.
        auto same_aggregates(const SweepSummary & other) const -> bool;
    };

    /// Evaluates one graph; line and line_number are copied into the record.
    auto evaluate_graph(const Graph & g, const SweepOptions & options, std::string line = {}, std::size_t line_number = 0) -> SweepRecord;

    /// Deterministic audit selection from the graph6 text.
    auto selected_for_audit(std::string_view line, int per_mille) -> bool;

    /// "graph6=... n=... m=... eta=... chi=... eta_source=... chi_source=... status=...",
    /// with both certificates appended on violations.
    auto format_record(const SweepRecord & record) -> std::string;
    auto format_summary(const SweepSummary & summary) -> std::string;

    /// Streams graph6 lines from in, evaluating batches on options.workers threads. on_record sees
    /// records in input order; graphs above max_n are counted as skipped and not reported.
    auto run_sweep(std::istream & in, const SweepOptions & options, const std::function<void(const SweepRecord &)> & on_record)
        -> SweepSummary;
}
