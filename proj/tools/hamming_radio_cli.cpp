// hamming-radio: verify, bound, search and generate consecutive radio labelings
// of Hamming graphs.
//
// Exit codes: 0 ok, 1 negative result (violations / proven unsatisfiable),
// 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamming_radio/hamming_radio.hpp"

namespace hr = hamming_radio;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hr::Error(hr::Errc::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw hr::Error(hr::Errc::ParseError, "cannot write " + path);
    out << text;
}

std::string render_document(const hr::OrderingDocument &doc, const std::string &format)
{
    if (format == "json")
        return hr::to_json(doc).dump(2) + "\n";
    return hr::serialize_text(doc);
}

unsigned thread_cap()
{
    if (const char *env = std::getenv("HAMMING_RADIO_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception &) {
        }
    }
    return 1;
}

struct VerifyOptions {
    std::string path;
    bool boundary = false;
    bool labeling = false;
    std::string format = "text";
};

int cmd_verify(const VerifyOptions &opt)
{
    const auto doc = hr::parse_document(read_file(opt.path));
    const auto ordering = doc.to_ordering();
    const auto reports = hr::check_ordering(ordering);
    std::vector<hr::ViolationReport> boundary;
    if (opt.boundary)
        boundary = hr::boundary_structure_check(ordering);
    const bool ok = reports.empty() && boundary.empty();

    std::optional<std::vector<std::int64_t>> labels;
    if (opt.labeling && std::none_of(reports.begin(), reports.end(),
                                     [](const auto &r) { return r.template is<hr::Repetition>(); }))
        labels = hr::induced_labels(ordering);

    if (opt.format == "json") {
        json out{{"spec", doc.spec.to_string()}, {"rows", ordering.size()}, {"ok", ok}};
        out["violations"] = json::array();
        for (const auto &r : reports)
            out["violations"].push_back(hr::to_json(r));
        if (opt.boundary) {
            out["boundary"] = json::array();
            for (const auto &r : boundary)
                out["boundary"].push_back(hr::to_json(r));
        }
        if (labels)
            out["labels"] = *labels;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "spec: " << doc.spec.to_string() << "\n";
        std::cout << "rows: " << ordering.size() << "\n";
        std::cout << "radio condition: " << (reports.empty() ? "ok" : std::to_string(reports.size()) + " violations")
                  << "\n";
        for (const auto &r : reports)
            std::cout << "  " << hr::kind_name(r.kind) << ": " << r.detail << "\n";
        if (opt.boundary) {
            std::cout << "boundary structure: "
                      << (boundary.empty() ? "ok" : std::to_string(boundary.size()) + " violations") << "\n";
            for (const auto &r : boundary)
                std::cout << "  " << hr::kind_name(r.kind) << ": " << r.detail << "\n";
        }
        if (labels) {
            std::cout << "labeling:\n";
            for (std::size_t i = 0; i < ordering.size(); ++i)
                std::cout << "  " << ordering[i].to_string() << " -> " << (*labels)[i] << "\n";
        }
    }
    return ok ? kOk : kNegative;
}

struct BoundOptions {
    std::string spec;
    int segment_depth = 0;
    std::uint64_t node_budget = 200'000'000;
    std::string format = "text";
};

int cmd_bound(const BoundOptions &opt)
{
    const auto spec = hr::parse_spec(opt.spec);
    const auto verdict = hr::bound_verdict(spec);
    std::optional<hr::SegmentResult> segment;
    if (opt.segment_depth > 0) {
        hr::SegmentSearchOptions so;
        so.node_budget = opt.node_budget;
        so.threads = thread_cap();
        segment = hr::segment_extension_search(spec, opt.segment_depth, so);
    }

    if (opt.format == "json") {
        json out{{"spec", spec.to_string()}, {"verdict", hr::to_string(verdict.overall)}};
        out["factors"] = json::array();
        for (const auto &f : verdict.factors)
            out["factors"].push_back({{"n", f.factor.n},
                                      {"t", f.factor.t},
                                      {"prefix_t", f.prefix_t},
                                      {"threshold", f.threshold},
                                      {"ruled_out", f.ruled_out}});
        if (segment) {
            out["segment"] = {{"depth", opt.segment_depth},
                              {"verdict", segment->extensible() ? "Extensible" : "Dead"},
                              {"nodes", segment->nodes}};
            if (!segment->extensible())
                out["segment"]["dead_depth"] = segment->dead_depth;
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    std::cout << "spec: " << spec.to_string() << "\n";
    for (const auto &f : verdict.factors)
        std::cout << "  K_" << f.factor.n << "^" << f.factor.t << ": prefix t = " << f.prefix_t
                  << ", threshold 1 + n(n^2-1)/6 = " << f.threshold << (f.ruled_out ? "  (ruled out)" : "") << "\n";
    std::cout << "verdict: " << hr::to_string(verdict.overall);
    if (verdict.overall == hr::Gracefulness::KnownGracefulByCitation)
        std::cout << " (known construction for t <= n)";
    std::cout << "\n";
    if (segment) {
        std::cout << "segment search (depth " << opt.segment_depth << "): ";
        if (segment->extensible()) {
            std::cout << "Extensible\n";
            for (const auto &row : segment->witness)
                std::cout << "  " << row.to_string() << "\n";
        } else {
            std::cout << "Dead(" << segment->dead_depth << ")\n";
        }
        std::cout << "nodes: " << segment->nodes << "\n";
    }
    return kOk;
}

struct SearchOptions {
    std::string spec;
    std::string out;
    bool reduced_k34 = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t node_budget = 100'000'000;
    double time_budget = 60.0;
    bool no_symmetry = false;
    bool randomized = false;
    std::string format = "text";
};

int cmd_search(const SearchOptions &opt)
{
    hr::SearchConfig cfg;
    cfg.node_budget = opt.node_budget;
    cfg.time_budget = std::chrono::duration<double>(opt.time_budget);
    cfg.seed = opt.seed;
    cfg.symmetry_fixing = !opt.no_symmetry;
    if (opt.randomized) {
        cfg.value_order = hr::Heuristic::Randomized;
        if (!cfg.seed)
            cfg.seed = 0;
    }

    hr::SearchOutcome outcome;
    if (opt.reduced_k34) {
        if (!opt.spec.empty() && !(hr::parse_spec(opt.spec) == hr::make_graph_spec({{3, 4}})))
            throw hr::Error(hr::Errc::ParseError, "--reduced-k34 only applies to 3^4");
        outcome = hr::search_k34_reduced(cfg);
    } else {
        if (opt.spec.empty())
            throw hr::Error(hr::Errc::ParseError, "search needs a graph spec");
        outcome = hr::search_ordering(hr::parse_spec(opt.spec), cfg);
    }

    std::cerr << "status: " << hr::to_string(outcome.status) << ", nodes: " << outcome.nodes_explored
              << ", max depth: " << outcome.max_depth_reached << "\n";
    switch (outcome.status) {
    case hr::SearchStatus::Found: {
        std::map<std::string, std::string> meta{{"source", opt.reduced_k34 ? "search --reduced-k34" : "search"}};
        write_output(opt.out, render_document(hr::OrderingDocument::from_ordering(*outcome.ordering, meta), opt.format));
        return kOk;
    }
    case hr::SearchStatus::ExhaustedNoSolution:
        std::cerr << "no ordering induces a consecutive radio labeling"
                  << (cfg.symmetry_fixing ? " (exhaustive up to column relabeling)" : "") << "\n";
        return kNegative;
    case hr::SearchStatus::BudgetExceeded:
        return kBudget;
    }
    return kInputError;
}

struct GenerateOptions {
    std::string kind;
    std::string spec;
    std::string path;
    std::string out;
    std::string format = "text";
};

int cmd_generate(const GenerateOptions &opt)
{
    const auto kind = hr::parse_generator_kind(opt.kind);
    if (!kind)
        throw hr::Error(hr::Errc::ParseError, "unknown generator kind '" + opt.kind +
                                                  "' (transposition, lru, ltu, history)");
    const auto spec = hr::parse_spec(opt.spec);
    auto doc = hr::parse_instruction_text(read_file(opt.path), *kind);
    if (!(doc.spec == spec))
        throw hr::Error(hr::Errc::ParseError, "instruction file is for " + doc.spec.to_string() + ", not " +
                                                  spec.to_string());
    const hr::OrderGenerator og(spec, hr::column_generators(spec, *kind), std::move(doc.rows));
    const auto ordering = og.materialize();
    const auto reports = hr::check_order_generator(og);
    const bool agrees = reports.empty() == hr::check_ordering(ordering).empty();

    write_output(opt.out, render_document(hr::OrderingDocument::from_ordering(ordering, {{"generator", opt.kind}}),
                                          opt.format));
    auto &report_stream = (opt.out.empty() || opt.out == "-") ? std::cerr : std::cout;
    report_stream << "order-generator check: "
                  << (reports.empty() ? "ok" : std::to_string(reports.size()) + " violations") << "\n";
    for (const auto &r : reports)
        report_stream << "  " << hr::kind_name(r.kind) << ": " << r.detail << "\n";
    report_stream << "ordering check agrees: " << (agrees ? "yes" : "NO") << "\n";
    return reports.empty() ? kOk : kNegative;
}

struct LambdaOptions {
    std::string kind;
    int n = 3;
    int s = 2;
    std::string history = "id";
};

int cmd_lambda(const LambdaOptions &opt)
{
    const auto kind = hr::parse_generator_kind(opt.kind);
    if (!kind)
        throw hr::Error(hr::Errc::ParseError, "unknown generator kind '" + opt.kind + "'");
    const auto gen = hr::builtin_generator(*kind, opt.n);

    std::vector<hr::Permutation> history;
    std::stringstream ss(opt.history);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto trimmed = std::string(hr::detail::trim(token));
        if (history.empty()) {
            if (trimmed != "id")
                throw hr::Error(hr::Errc::ParseError, "history must start with id");
            history.push_back(hr::Permutation::identity(opt.n));
            continue;
        }
        if (trimmed.size() < 2 || trimmed[0] != 'f')
            throw hr::Error(hr::Errc::ParseError, "history entries after id are fK");
        const int k = hr::detail::parse_int(std::string_view(trimmed).substr(1), "subscript");
        history.push_back(gen.at(history.size() + 1, history).f(k));
    }
    const auto runs = hr::enumerate_lambda(gen, opt.s, history.size() + 1, history);
    std::cout << "Lambda_" << opt.s << " at position " << history.size() + 1 << " (" << runs.size() << " runs)\n";
    for (const auto &run : runs) {
        std::cout << "  " << run.to_string() << "  =";
        for (const auto &p : run.steps)
            std::cout << " " << p.to_cycle_string();
        std::cout << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Consecutive radio labelings of Hamming graphs"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check an ordering document against the radio condition");
    verify_cmd->add_option("path", verify.path, "Ordering document (text or JSON)")->required();
    verify_cmd->add_flag("--boundary", verify.boundary, "Also check the boundary structure (t = n(n^2-1)/6)");
    verify_cmd->add_flag("--labeling", verify.labeling, "Print the induced labeling");
    verify_cmd->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    BoundOptions bound;
    auto *bound_cmd = app.add_subcommand("bound", "Report the gracefulness bound for a Hamming graph");
    bound_cmd->add_option("spec", bound.spec, "Graph, e.g. 3^4x4^7")->required();
    bound_cmd->add_option("--segment-depth", bound.segment_depth, "Also run the segment extension search");
    bound_cmd->add_option("--node-budget", bound.node_budget, "Node budget for the segment search");
    bound_cmd->add_option("--format", bound.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    SearchOptions search;
    auto *search_cmd = app.add_subcommand("search", "Search for an ordering inducing a consecutive radio labeling");
    search_cmd->add_option("spec", search.spec, "Graph, e.g. 3^2");
    search_cmd->add_option("--out", search.out, "Write the ordering here (default stdout)");
    search_cmd->add_flag("--reduced-k34", search.reduced_k34, "Use the reduced K_3^4 instruction search");
    search_cmd->add_option("--seed", search.seed, "Seed for randomized value order");
    search_cmd->add_flag("--randomized", search.randomized, "Randomize the candidate order");
    search_cmd->add_option("--node-budget", search.node_budget, "Maximum rows placed");
    search_cmd->add_option("--time-budget", search.time_budget, "Seconds");
    search_cmd->add_flag("--no-symmetry", search.no_symmetry, "Do not fix the first two rows");
    search_cmd->add_option("--format", search.format, "Document format")->check(CLI::IsMember({"text", "json"}));

    GenerateOptions generate;
    auto *generate_cmd = app.add_subcommand("generate", "Materialize an order-generator into an ordering");
    generate_cmd->add_option("kind", generate.kind, "transposition | lru | ltu | history")->required();
    generate_cmd->add_option("spec", generate.spec, "Graph, e.g. 3^2")->required();
    generate_cmd->add_option("instructions", generate.path, "Instruction file")->required();
    generate_cmd->add_option("--out", generate.out, "Write the ordering here (default stdout)");
    generate_cmd->add_option("--format", generate.format, "Document format")->check(CLI::IsMember({"text", "json"}));

    LambdaOptions lambda;
    auto *lambda_cmd = app.add_subcommand("lambda", "List the runs of s instructions whose product fixes 1");
    lambda_cmd->add_option("kind", lambda.kind, "transposition | lru | ltu | history")->required();
    lambda_cmd->add_option("n", lambda.n, "Alphabet size")->required();
    lambda_cmd->add_option("s", lambda.s, "Run length")->required();
    lambda_cmd->add_option("--history", lambda.history, "Earlier instructions, e.g. id,f2,f3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*verify_cmd)
            return cmd_verify(verify);
        if (*bound_cmd)
            return cmd_bound(bound);
        if (*search_cmd)
            return cmd_search(search);
        if (*generate_cmd)
            return cmd_generate(generate);
        if (*lambda_cmd)
            return cmd_lambda(lambda);
    } catch (const hr::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == hr::Errc::TooLarge || e.code() == hr::Errc::BudgetExceeded)
            return kBudget;
        return kInputError;
    }
    return kInputError;
}
