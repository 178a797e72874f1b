#include "kercok/gendoc.hpp"
#include "kercok/suites.hpp"
#include "kercok/tasks.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

using namespace kercok;

namespace {

const std::vector<std::string> verify_ops = {"six-term", "triple-braid", "square-braid", "snake",   "hexagon",
                                             "quartic",  "quadratic",    "couple",       "index",   "herbrand"};

struct Options {
    std::string op, doc_path, oracle = "auto", ring, kind, suite = "all", quiver = "A3";
    long long max_order = 1024, cases = 100, count = 1;
    std::uint64_t seed = 0;
    int pages = 1, n = 3;
    std::uint32_t field = 2;
    bool timing = false, sweep = false;
};

Json load_with_ring(const Options& o)
{
    Json doc = read_json_file(o.doc_path);
    if (!doc.is_object())
        throw InputError("document must be a JSON object");
    if (!o.ring.empty())
        doc["ring"] = o.ring;
    return doc;
}

RunOptions run_options(const Options& o)
{
    if (o.max_order < 1)
        throw InputError("--max-order must be positive");
    return {parse_oracle_mode(o.oracle), o.max_order};
}

std::optional<RingTag> ring_option(const Options& o)
{
    if (o.ring.empty())
        return std::nullopt;
    try {
        return RingTag::parse(o.ring);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json suites_report(const std::string& command, const std::vector<SuiteResult>& results)
{
    Json report = new_report(command);
    Json suites = Json::array();
    bool pass = true;
    for (const auto& r : results) {
        suites.push_back(suite_to_json(r));
        report["checks"].push_back({{"name", r.name}, {"ok", r.ok()}});
        pass = pass && r.ok();
    }
    report["suites"] = suites;
    finish_report(report, pass);
    return report;
}

Quiver named_quiver(const std::string& name)
{
    if (name.size() >= 2 && name[0] == 'A') {
        try {
            const int n = std::stoi(name.substr(1));
            if (n >= 1 && n <= 8)
                return linear_quiver(n);
        } catch (const std::exception&) {
        }
    }
    throw InputError("--quiver must be A1 … A8");
}

Json dispatch(const std::string& command, const Options& o)
{
    if (command == "verify")
        return run_verify(o.op, load_with_ring(o), run_options(o));
    if (command == "index" || command == "herbrand")
        return run_verify(command, load_with_ring(o), run_options(o));
    if (command == "spectral")
        return run_spectral(load_with_ring(o), o.pages);
    if (command == "harada-sai") {
        if (!o.doc_path.empty())
            return run_harada_document(read_json_file(o.doc_path));
        if (o.sweep)
            return suites_report(command, {harada_a2_sweep()});
        PrimeField field;
        try {
            field = PrimeField(o.field);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (o.cases < 0)
            throw InputError("--cases must be non-negative");
        return suites_report(command, {harada_random_chains(named_quiver(o.quiver), field, o.n, o.cases, o.seed)});
    }
    if (command == "gen") {
        GenConfig cfg;
        cfg.seed = o.seed;
        cfg.ring = ring_option(o).value_or(RingTag{RingKind::Integers, 0});
        if (o.count < 1)
            throw InputError("--count must be positive");
        if (o.count == 1)
            return gen_document(o.kind, cfg);
        Json out = Json::array();
        for (auto& d : gen_documents(o.kind, cfg, static_cast<int>(o.count)))
            out.push_back(std::move(d));
        return out;
    }
    if (command == "property-run") {
        std::vector<SuiteResult> results;
        const auto ring = ring_option(o);
        if (o.suite == "all") {
            for (const auto& name : suite_names())
                results.push_back(run_suite(name, o.cases, o.seed, ring));
        } else {
            results.push_back(run_suite(o.suite, o.cases, o.seed, ring));
        }
        Json report = suites_report(command, results);
        report["seed"] = o.seed;
        report["cases"] = o.cases;
        return report;
    }
    throw InputError("no subcommand");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of kernel-cokernel sequences and their relatives"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--ring", o.ring, "ring tag: INT, RAT or FP(p); overrides the document ring");
    app.add_option("--oracle", o.oracle, "element-enumeration cross-check: on, off or auto")
        ->check(CLI::IsMember({"on", "off", "auto"}));
    app.add_option("--max-order", o.max_order, "largest object order the oracle enumerates");
    app.add_flag("--timing", o.timing, "add wall-clock milliseconds to the report");

    auto* verify = app.add_subcommand("verify", "verify one diagram document");
    verify->add_option("op", o.op, "operation")->required()->check(CLI::IsMember(verify_ops));
    verify->add_option("document", o.doc_path, "diagram JSON")->required();

    auto* index = app.add_subcommand("index", "Fredholm index and additivity of a document");
    index->add_option("document", o.doc_path)->required();
    auto* herbrand = app.add_subcommand("herbrand", "Tate groups and Herbrand quotient of a document");
    herbrand->add_option("document", o.doc_path)->required();

    auto* spectral = app.add_subcommand("spectral", "pages of the exact couple in a document");
    spectral->add_option("document", o.doc_path)->required();
    spectral->add_option("--pages", o.pages, "number of derived couples");

    auto* harada = app.add_subcommand("harada-sai", "Harada-Sai bounds on a chain document or random chains");
    harada->add_option("document", o.doc_path, "chain JSON");
    harada->add_flag("--sweep", o.sweep, "exhaustive A2 sweep over F2 with n = 2");
    harada->add_option("--quiver", o.quiver, "A1 … A8");
    harada->add_option("--field", o.field, "prime p of F_p");
    harada->add_option("--n", o.n, "length bound");
    harada->add_option("--cases", o.cases);
    harada->add_option("--seed", o.seed);

    auto* gen = app.add_subcommand("gen", "emit generated diagram documents");
    gen->add_option("--kind", o.kind)->required()->check(CLI::IsMember(gen_kinds()));
    gen->add_option("--seed", o.seed);
    gen->add_option("--count", o.count, "documents from child seeds 0..count-1, as an array");

    auto* prop = app.add_subcommand("property-run", "run seeded property suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    prop->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
    prop->add_option("--cases", o.cases);
    prop->add_option("--seed", o.seed);

    // global flags may follow the subcommand
    for (auto* sub : {verify, index, herbrand, spectral, harada, gen, prop})
        sub->fallthrough();

    std::string command = "kercok";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cout << dump_canonical(error_report(command, exit_input, e.what()));
        return exit_input;
    }
    command = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    Json report;
    try {
        report = dispatch(command, o);
    } catch (const InputError& e) {
        report = error_report(command, exit_input, e.what());
    } catch (const std::exception& e) {
        report = error_report(command, exit_internal, e.what());
    }
    if (o.timing && report.is_object())
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    std::cout << dump_canonical(report);
    if (report.is_object() && report.contains("error"))
        std::cerr << "kercok: " << report["error"].get<std::string>() << "\n";
    if (command == "gen")
        return report.is_object() && report.contains("verdict") ? exit_code_of(report) : exit_pass;
    return exit_code_of(report);
}
