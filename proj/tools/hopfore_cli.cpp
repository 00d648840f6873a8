// Command-line front end: context validation, tensor decomposition queries,
// Green-ring expression evaluation, structure tables, and rule-vs-oracle
// verification sweeps.
//
// Exit codes: 0 success, 1 usage or parse error, 2 semantic error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfore/green_ring.hpp"
#include "hopfore/json_io.hpp"
#include "hopfore/sweep.hpp"

namespace {

using namespace hopfore;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;

struct GlobalOptions {
    std::string ctx_file;
    std::string format = "text";
    unsigned long long seed = 1;
    long jobs = 1;
};

/// Thrown after a diagnostic has already been written to stderr.
struct Reported {
    int exit_code;
};

/// The context file is either the --ctx flag or, when that is absent, the
/// first positional argument (which this pops from args).
Context require_context(const GlobalOptions& g, std::vector<std::string>& args) {
    std::string path = g.ctx_file;
    if (path.empty()) {
        if (args.empty()) fail(errc::io_error, "no context file given (pass it first or with --ctx)");
        path = args.front();
        args.erase(args.begin());
    }
    return load_context_file(path);
}

void require_arity(const std::vector<std::string>& args, std::size_t min, std::size_t max,
                   const std::string& what) {
    if (args.size() < min || args.size() > max)
        fail(errc::io_error, "expected " + what);
}

/// Points at the offending character of a one-line input.
void print_caret(std::ostream& os, const std::string& text, std::size_t pos) {
    os << "  " << text << "\n  " << std::string(std::min(pos, text.size()), ' ') << "^\n";
}

ModuleLabel parse_label_cli(const std::string& text, const Context& ctx) {
    try {
        return parse_label(text, ctx);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_caret(std::cerr, text, e.position());
        throw Reported{kExitUsage};
    }
}

int cmd_ctx_validate(const GlobalOptions& g, std::vector<std::string> args) {
    require_arity(args, g.ctx_file.empty() ? 1 : 0, g.ctx_file.empty() ? 1 : 0, "just the context file");
    Context ctx = require_context(g, args);
    if (g.format == "json") {
        nlohmann::json j = {{"regime", ctx.regime_string()},
                            {"q", ctx.q().str()},
                            {"conductor", ctx.field().conductor()},
                            {"group", ctx.group().factor_orders()}};
        if (ctx.finite()) j["s"] = ctx.s();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "regime=" << ctx.regime_string() << ", q=" << ctx.q().str() << "\n";
    }
    return kExitOk;
}

int cmd_tensor(const GlobalOptions& g, std::vector<std::string> args) {
    Context ctx = require_context(g, args);
    require_arity(args, 2, 2, "two labels: tensor <ctx.json> <left> <right>");
    ModuleLabel a = parse_label_cli(args[0], ctx);
    ModuleLabel b = parse_label_cli(args[1], ctx);
    Decomposition d = tensor_decompose(a, b, ctx);
    if (g.format == "json")
        std::cout << decomposition_to_json(d, ctx).dump() << "\n";
    else
        std::cout << a.str(ctx) << " (x) " << b.str(ctx) << " = " << d.str(ctx)
                  << "   [dim " << d.total_dim() << "]\n";
    return kExitOk;
}

int cmd_green(const GlobalOptions& g, std::vector<std::string> args) {
    Context ctx = require_context(g, args);
    require_arity(args, 1, 1, "one expression: green <ctx.json> \"<expr>\"");
    RingElement e = parse_ring_expression(args[0], ctx);
    if (g.format == "json")
        std::cout << ring_element_to_json(e).dump() << "\n";
    else
        std::cout << e.str() << "\n";
    return kExitOk;
}

int cmd_table(const GlobalOptions& g, std::vector<std::string> args) {
    Context ctx = require_context(g, args);
    require_arity(args, 1, 1000, "at least one generator: table <ctx.json> <label>...");
    std::vector<ModuleLabel> gens;
    for (const auto& t : args) gens.push_back(parse_label_cli(t, ctx));
    StructureTable table = structure_table(gens, ctx);
    const std::size_t n = gens.size();
    if (g.format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cells.push_back({{"left", gens[i].str(ctx)},
                                 {"right", gens[j].str(ctx)},
                                 {"product", decomposition_to_json(table.at(i, j), ctx)}});
        nlohmann::json names = nlohmann::json::array();
        for (const auto& l : gens) names.push_back(l.str(ctx));
        std::cout << nlohmann::json{{"generators", names}, {"cells", cells}}.dump() << "\n";
    } else if (g.format == "md") {
        std::cout << "| (x) |";
        for (const auto& l : gens) std::cout << " " << l.str(ctx) << " |";
        std::cout << "\n|---|";
        for (std::size_t j = 0; j < n; ++j) std::cout << "---|";
        std::cout << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            std::cout << "| " << gens[i].str(ctx) << " |";
            for (std::size_t j = 0; j < n; ++j) std::cout << " " << table.at(i, j).str(ctx) << " |";
            std::cout << "\n";
        }
    } else {  // csv (also the default for `table` when --format text)
        std::cout << "left,right,product,total_dim\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                std::cout << gens[i].str(ctx) << "," << gens[j].str(ctx) << ",\""
                          << table.at(i, j).str(ctx) << "\"," << table.at(i, j).total_dim() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, std::vector<std::string> args, const SweepConfig& cfg_in) {
    Context ctx = require_context(g, args);
    require_arity(args, 0, 0, "no positional arguments after the context file");
    SweepConfig cfg = cfg_in;
    cfg.seed = g.seed;
    cfg.parallelism = g.jobs;
    SweepOutcome out;
    if (g.format == "json") {
        // deterministic output: header, sorted report lines, summary
        out = run_sweep(ctx, cfg);
        std::cout << out.header << "\n";
        for (const auto& line : out.lines) std::cout << line << "\n";
    } else {
        // stream reports as they finish so long sweeps are inspectable
        out = run_sweep(ctx, cfg, [](const std::string& line) { std::cout << line << "\n" << std::flush; });
    }
    std::cout << out.summary << "\n";
    return out.disagreements == 0 ? kExitOk : kExitSemantic;
}

int cmd_selftest(const GlobalOptions& g) {
    long failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        const CyclotomicField& f = CyclotomicField::of(4);
        check("cyclotomic arithmetic", (f.one() + f.zeta_power(1)) * (f.one() - f.zeta_power(1)) == f.from_int(2));
        Scalar q = f.from_int(-1);
        check("q-binomial vanishing", q_binomial(2, 1, q).is_zero());
    }
    {
        Context ctx = context_from_json({{"group", {2}}, {"a", {1}}, {"chi", {"-1"}}});
        SweepConfig cfg;
        cfg.max_nil_t = 3;
        cfg.max_nonnil_t = 1;
        cfg.seed = g.seed;
        cfg.parallelism = g.jobs;
        SweepOutcome out = run_sweep(ctx, cfg);
        check("FIN(2) sweep (" + std::to_string(out.pairs) + " pairs)", out.disagreements == 0);
    }
    {
        Context ctx = context_from_json({{"group", {0}}, {"a", {1}}, {"chi", {"1/2"}}});
        SweepConfig cfg;
        cfg.max_nil_t = 4;
        cfg.seed = g.seed;
        cfg.parallelism = g.jobs;
        SweepOutcome out = run_sweep(ctx, cfg);
        check("INF sweep (" + std::to_string(out.pairs) + " pairs)", out.disagreements == 0);
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor product decompositions of weight modules over Hopf-Ore extensions of group algebras"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--ctx", g.ctx_file, "Context JSON file (alternative to the positional argument)");
    app.add_option("--format", g.format, "Output format: json|text|csv|md")
        ->check(CLI::IsMember({"json", "text", "csv", "md"}));
    app.add_option("--seed", g.seed, "Random seed for sampled panels");
    app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    SweepConfig sweep;

    CLI::App* ctx_cmd = app.add_subcommand("ctx", "Context file operations");
    ctx_cmd->require_subcommand(1);
    CLI::App* validate = ctx_cmd->add_subcommand("validate", "Validate a context file and echo regime, s and q");
    validate->add_option("args", args, "<ctx.json>");

    CLI::App* tensor = app.add_subcommand("tensor", "Decompose a tensor product of two labels");
    tensor->add_option("args", args, "<ctx.json> <left label> <right label>");

    CLI::App* green = app.add_subcommand("green", "Evaluate a Green-ring expression");
    green->add_option("args", args, "<ctx.json> \"<expr>\"");

    CLI::App* table = app.add_subcommand("table", "All pairwise products of a generator list");
    table->add_option("args", args, "<ctx.json> <label>...");

    CLI::App* verify = app.add_subcommand("verify", "Verify the closed-form rules against the brute-force oracle");
    verify->add_option("args", args, "<ctx.json>");
    verify->add_option("--max-nil-t", sweep.max_nil_t, "Largest nilpotent parameter t")->check(CLI::PositiveNumber);
    verify->add_option("--max-nonnil-t", sweep.max_nonnil_t, "Largest non-nilpotent parameter t")
        ->check(CLI::PositiveNumber);
    verify->add_option("--beta", sweep.beta_panel, "Eigenvalue panel (scalar literals; repeatable)");
    verify->add_flag("--include-degenerate,!--no-include-degenerate", sweep.include_degenerate,
                     "Also pair eigenvalues so that alpha*lambda(a^s)+beta = 0");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in smoke checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_ctx_validate(g, args);
        if (tensor->parsed()) return cmd_tensor(g, args);
        if (green->parsed()) return cmd_green(g, args);
        if (table->parsed()) return cmd_table(g, args);
        if (verify->parsed()) return cmd_verify(g, args, sweep);
        if (selftest->parsed()) return cmd_selftest(g);
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const Reported& r) {
        return r.exit_code;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_syntax() ? kExitUsage : kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSemantic;
    }
}
