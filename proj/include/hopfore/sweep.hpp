#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hopfore/json_io.hpp"

namespace hopfore {

/// Bounds and reproducibility knobs for a verification sweep.
struct SweepConfig {
    long max_nil_t = 4;
    long max_nonnil_t = 2;
    std::vector<std::string> beta_panel = {"1", "-1"};  // scalar literals
    bool include_degenerate = true;  // also pair eigenvalues so that alpha*lambda(a^s) + beta = 0
    unsigned long long seed = 1;
    long parallelism = 1;
};

struct SweepOutcome {
    long pairs = 0;
    long disagreements = 0;
    std::vector<std::string> lines;  // one JSON report per pair, sorted
    std::string header;              // JSON line recording the configuration
    std::string summary;             // JSON line {"pairs": N, "disagreements": D}
};

/// Small deterministic character panel for a context: every character when
/// the group is finite and small, otherwise a seeded sample that always
/// contains the trivial character. Infinite factors draw nonzero rational
/// values from a fixed pool.
inline std::vector<Character> default_character_panel(const Context& ctx, unsigned long long seed,
                                                      std::size_t max_count = 4) {
    const GroupSpec& g = ctx.group();
    const CyclotomicField& f = ctx.field();
    std::vector<Character> panel;
    unsigned long total = 1;
    bool finite_group = true;
    for (auto n : g.factor_orders()) {
        if (n == 0) {
            finite_group = false;
            break;
        }
        total *= n;
    }
    if (finite_group && total <= max_count) {
        std::vector<long> exps(g.rank(), 0);
        while (true) {
            std::vector<Scalar> values;
            for (std::size_t i = 0; i < g.rank(); ++i)
                values.push_back(f.root_of_unity(g.factor_orders()[i], exps[i]));
            panel.emplace_back(g, std::move(values));
            std::size_t i = 0;
            for (; i < g.rank(); ++i) {
                if (++exps[i] < static_cast<long>(g.factor_orders()[i])) break;
                exps[i] = 0;
            }
            if (i == g.rank()) break;
        }
        return panel;
    }
    std::mt19937_64 rng(seed);
    const Rational pool[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-2), Rational(5, 3), Rational(-1, 2)};
    std::set<std::vector<long>> seen;  // dedupe finite exponent patterns
    panel.push_back(ctx.trivial_character());
    int guard = 0;
    while (panel.size() < max_count && ++guard < 200) {
        std::vector<Scalar> values;
        std::vector<long> key;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            unsigned long n = g.factor_orders()[i];
            if (n > 0) {
                long e = static_cast<long>(rng() % n);
                key.push_back(e);
                values.push_back(f.root_of_unity(n, e));
            } else {
                long e = static_cast<long>(rng() % (sizeof(pool) / sizeof(pool[0])));
                key.push_back(-1000 - e);
                values.push_back(f.from_rational(pool[e]));
            }
        }
        if (!seen.insert(key).second) continue;
        Character c(g, std::move(values));
        if (!c.is_trivial()) panel.push_back(std::move(c));
    }
    return panel;
}

/// Enumerates all label pairs within the configured bounds and verifies each
/// pair against the brute-force decomposition. Pair enumeration: one order
/// for nilpotent-nilpotent pairs (the product is commutative and tested as
/// such elsewhere), both orders as soon as a non-nilpotent factor is
/// involved. Output is a pure function of (ctx, config): report lines are
/// computed independently and sorted, so any parallelism yields identical
/// bytes. `on_line`, when given, streams each report as it completes
/// (completion order, not sorted order).
inline SweepOutcome run_sweep(const Context& ctx, const SweepConfig& cfg,
                              const std::function<void(const std::string&)>& on_line = {}) {
    std::vector<Character> chars = default_character_panel(ctx, cfg.seed);
    std::vector<ModuleLabel> nils;
    for (long t = 1; t <= cfg.max_nil_t; ++t)
        for (const auto& c : chars) nils.push_back(ModuleLabel::nilpotent(t, c));
    std::vector<ModuleLabel> periodics;
    if (ctx.finite()) {
        std::set<Character> cosets;
        for (const auto& c : chars) cosets.insert(ctx.coset_canonical(c));
        for (long t = 1; t <= cfg.max_nonnil_t; ++t)
            for (const auto& c : cosets)
                for (const auto& lit : cfg.beta_panel) {
                    Scalar beta = parse_scalar(ctx.field(), lit);
                    periodics.push_back(ModuleLabel::non_nilpotent(t, c, beta, ctx));
                }
    }

    std::vector<std::pair<ModuleLabel, ModuleLabel>> pairs;
    for (std::size_t i = 0; i < nils.size(); ++i)
        for (std::size_t j = i; j < nils.size(); ++j) pairs.emplace_back(nils[i], nils[j]);
    for (const auto& n : nils)
        for (const auto& p : periodics) {
            pairs.emplace_back(n, p);
            pairs.emplace_back(p, n);
        }
    for (const auto& p : periodics)
        for (const auto& q : periodics) pairs.emplace_back(p, q);
    if (cfg.include_degenerate)
        for (const auto& p : periodics)
            for (const auto& q : periodics) {
                Scalar forced = -(p.beta() * ctx.eval_a_power_s(q.weight()));
                pairs.emplace_back(p, ModuleLabel::non_nilpotent(q.t(), q.weight(), forced, ctx));
            }

    SweepOutcome outcome;
    outcome.pairs = static_cast<long>(pairs.size());
    {
        nlohmann::json panel = nlohmann::json::array();
        for (const auto& c : chars) panel.push_back(ModuleLabel::nilpotent(1, c).str(ctx));
        nlohmann::json header = {{"regime", ctx.regime_string()},   {"seed", cfg.seed},
                                 {"max_nil_t", cfg.max_nil_t},      {"max_nonnil_t", cfg.max_nonnil_t},
                                 {"beta_panel", cfg.beta_panel},    {"include_degenerate", cfg.include_degenerate},
                                 {"character_panel", panel},        {"pairs", pairs.size()}};
        outcome.header = header.dump();
    }
    if (on_line) on_line(outcome.header);

    std::vector<std::string> lines(pairs.size());
    std::vector<char> failed(pairs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            const auto& [a, b] = pairs[i];
            try {
                OracleReport r = verify_pair(a, b, ctx);
                lines[i] = report_to_json(r, ctx).dump();
                failed[i] = r.agree ? 0 : 1;
            } catch (const Error& e) {
                nlohmann::json j = {{"pair", {a.str(ctx), b.str(ctx)}}, {"agree", false}, {"error", e.what()}};
                lines[i] = j.dump();
                failed[i] = 1;
            }
            if (on_line) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                on_line(lines[i]);
            }
        }
    };
    long jobs = std::max<long>(1, cfg.parallelism);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (long j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    for (char f : failed) outcome.disagreements += f;
    std::sort(lines.begin(), lines.end());
    outcome.lines = std::move(lines);
    outcome.summary =
        nlohmann::json{{"pairs", outcome.pairs}, {"disagreements", outcome.disagreements}}.dump();
    return outcome;
}

}  // namespace hopfore
