#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "hopfore/green_ring.hpp"
#include "hopfore/oracle.hpp"

namespace hopfore {

/// Builds a Context from its JSON description:
///   {"conductor": m | "auto", "group": [n1, ...], "a": [e1, ...],
///    "chi": ["<scalar literal>", ...]}
/// "auto" selects the lcm of the finite factor orders.
inline Context context_from_json(const nlohmann::json& j) {
    auto field_error = [](const std::string& field, const std::string& what) -> void {
        fail(errc::semantic_error, "context field '" + field + "': " + what);
    };
    if (!j.is_object()) fail(errc::semantic_error, "context file must hold a JSON object");
    for (const char* key : {"group", "a", "chi"})
        if (!j.contains(key)) field_error(key, "missing");

    if (!j["group"].is_array() || j["group"].empty()) field_error("group", "expected a nonempty array");
    std::vector<unsigned long> orders;
    for (const auto& v : j["group"]) {
        if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() == 1)
            field_error("group", "entries must be 0 (infinite factor) or integers >= 2");
        orders.push_back(v.get<unsigned long>());
    }
    GroupSpec group(std::move(orders));

    unsigned long conductor = group.finite_exponent();
    if (j.contains("conductor") && !(j["conductor"].is_string() && j["conductor"] == "auto")) {
        if (!j["conductor"].is_number_integer() || j["conductor"].get<long>() <= 0)
            field_error("conductor", "expected a positive integer or \"auto\"");
        conductor = j["conductor"].get<unsigned long>();
        if (conductor % group.finite_exponent() != 0)
            fail(errc::field_too_small, "context field 'conductor': must be a multiple of the group exponent " +
                                            std::to_string(group.finite_exponent()));
    }
    const CyclotomicField& field = CyclotomicField::of(conductor);

    if (!j["a"].is_array() || j["a"].size() != group.rank())
        field_error("a", "expected one exponent per group factor");
    std::vector<long> exps;
    for (const auto& v : j["a"]) {
        if (!v.is_number_integer()) field_error("a", "entries must be integers");
        exps.push_back(v.get<long>());
    }
    GroupElement a(group, std::move(exps));

    if (!j["chi"].is_array() || j["chi"].size() != group.rank())
        field_error("chi", "expected one scalar literal per group factor");
    std::vector<Scalar> values;
    for (const auto& v : j["chi"]) {
        if (!v.is_string()) field_error("chi", "entries must be scalar literal strings");
        try {
            values.push_back(parse_scalar(field, v.get<std::string>()));
        } catch (const SyntaxError& e) {
            field_error("chi", std::string("bad scalar literal: ") + e.what());
        }
    }
    Character chi(group, std::move(values));

    return Context(std::move(group), std::move(a), std::move(chi), field);
}

inline Context load_context_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open context file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError("context file " + path + ": " + e.what(), 0);
    }
    return context_from_json(j);
}

inline nlohmann::json label_to_json(const ModuleLabel& label, const Context& ctx) {
    return label.str(ctx);
}

inline nlohmann::json decomposition_to_json(const Decomposition& d, const Context& ctx) {
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& [label, mult] : d.summands())
        summands.push_back({{"label", label.str(ctx)}, {"mult", mult}, {"dim", label.dim(ctx)}});
    return {{"summands", summands}, {"total_dim", d.total_dim()}};
}

inline nlohmann::json report_to_json(const OracleReport& r, const Context& ctx) {
    nlohmann::json eigen = nlohmann::json::array();
    for (const auto& [lit, mult] : r.diagnostics.eigenvalues)
        eigen.push_back({{"value", lit}, {"mult", mult}});
    return {{"pair", {r.left.str(ctx), r.right.str(ctx)}},
            {"rule", decomposition_to_json(r.rule_result, ctx)},
            {"oracle", decomposition_to_json(r.oracle_result, ctx)},
            {"agree", r.agree},
            {"diagnostics",
             {{"weight_space_dims", r.diagnostics.weight_space_dims},
              {"nil_dim", r.diagnostics.nil_dim},
              {"inv_dim", r.diagnostics.inv_dim},
              {"eigenvalues", eigen}}}};
}

inline nlohmann::json ring_element_to_json(const RingElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [label, coeff] : e.terms())
        terms.push_back({{"label", label.str(e.ctx())}, {"coeff", coeff}});
    return {{"terms", terms}};
}

}  // namespace hopfore
