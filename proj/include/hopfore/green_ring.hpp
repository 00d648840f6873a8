#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/rules.hpp"

namespace hopfore {

/// Element of the Green ring of the weight-module category: a finite
/// Z-linear combination of canonical labels. Negative coefficients (virtual
/// modules) are allowed; zero coefficients are never stored. Multiplication
/// extends the tensor decomposition bilinearly and is NOT commutative.
class RingElement {
public:
    explicit RingElement(const Context& ctx) : ctx_(&ctx) {}

    static RingElement unit(const Context& ctx) {
        return from_label(ModuleLabel::nilpotent(1, ctx.trivial_character()), ctx);
    }

    static RingElement from_label(const ModuleLabel& label, const Context& ctx) {
        RingElement e(ctx);
        label.validate(ctx);
        e.terms_[label] = 1;
        return e;
    }

    static RingElement from_decomposition(const Decomposition& d, const Context& ctx) {
        RingElement e(ctx);
        for (const auto& [label, mult] : d.summands()) e.terms_[label] = mult;
        return e;
    }

    const Context& ctx() const { return *ctx_; }
    const std::map<ModuleLabel, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        x.check_ctx(y);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        x.check_ctx(y);
        RingElement r = x;
        for (const auto& [label, c] : y.terms_) r.bump(label, c);
        return r;
    }

    friend RingElement operator-(const RingElement& x) {
        RingElement r = x;
        for (auto& [label, c] : r.terms_) c = -c;
        return r;
    }

    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

    RingElement scaled(long long k) const {
        RingElement r(*ctx_);
        if (k == 0) return r;
        r.terms_ = terms_;
        for (auto& [label, c] : r.terms_) c *= k;
        return r;
    }

    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        x.check_ctx(y);
        RingElement r(*x.ctx_);
        for (const auto& [la, ca] : x.terms_)
            for (const auto& [lb, cb] : y.terms_) {
                Decomposition d = tensor_decompose(la, lb, *x.ctx_);
                for (const auto& [label, mult] : d.summands()) r.bump(label, ca * cb * mult);
            }
        return r;
    }

    std::string str() const {
        std::string out;
        for (const auto& [label, c] : terms_) {
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            long long mag = c < 0 ? -c : c;
            if (mag != 1) out += std::to_string(mag) + "*";
            out += label.str(*ctx_);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_ctx(const RingElement& other) const {
        if (*ctx_ != *other.ctx_) fail(errc::context_mismatch, "ring elements from different contexts");
    }

    void bump(const ModuleLabel& label, long long delta) {
        auto it = terms_.find(label);
        if (it == terms_.end()) {
            if (delta != 0) terms_.emplace(label, delta);
            return;
        }
        it->second += delta;
        if (it->second == 0) terms_.erase(it);
    }

    const Context* ctx_;
    std::map<ModuleLabel, long long> terms_;
};

/// All pairwise products of the given generators, row-major over ordered
/// pairs. Deterministic; cells are independent.
struct StructureTable {
    std::vector<ModuleLabel> generators;
    std::vector<Decomposition> cells;  // cells[i * n + j] = gen[i] (x) gen[j]

    const Decomposition& at(std::size_t i, std::size_t j) const {
        return cells[i * generators.size() + j];
    }
};

inline StructureTable structure_table(const std::vector<ModuleLabel>& generators, const Context& ctx) {
    if (generators.empty()) fail(errc::semantic_error, "structure table needs at least one generator");
    StructureTable t;
    t.generators = generators;
    t.cells.reserve(generators.size() * generators.size());
    for (const auto& a : generators)
        for (const auto& b : generators) t.cells.push_back(tensor_decompose(a, b, ctx));
    return t;
}

/// Ring expression grammar:
///   expr := term (('+'|'-') term)*
///   term := int? label ('*' label)*
inline RingElement parse_ring_expression(const std::string& text, const Context& ctx) {
    std::size_t pos = 0;
    RingElement acc(ctx);
    bool first = true;
    while (true) {
        detail::skip_ws(text, pos);
        long long sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            break;
        }
        detail::skip_ws(text, pos);
        long long coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = detail::parse_long(text, pos);
            detail::skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                detail::skip_ws(text, pos);
            }
        }
        RingElement term = RingElement::from_label(parse_label(text, pos, ctx), ctx);
        while (true) {
            detail::skip_ws(text, pos);
            if (pos >= text.size() || text[pos] != '*') break;
            ++pos;
            term = term * RingElement::from_label(parse_label(text, pos, ctx), ctx);
        }
        acc = acc + term.scaled(sign * coeff);
        first = false;
        detail::skip_ws(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] != '+' && text[pos] != '-')
            throw SyntaxError("expected '+', '-' or end of expression", pos);
    }
    if (first) throw SyntaxError("empty ring expression", pos);
    return acc;
}

}  // namespace hopfore
