#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/context.hpp"

namespace hopfore {

/// Canonical name of a finite dimensional indecomposable weight module.
///
///   nilpotent      N(t; lambda)        dim t,  x acts nilpotently
///   non_nilpotent  P(t; [sigma]; beta) dim t*s, x acts invertibly and x^s
///                                      has the single eigenvalue beta != 0
///
/// Non-nilpotent labels exist only in the finite regime and store the
/// canonical coset representative of sigma; beta together with (t, [sigma])
/// is the complete isomorphism invariant.
class ModuleLabel {
public:
    enum class Kind { nilpotent, non_nilpotent };

    static ModuleLabel nilpotent(long t, Character weight) {
        if (t < 1) fail(errc::semantic_error, "module dimension parameter must be >= 1");
        return ModuleLabel(Kind::nilpotent, t, std::move(weight), std::nullopt);
    }

    static ModuleLabel non_nilpotent(long t, const Character& weight, Scalar beta, const Context& ctx) {
        if (t < 1) fail(errc::semantic_error, "module dimension parameter must be >= 1");
        if (!ctx.finite()) fail(errc::regime_mismatch, "non-nilpotent modules require the finite regime");
        if (beta.is_zero()) fail(errc::zero_beta, "non-nilpotent modules require beta != 0");
        return ModuleLabel(Kind::non_nilpotent, t, ctx.coset_canonical(weight), std::move(beta));
    }

    Kind kind() const { return kind_; }
    bool is_nilpotent() const { return kind_ == Kind::nilpotent; }
    long t() const { return t_; }
    const Character& weight() const { return weight_; }
    const Scalar& beta() const {
        if (!beta_) fail(errc::semantic_error, "nilpotent label has no eigenvalue parameter");
        return *beta_;
    }

    long dim(const Context& ctx) const {
        if (is_nilpotent()) return t_;
        if (!ctx.finite()) fail(errc::regime_mismatch, "non-nilpotent label in the infinite regime");
        return t_ * static_cast<long>(ctx.s());
    }

    void validate(const Context& ctx) const {
        if (weight_.group() != ctx.group()) fail(errc::group_mismatch, "label character group mismatch");
        if (!weight_.values().empty() &&
            weight_.values()[0].field().conductor() != ctx.field().conductor())
            fail(errc::field_mismatch, "label character field mismatch");
        if (!is_nilpotent() && !ctx.finite())
            fail(errc::regime_mismatch, "non-nilpotent label in the infinite regime");
    }

    friend bool operator==(const ModuleLabel& x, const ModuleLabel& y) {
        if (x.kind_ != y.kind_ || x.t_ != y.t_) return false;
        if (!(x.weight_ == y.weight_)) return false;
        if (x.beta_.has_value() != y.beta_.has_value()) return false;
        return !x.beta_ || *x.beta_ == *y.beta_;
    }
    friend bool operator!=(const ModuleLabel& x, const ModuleLabel& y) { return !(x == y); }

    /// Sort order for decompositions and tables: nilpotent before
    /// non-nilpotent, then by t, then by weight, then by beta.
    friend bool operator<(const ModuleLabel& x, const ModuleLabel& y) {
        if (x.kind_ != y.kind_) return x.kind_ == Kind::nilpotent;
        if (x.t_ != y.t_) return x.t_ < y.t_;
        if (x.weight_ < y.weight_) return true;
        if (y.weight_ < x.weight_) return false;
        if (x.beta_ && y.beta_) return *x.beta_ < *y.beta_;
        return false;
    }

    std::string str(const Context& ctx) const;

private:
    ModuleLabel(Kind kind, long t, Character weight, std::optional<Scalar> beta)
        : kind_(kind), t_(t), weight_(std::move(weight)), beta_(std::move(beta)) {}

    Kind kind_;
    long t_;
    Character weight_;
    std::optional<Scalar> beta_;
};

/// Canonical form of the raw data (t, character, beta):
///  - beta = 0 collapses to the nilpotent module of dimension t*s with the
///    character kept verbatim (nilpotent labels do distinguish chi-twists);
///  - beta != 0 yields the non-nilpotent label on the canonical coset.
inline ModuleLabel canonicalize(long t, const Character& character, const Scalar& beta, const Context& ctx) {
    if (beta.is_zero())
        return ModuleLabel::nilpotent(t * static_cast<long>(ctx.s()), character);
    return ModuleLabel::non_nilpotent(t, character, beta, ctx);
}

inline long dim_of(const ModuleLabel& label, const Context& ctx) { return label.dim(ctx); }

/// A finite multiset of labels with multiplicities: the right-hand side of a
/// tensor decomposition. Summands are stored sorted with positive
/// multiplicities; zero-multiplicity terms are never stored.
class Decomposition {
public:
    using Summand = std::pair<ModuleLabel, long>;

    Decomposition() : total_dim_(0) {}

    const std::vector<Summand>& summands() const { return summands_; }
    long total_dim() const { return total_dim_; }

    /// Number of indecomposable summands counted with multiplicity.
    long summand_count() const {
        long n = 0;
        for (const auto& [label, mult] : summands_) n += mult;
        return n;
    }

    bool all_nilpotent() const {
        for (const auto& [label, mult] : summands_)
            if (!label.is_nilpotent()) return false;
        return true;
    }

    long multiplicity_of(const ModuleLabel& label) const {
        for (const auto& [l, m] : summands_)
            if (l == label) return m;
        return 0;
    }

    friend bool operator==(const Decomposition& x, const Decomposition& y) {
        return x.total_dim_ == y.total_dim_ && x.summands_ == y.summands_;
    }
    friend bool operator!=(const Decomposition& x, const Decomposition& y) { return !(x == y); }

    std::string str(const Context& ctx) const {
        std::string out;
        for (const auto& [label, mult] : summands_) {
            if (!out.empty()) out += " + ";
            if (mult != 1) out += std::to_string(mult) + "*";
            out += label.str(ctx);
        }
        return out.empty() ? "0" : out;
    }

    class Builder {
    public:
        explicit Builder(const Context& ctx) : ctx_(&ctx) {}

        Builder& add(const ModuleLabel& label, long mult = 1) {
            if (mult < 0) fail(errc::internal_dimension_mismatch, "negative summand multiplicity");
            if (mult == 0) return *this;  // rM = 0 when r = 0
            acc_[label] += mult;
            return *this;
        }

        Builder& add(const Decomposition& d, long mult = 1) {
            for (const auto& [label, m] : d.summands_) add(label, m * mult);
            return *this;
        }

        /// Finalizes the multiset. When expected_dim is given, a mismatch is
        /// reported as an internal error: the closed-form rules must conserve
        /// dimension exactly.
        Decomposition build(std::optional<long> expected_dim = std::nullopt) const {
            Decomposition d;
            d.summands_.assign(acc_.begin(), acc_.end());
            for (const auto& [label, mult] : d.summands_) d.total_dim_ += mult * label.dim(*ctx_);
            if (expected_dim && d.total_dim_ != *expected_dim)
                fail(errc::internal_dimension_mismatch,
                     "decomposition dimension " + std::to_string(d.total_dim_) + " != expected " +
                         std::to_string(*expected_dim));
            return d;
        }

    private:
        const Context* ctx_;
        std::map<ModuleLabel, long> acc_;
    };

private:
    std::vector<Summand> summands_;
    long total_dim_;
};

// ---------------------------------------------------------------------------
// Label grammar:
//   label  := "N(" t ";" char ")" | "P(" t ";" char ";" scalar ")"
//   char   := "[" entry ("," entry)* "]"
//   entry  := integer          on a finite factor Z/n: exponent of zeta_n
//           | scalar literal   on an infinite factor
// Whitespace is insignificant everywhere.
// ---------------------------------------------------------------------------

namespace detail {

inline void expect_char(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw SyntaxError(std::string("expected '") + c + "' at position " + std::to_string(pos), pos);
    ++pos;
}

inline long parse_long(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw SyntaxError("expected integer at position " + std::to_string(start), start);
    if (pos - start > 12) throw SyntaxError("integer too large", start);
    return std::stol(s.substr(start, pos - start));
}

inline Character parse_label_character(const std::string& s, std::size_t& pos, const Context& ctx) {
    expect_char(s, pos, '[');
    std::vector<Scalar> values;
    const auto& orders = ctx.group().factor_orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) expect_char(s, pos, ',');
        skip_ws(s, pos);
        if (orders[i] > 0) {
            long k = parse_long(s, pos);
            values.push_back(ctx.field().root_of_unity(orders[i], k));
        } else {
            values.push_back(parse_scalar_impl(ctx.field(), s, pos));
        }
    }
    expect_char(s, pos, ']');
    return Character(ctx.group(), std::move(values));
}

}  // namespace detail

inline ModuleLabel parse_label(const std::string& text, std::size_t& pos, const Context& ctx) {
    detail::skip_ws(text, pos);
    if (pos >= text.size() || (text[pos] != 'N' && text[pos] != 'P'))
        throw SyntaxError("expected label kind 'N' or 'P' at position " + std::to_string(pos), pos);
    char kind = text[pos++];
    detail::expect_char(text, pos, '(');
    long t = detail::parse_long(text, pos);
    if (t < 1) fail(errc::semantic_error, "label parameter t must be >= 1");
    detail::expect_char(text, pos, ';');
    Character weight = detail::parse_label_character(text, pos, ctx);
    if (kind == 'N') {
        detail::expect_char(text, pos, ')');
        return ModuleLabel::nilpotent(t, std::move(weight));
    }
    detail::expect_char(text, pos, ';');
    detail::skip_ws(text, pos);
    Scalar beta = detail::parse_scalar_impl(ctx.field(), text, pos);
    detail::expect_char(text, pos, ')');
    if (!ctx.finite()) fail(errc::regime_mismatch, "P(...) labels require the finite regime");
    if (beta.is_zero()) fail(errc::zero_beta, "P(...) labels require beta != 0");
    return ModuleLabel::non_nilpotent(t, weight, std::move(beta), ctx);
}

inline ModuleLabel parse_label(const std::string& text, const Context& ctx) {
    std::size_t pos = 0;
    ModuleLabel label = parse_label(text, pos, ctx);
    detail::skip_ws(text, pos);
    if (pos != text.size()) throw SyntaxError("trailing characters after label", pos);
    return label;
}

inline std::string ModuleLabel::str(const Context& ctx) const {
    std::string out(is_nilpotent() ? "N(" : "P(");
    out += std::to_string(t_) + ";[";
    const auto& orders = ctx.group().factor_orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out += ",";
        const Scalar& v = weight_.values()[i];
        if (orders[i] > 0) {
            long exp = -1;
            Scalar p = ctx.field().one();
            Scalar zeta = ctx.field().root_of_unity(orders[i], 1);
            for (unsigned long k = 0; k < orders[i]; ++k) {
                if (p == v) {
                    exp = static_cast<long>(k);
                    break;
                }
                p *= zeta;
            }
            if (exp < 0) fail(errc::semantic_error, "character value is not a root of unity of the factor order");
            out += std::to_string(exp);
        } else {
            out += v.str();
        }
    }
    out += "]";
    if (!is_nilpotent()) out += ";" + beta_->str();
    out += ")";
    return out;
}

}  // namespace hopfore
