#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/character.hpp"
#include "hopfore/cyclotomic.hpp"
#include "hopfore/errors.hpp"

namespace hopfore {

/// The data (G, a, chi) of the Hopf-Ore extension kG(chi^{-1}, a, 0),
/// together with the working cyclotomic field, q = chi^{-1}(a), and the
/// regime split: either |chi| = |chi(a)| = s < infinity, or both infinite.
///
/// Immutable after construction; shared read-only by all downstream modules.
class Context {
public:
    Context(GroupSpec group, GroupElement a, Character chi, const CyclotomicField& field)
        : group_(std::move(group)), a_(std::move(a)), chi_(std::move(chi)), field_(&field) {
        if (field_->conductor() % group_.finite_exponent() != 0)
            fail(errc::field_too_small,
                 "conductor " + std::to_string(field_->conductor()) +
                     " is not a multiple of the group exponent " + std::to_string(group_.finite_exponent()));
        Scalar chi_a = chi_(a_);
        if (chi_a.is_one()) fail(errc::chi_a_equals_one, "chi(a) = 1 is excluded");
        q_ = chi_a.inverse();
        auto chi_order = chi_.order();
        auto chi_a_order = chi_a.multiplicative_order();
        if (chi_order.has_value() != chi_a_order.has_value() ||
            (chi_order && *chi_order != *chi_a_order)) {
            auto show = [](const std::optional<unsigned long>& o) {
                return o ? std::to_string(*o) : std::string("infinite");
            };
            fail(errc::unsupported_regime, "|chi| = " + show(chi_order) + " but |chi(a)| = " +
                                               show(chi_a_order) + "; only |chi| = |chi(a)| is supported");
        }
        s_ = chi_order;
    }

    const GroupSpec& group() const { return group_; }
    const GroupElement& a() const { return a_; }
    const Character& chi() const { return chi_; }
    const CyclotomicField& field() const { return *field_; }
    const Scalar& q() const { return q_; }

    bool finite() const { return s_.has_value(); }

    /// The common order s of chi and chi(a); only meaningful in the finite regime.
    unsigned long s() const {
        if (!s_) fail(errc::infinite_regime, "order s requested in the infinite regime");
        return *s_;
    }

    Character trivial_character() const { return Character::trivial(group_, *field_); }

    /// chi^k * sigma
    Character twist(const Character& sigma, long k) const { return chi_.pow(k) * sigma; }

    /// lambda(a^s) = lambda(a)^s, the unit that twists the x^s-eigenvalue
    /// when a module moves across a tensor factor.
    Scalar eval_a_power_s(const Character& lambda) const { return lambda(a_).pow(static_cast<long>(s())); }

    /// Canonical representative of the coset [sigma] in G^ / <chi>: the
    /// minimum of {chi^i sigma : 0 <= i < s} in the deterministic character
    /// order. Idempotent by construction.
    Character coset_canonical(const Character& sigma) const {
        if (!finite()) fail(errc::infinite_regime, "coset representatives require the finite regime");
        Character best = sigma;
        Character cur = sigma;
        for (unsigned long i = 1; i < s(); ++i) {
            cur = cur * chi_;
            if (cur < best) best = cur;
        }
        return best;
    }

    std::string regime_string() const {
        return finite() ? "FIN(" + std::to_string(s()) + ")" : "INF";
    }

    friend bool operator==(const Context& x, const Context& y) {
        return x.group_ == y.group_ && x.a_ == y.a_ &&
               x.field_->conductor() == y.field_->conductor() && x.chi_ == y.chi_;
    }
    friend bool operator!=(const Context& x, const Context& y) { return !(x == y); }

private:
    GroupSpec group_;
    GroupElement a_;
    Character chi_;
    const CyclotomicField* field_;
    Scalar q_;
    std::optional<unsigned long> s_;
};

}  // namespace hopfore
