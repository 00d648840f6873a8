#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfore/cyclotomic.hpp"
#include "hopfore/errors.hpp"

namespace hopfore {

/// A finitely generated abelian group given by invariant factors:
/// entry n >= 2 means a cyclic factor Z/n, entry 0 means a copy of Z.
class GroupSpec {
public:
    GroupSpec() = default;

    explicit GroupSpec(std::vector<unsigned long> factor_orders) : orders_(std::move(factor_orders)) {
        if (orders_.empty()) fail(errc::semantic_error, "group must have at least one factor");
        for (auto n : orders_)
            if (n == 1) fail(errc::semantic_error, "group factor orders must be 0 (infinite) or >= 2");
    }

    const std::vector<unsigned long>& factor_orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }

    bool has_infinite_factor() const {
        for (auto n : orders_)
            if (n == 0) return true;
        return false;
    }

    /// lcm of the finite factor orders (1 if all factors are infinite):
    /// the smallest conductor whose roots of unity realize every character
    /// value on the finite part.
    unsigned long finite_exponent() const {
        unsigned long l = 1;
        for (auto n : orders_)
            if (n > 0) l = std::lcm(l, n);
        return l;
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

private:
    std::vector<unsigned long> orders_;
};

/// Element of a GroupSpec: exponent vector over the generators, with
/// finite-factor entries reduced into [0, n).
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(const GroupSpec& group, std::vector<long> exps) : exps_(std::move(exps)) {
        if (exps_.size() != group.rank())
            fail(errc::group_mismatch, "group element has wrong number of exponents");
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            long n = static_cast<long>(group.factor_orders()[i]);
            if (n > 0) exps_[i] = ((exps_[i] % n) + n) % n;
        }
    }

    const std::vector<long>& exps() const { return exps_; }

    GroupElement pow(const GroupSpec& group, long k) const {
        std::vector<long> e(exps_);
        for (auto& x : e) x *= k;
        return GroupElement(group, std::move(e));
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.exps_ == b.exps_; }

private:
    std::vector<long> exps_;
};

/// A character of G: the vector of its (nonzero) values on the generators.
/// On a finite factor Z/n the value must be an n-th root of unity. Values
/// are stored rather than exponents so that infinite factors can carry
/// arbitrary units (needed when chi(a) is not a root of unity).
class Character {
public:
    Character() = default;

    Character(const GroupSpec& group, std::vector<Scalar> values)
        : group_(group), values_(std::move(values)) {
        if (values_.size() != group_.rank())
            fail(errc::group_mismatch, "character has wrong number of generator values");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i].is_zero())
                fail(errc::semantic_error, "character value on generator " + std::to_string(i) + " is zero");
            unsigned long n = group_.factor_orders()[i];
            if (n > 0 && !values_[i].pow(static_cast<long>(n)).is_one())
                fail(errc::semantic_error,
                     "character value on generator " + std::to_string(i) + " is not an order-" +
                         std::to_string(n) + " root of unity");
        }
    }

    static Character trivial(const GroupSpec& group, const CyclotomicField& field) {
        return Character(group, std::vector<Scalar>(group.rank(), field.one()));
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<Scalar>& values() const { return values_; }

    Scalar operator()(const GroupElement& g) const {
        if (g.exps().size() != values_.size()) fail(errc::group_mismatch, "element/character group mismatch");
        Scalar acc = values_[0].field().one();
        for (std::size_t i = 0; i < values_.size(); ++i) acc *= values_[i].pow(g.exps()[i]);
        return acc;
    }

    friend Character operator*(const Character& a, const Character& b) {
        a.check_group(b);
        std::vector<Scalar> v;
        v.reserve(a.values_.size());
        for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b.values_[i]);
        return Character(a.group_, std::move(v));
    }

    Character pow(long k) const {
        std::vector<Scalar> v;
        v.reserve(values_.size());
        for (const auto& x : values_) v.push_back(x.pow(k));
        return Character(group_, std::move(v));
    }

    Character inverse() const { return pow(-1); }

    /// lcm of the generator-value orders; nullopt when some value is not a
    /// root of unity (infinite order).
    std::optional<unsigned long> order() const {
        unsigned long l = 1;
        for (const auto& v : values_) {
            auto o = v.multiplicative_order();
            if (!o) return std::nullopt;
            l = std::lcm(l, *o);
        }
        return l;
    }

    bool is_trivial() const {
        for (const auto& v : values_)
            if (!v.is_one()) return false;
        return true;
    }

    friend bool operator==(const Character& a, const Character& b) {
        a.check_group(b);
        return a.values_ == b.values_;
    }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

    /// Deterministic total order: lexicographic over generator values.
    friend bool operator<(const Character& a, const Character& b) {
        a.check_group(b);
        for (std::size_t i = 0; i < a.values_.size(); ++i) {
            if (a.values_[i] < b.values_[i]) return true;
            if (b.values_[i] < a.values_[i]) return false;
        }
        return false;
    }

private:
    void check_group(const Character& other) const {
        if (group_ != other.group_) fail(errc::group_mismatch, "characters of different groups");
    }

    GroupSpec group_;
    std::vector<Scalar> values_;
};

}  // namespace hopfore
