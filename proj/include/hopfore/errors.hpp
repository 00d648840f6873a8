#pragma once

#include <stdexcept>
#include <string>

namespace hopfore {

/// Machine-readable failure kinds. Every error thrown by the library carries
/// one of these so callers (CLI, tests) can react without string matching.
enum class errc {
    division_by_zero,
    zero_element,
    index_out_of_range,
    field_mismatch,
    field_too_small,
    group_mismatch,
    chi_a_equals_one,
    unsupported_regime,
    infinite_regime,
    regime_mismatch,
    zero_beta,
    syntax_error,
    semantic_error,
    dimension_mismatch,
    not_invariant,
    context_mismatch,
    eigenvalue_outside_candidates,
    internal_dimension_mismatch,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

    /// True for malformed input (grammar-level), false for well-formed input
    /// that violates a semantic rule. Drives the CLI exit-code contract.
    bool is_syntax() const noexcept { return code_ == errc::syntax_error || code_ == errc::io_error; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

/// Parse failures additionally carry the offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::string message, std::size_t position)
        : Error(errc::syntax_error, std::move(message)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hopfore
