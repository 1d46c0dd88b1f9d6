#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace neutral {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON, word spellings, rule tables).
class parse_error : public error {
public:
    using error::error;
};

/// Well-formed input that violates an operation's precondition.
class data_error : public error {
public:
    using error::error;
};

/// A statistic was requested for a word too long for the truncation horizon.
class horizon_error : public data_error {
public:
    using data_error::data_error;
};

/// An IET point lies on a partition boundary.
class singularity_error : public data_error {
public:
    using data_error::data_error;
};

/// A verifier found a counterexample to the statement it checks.
class theorem_violation : public error {
public:
    theorem_violation(const std::string& what, std::optional<std::string> witness = std::nullopt)
        : error(what), witness_(std::move(witness)) {}

    const std::optional<std::string>& witness() const noexcept { return witness_; }

private:
    std::optional<std::string> witness_;
};

} // namespace neutral
