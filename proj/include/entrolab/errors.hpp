#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entrolab {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: mismatched variable counts, mixed coefficient fields,
// invalid presentations. Maps to CLI exit code 1.
class structural_error : public error {
public:
    explicit structural_error(const std::string& what) : error(what) {}
};

// Expression or job-file syntax error; `position` is a 0-based byte offset
// into the offending source text (or a line number for job files).
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A guardrail tripped: more standard monomials than the configured cap.
class capacity_error : public error {
public:
    capacity_error(const std::string& what, std::uint64_t cap)
        : error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

// The truncation ladder failed to stabilize below the cap: the ideal is not
// m-primary, or the cap is too small. Carries the ladder so callers can show
// their work. Maps to CLI exit code 2.
class not_finite_length : public error {
public:
    using Ladder = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

    not_finite_length(const std::string& what, Ladder ladder)
        : error(what), ladder_(std::move(ladder)) {}

    const Ladder& ladder() const { return ladder_; }

private:
    Ladder ladder_;
};

// Growth-base q was not supplied and cannot be inferred (the lambda sequence
// is not multiplicative); the library refuses to guess a limit.
class q_unavailable : public error {
public:
    explicit q_unavailable(const std::string& what) : error(what) {}
};

} // namespace entrolab
