#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace propq {

// Rejected input: a denominator of zero where a rational was being formed.
class zero_denominator : public std::domain_error {
public:
    zero_denominator() : std::domain_error("zero denominator") {}
    explicit zero_denominator(const std::string& what) : std::domain_error(what) {}
};

// A verdict operation was handed an integer where a proper rational
// (denominator >= 2) is required.
class not_proper : public std::domain_error {
public:
    explicit not_proper(const std::string& what) : std::domain_error(what) {}
};

// Guard for reciprocal-style verdicts on zero.
class zero_value : public std::domain_error {
public:
    explicit zero_value(const std::string& what) : std::domain_error(what) {}
};

class recip_of_zero : public std::domain_error {
public:
    recip_of_zero() : std::domain_error("reciprocal of zero") {}
};

// Expression text that does not match the grammar. Carries the byte offset
// of the offending token and the token kinds acceptable at that point.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position,
                std::vector<std::string> expected)
        : std::runtime_error(compose(message, position, expected)),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string compose(const std::string& message, std::size_t position,
                               const std::vector<std::string>& expected) {
        std::string out = "parse error at position " + std::to_string(position) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

// A theorem predicate disagreed with the exact arithmetic it characterizes.
// The predicates implement proven equivalences, so this is always an
// implementation bug, never a data error.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// Cross-validation found a tuple where a verdict predicate and the
// brute-force oracle disagree; the message names the tuple.
class oracle_mismatch : public invariant_violation {
public:
    explicit oracle_mismatch(const std::string& what) : invariant_violation(what) {}
};

} // namespace propq
