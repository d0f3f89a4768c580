#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamplight {

/// Malformed input while reading a graph file. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An odd vertex subset in which no vertex has odd out-degree.
/// Carries the offending subset (original vertex indices, ascending).
class PremiseViolation : public std::runtime_error {
public:
    explicit PremiseViolation(std::vector<std::size_t> subset)
        : std::runtime_error(describe(subset)), subset_(std::move(subset)) {}

    const std::vector<std::size_t>& subset() const { return subset_; }

private:
    static std::string describe(const std::vector<std::size_t>& s) {
        std::string msg = "no vertex of odd out-degree in odd subset {";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) msg += ",";
            msg += std::to_string(s[i]);
        }
        msg += "}";
        return msg;
    }

    std::vector<std::size_t> subset_;
};

/// An exhaustive search was refused because the instance exceeds its cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lamplight
