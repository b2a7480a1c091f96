#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polyface {

/// Incidence data whose intersection closure is not a graded lattice of the stated rank.
struct NonPolytopalInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a formula or builder.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotSimpleVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OriginNotInterior : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct VertexOnHyperplane : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoIntersection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDiagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in a construction expression; `position` is a 0-based byte offset.
struct ParseError : std::runtime_error {
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(format(position, expected, found)),
          position(position),
          expected(std::move(expected)) {}

    std::size_t position;
    std::vector<std::string> expected;

private:
    static std::string format(std::size_t pos, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "parse error at position " + std::to_string(pos) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
            msg += expected[i];
        }
        return msg + ", found " + found;
    }
};

}  // namespace polyface
