#ifndef TDC_ERRORS_HPP
#define TDC_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tdc {

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidColoring : std::invalid_argument {
    explicit InvalidColoring(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input; `line` is 1-based for edge lists, `column` is a
// 0-based byte offset for single-line encodings such as graph6.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", byte "
                             + std::to_string(column) + ": " + what),
          line(line),
          column(column)
    {
    }
    std::size_t line;
    std::size_t column;
};

// The graph has an isolated vertex (or fewer than two vertices), so no
// total dominator coloring exists.
struct NoTdcExists : std::runtime_error {
    explicit NoTdcExists(const std::string& what) : std::runtime_error(what) {}
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Search ran out of its node or time budget. `best_upper_bound` is the best
// incumbent value seen before the budget ran out, if any coloring was found.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::optional<int> best)
        : std::runtime_error(what), best_upper_bound(best)
    {
    }
    std::optional<int> best_upper_bound;
};

} // namespace tdc

#endif
