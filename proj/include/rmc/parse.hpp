#pragma once

#include <stdexcept>
#include <string>

#include "rmc/memory.hpp"
#include "rmc/term.hpp"

namespace rmc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

/// Raised when a function symbol is used at two different arities.
struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses the concrete term syntax; `#` starts a comment running to end of
/// line. The result is in canonical right-nested sequence form. Uppercase
/// identifiers are variables, lowercase are function symbols / locations.
TermPtr parse_term(const std::string& text);

ValuePtr parse_value(const std::string& text);

/// `a: [t1, t2]; b: []` — the head of each stack is the last element.
Memory parse_memory(const std::string& text);

/// Reads a `.rmc` file: comments and blank lines skipped, one term.
TermPtr parse_term_file(const std::string& path);

}  // namespace rmc
