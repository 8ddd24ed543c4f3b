#pragma once

#include <string>

#include "rmc/memory.hpp"
#include "rmc/subst.hpp"
#include "rmc/term.hpp"

namespace rmc {

std::string print_value(const ValuePtr& v);

/// Concrete syntax with minimal parentheses; the output re-parses to an
/// alpha-equal term.
std::string print_term(const TermPtr& t);

/// `a: [t1, t2]; b: []` with the head listed last.
std::string print_memory(const Memory& m);

/// `{t1/x1, t2/x2}`.
std::string print_subst(const Subst& s);

}  // namespace rmc
