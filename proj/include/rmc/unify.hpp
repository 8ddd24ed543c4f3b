#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rmc/subst.hpp"
#include "rmc/term.hpp"
#include "rmc/value.hpp"

namespace rmc {

/// A set of formal equations between algebraic terms.
struct EquationSet {
    std::vector<std::pair<ValuePtr, ValuePtr>> equations;
};

/// Most general unifier, or nullopt when the set has no unifier (symbol
/// clash or occurs-check). Equation selection is leftmost-first so outputs
/// are reproducible. Independent of the machine; used as a cross-check.
std::optional<Subst> mgu(const EquationSet& e);

/// Nested-redex encoding on the default location:
/// [s_n];...;[s_1];<t_1>;...;<t_n>.
TermPtr encode_equations(const EquationSet& e);

/// True iff the two substitutions are equal up to a variable renaming,
/// checked by matching in both directions.
bool subst_eq_up_to_renaming(const Subst& a, const Subst& b);

}  // namespace rmc
