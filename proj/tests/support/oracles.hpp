#pragma once

// Independent reference implementations used to cross-check the main code
// paths. Everything here is deliberately written against the source models
// directly, not against the library's evaluators.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rmc/gen.hpp"
#include "rmc/memory.hpp"
#include "rmc/term.hpp"
#include "rmc/unify.hpp"
#include "rmc/value.hpp"

namespace rmc::oracles {

/// Renames every binder in `t` to a fresh name (alpha-equivalent copy).
TermPtr freshen_binders(const TermPtr& t);

/// Random equation set with bounded variables and value depth.
EquationSet random_equations(Gen& g, size_t max_eqs, size_t max_vars, size_t depth);

// ---- regular expressions (Brzozowski derivatives) ----

struct Regex {
    enum class Kind { Empty, Eps, Lit, Cat, Alt, Star } kind;
    char lit = 0;
    std::shared_ptr<Regex> a, b;
};
using RegexPtr = std::shared_ptr<Regex>;

RegexPtr re_empty();
RegexPtr re_eps();
RegexPtr re_lit(char c);
RegexPtr re_cat(RegexPtr a, RegexPtr b);
RegexPtr re_alt(RegexPtr a, RegexPtr b);
RegexPtr re_star(RegexPtr a);

bool re_matches(const RegexPtr& r, const std::string& word);

/// All words over `alphabet` of length <= max_len accepted by `r`.
std::set<std::string> re_language(const RegexPtr& r, const std::string& alphabet,
                                  size_t max_len);

RegexPtr random_regex(Gen& g, size_t size, const std::string& alphabet);

// ---- Prolog (SLD resolution, breadth-first) ----

struct Clause {
    ValuePtr head;
    std::vector<ValuePtr> body;
};

/// Answer instances of the query, found by fair SLD resolution; bounded by
/// `max_depth` resolution steps and `max_solutions`.
std::vector<ValuePtr> sld_solve(const ValuePtr& query, const std::vector<Clause>& program,
                                size_t max_depth, size_t max_solutions);

// ---- Turing machines ----

struct TmRule {
    std::string state, read, next_state, write;
    bool move_right = false;
};

struct Tm {
    std::string initial, halting, blank;
    std::vector<TmRule> rules;
};

struct TmResult {
    bool halted = false;
    std::vector<std::string> left;   // left of head, leftmost first
    std::vector<std::string> right;  // head and rightwards, head first
};

TmResult tm_run(const Tm& tm, const std::vector<std::string>& input, size_t max_steps);

// ---- guarded commands ----

struct GclExpr {
    enum class Kind { True, False, Num, Deref, Geq, Leq, Eq } kind;
    long num = 0;
    std::string cell;
    std::shared_ptr<GclExpr> a, b;
};

struct GclCmd;  // guarded command
struct GclStmt {
    enum class Kind { Skip, Seq, Assign, If, Do } kind;
    std::shared_ptr<GclStmt> s1, s2;
    std::string cell;
    std::shared_ptr<GclExpr> expr;
    std::shared_ptr<GclCmd> cmd;
};

struct GclCmd {
    enum class Kind { Abort, Alt, Guard } kind;
    std::shared_ptr<GclCmd> c1, c2;
    std::shared_ptr<GclExpr> guard;
    std::shared_ptr<GclStmt> body;
};

using GclState = std::map<std::string, long>;

/// All final states of a statement under the non-deterministic semantics;
/// bounded exploration.
std::set<GclState> gcl_run(const std::shared_ptr<GclStmt>& s, const GclState& init,
                           size_t max_steps);

// ---- interaction nets ----

struct InetRule {
    ValuePtr lhs, rhs;  // lhs >< rhs, variables shared
};

struct InetConfig {
    std::vector<ValuePtr> terms;                          // the interface stack
    std::vector<std::pair<ValuePtr, ValuePtr>> equations;
};

/// Reduces a configuration to normal form (empty equation set) if possible
/// within the step bound; nullopt when stuck or out of fuel.
std::optional<InetConfig> inet_normalize(const InetConfig& c,
                                         const std::vector<InetRule>& rules,
                                         size_t max_steps);

// ---- Petri nets ----

using Marking = std::map<std::string, size_t>;

struct PetriTransition {
    std::vector<std::string> pre, post;
};

/// All markings reachable within `max_tokens` total tokens and the step
/// bound, via breadth-first search over the marking graph.
std::set<Marking> petri_reachable(const Marking& init,
                                  const std::vector<PetriTransition>& ts,
                                  size_t max_steps);

}  // namespace rmc::oracles
