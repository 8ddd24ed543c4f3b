#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rmc/memory.hpp"
#include "rmc/term.hpp"

namespace rmc {

struct Budget {
    size_t max_steps_per_path = 10000;
    size_t max_solutions = 100;
    size_t max_star_unfold = 32;
};

/// A machine configuration. `accum` records the substitutions applied so
/// far, restricted to the free variables of the run's initial term and
/// memory.
struct MachineState {
    Memory memory;
    TermPtr term;
    std::vector<TermPtr> continuation;  // back = next to run
    Subst accum;
    size_t steps = 0;
    size_t star_unfolds = 0;
};

struct StepOutcome {
    enum class Kind { Success, Stuck, Next };
    Kind kind;
    std::vector<MachineState> next;  // 1 or 2 branches
};

/// One transition. Success only when the term is skip and the continuation
/// is empty; a state where no rule applies is Stuck (zero branches).
StepOutcome step(const MachineState& s, const std::set<std::string>& initial_vars);

using EvalResult = std::pair<Memory, Subst>;

struct ResultMultiset {
    std::vector<EvalResult> elements;
    /// True iff the search provably enumerated every solution.
    bool exhausted = true;
};

enum class Strategy { Bfs, Iddfs };

/// Fair enumeration of the run tree rooted at (mem, m, empty continuation).
ResultMultiset explore(const Memory& mem, const TermPtr& m, const Budget& b,
                       Strategy strategy = Strategy::Bfs);

/// Structural big-step evaluation; agrees with `explore` up to fresh-name
/// canonicalization, exactly so on star-free terms.
ResultMultiset big_eval(const Memory& mem, const TermPtr& m, const Budget& b);

/// Renames machine-generated variables by first occurrence in a
/// deterministic traversal, making results comparable across runs.
EvalResult canonical_result(const EvalResult& r);

int result_cmp(const EvalResult& a, const EvalResult& b);

/// Canonicalized, sorted; duplicates removed (the underlying-set view).
std::vector<EvalResult> canonical_set(const ResultMultiset& rs);

/// Canonicalized, sorted, duplicates kept.
std::vector<EvalResult> canonical_multiset(const ResultMultiset& rs);

using MemorySampler = std::function<Memory(size_t)>;

enum class EquivMode { Equivalent, Refines };

struct Verdict {
    bool consistent = true;
    /// False when some evaluation hit a budget cap, weakening the verdict
    /// to consistent-up-to-budget.
    bool complete = true;
    std::optional<Memory> counterexample;
    std::string detail;
};

/// Compares the result sets of two terms over sampled memories.
Verdict machine_equiv(const TermPtr& a, const TermPtr& b, const MemorySampler& sampler,
                      size_t samples, const Budget& budget, EquivMode mode);

/// States along one successful run, for trace output; empty when no
/// successful run exists within budget.
std::vector<MachineState> first_successful_run(const Memory& mem, const TermPtr& m,
                                               const Budget& b);

/// True iff `inst` is obtained from `pat` by consistently instantiating
/// machine-generated variables. An output memory containing such variables
/// stands for all of its instances.
bool memory_instance_of(const Memory& inst, const Memory& pat);

}  // namespace rmc
