#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmc/machine.hpp"
#include "rmc/term.hpp"

namespace rmc {

/// One identifier per oriented rewrite schema. KA_SkipSeq is retained for
/// completeness but cannot fire on canonical terms, where sequential units
/// are structural.
enum class RuleId {
    KA_StarUnfold,
    KA_DistL,
    KA_DistR,
    KA_SumZeroR,
    KA_SumZeroL,
    KA_SkipSeq,
    KA_SeqZeroR,
    KA_SeqZeroL,
    Nu_Drop,
    Nu_Float,
    Nu_Scope,  // (Ex.M);N contracts to Ex.(M;N), renaming as needed
    Nu_SumSplit,
    Beta_PushPop,
    Beta_PopPush,
    Ups_VarVar,
    Ups_Decompose,
    Ups_Clash,
    Ups_OccursL,
    Ups_OccursR,
    Pi_Permute,
};

const char* rule_name(RuleId id);

using Path = std::vector<int>;

struct Redex {
    RuleId rule;
    Path position;               // node the rewrite applies at
    std::optional<Path> binder;  // governing binder, for beta redexes
};

/// All positions where a rewrite schema matches; `m` must be canonical.
/// Beta redexes are found through runs of directly nested binders, i.e.
/// matching is modulo permutation of adjacent binders.
std::vector<Redex> redexes(const TermPtr& m);

/// The contractum, re-canonicalized. Faults if the redex is stale.
TermPtr apply_redex(const TermPtr& m, const Redex& r);

struct NormalizeResult {
    TermPtr term;
    bool reached_nf = false;
    size_t steps = 0;
    std::vector<std::pair<RuleId, Path>> trace;
};

/// Deterministic leftmost-innermost strategy; star-free terms always reach
/// a normal form, star unfolding stops at the fuel bound.
NormalizeResult normalize(const TermPtr& m, size_t fuel = 10000,
                          bool record_trace = false);

/// One sum-free summand of a star-free normal form: a binder prefix, pops,
/// then pushes.
struct PrefixNF {
    std::vector<std::string> binders;
    std::vector<std::pair<std::string, ValuePtr>> pops;
    std::vector<std::pair<std::string, ValuePtr>> pushes;
};

/// Sum decomposition of a normal form of a closed star-free term; the zero
/// term is the empty sum. nullopt when the shape is violated, which
/// signals a normaliser bug.
std::optional<std::vector<PrefixNF>> nf_decompose(const TermPtr& m);

/// Equality of normal forms: multiset equality of summands modulo binder
/// permutation and alpha. No idempotence collapse.
bool nf_equal(const TermPtr& a, const TermPtr& b);

/// Checks M refines M;dual(M);M over sampled memories, and full
/// equivalence when M is sum-free.
Verdict check_converse_law(const TermPtr& m, const MemorySampler& sampler,
                           size_t samples, const Budget& budget);

bool is_star_free(const TermPtr& t);
bool is_sum_free(const TermPtr& t);

}  // namespace rmc
