#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rmc/subst.hpp"
#include "rmc/value.hpp"

namespace rmc {

/// The reserved default location.
inline const std::string kDefaultLoc = "_";

enum class TermKind : uint8_t { Skip, Seq, Star, Zero, Sum, Push, Pop, New };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Computation term. Immutable, freely shared. `Seq` chains are kept
/// right-nested and Skip-terminated by `canonicalize_seq`; the parser
/// always returns that form.
class Term {
public:
    static TermPtr skip();
    static TermPtr zero();
    static TermPtr seq(TermPtr head, TermPtr tail);
    static TermPtr star(TermPtr body);
    static TermPtr sum(TermPtr left, TermPtr right);
    static TermPtr push(ValuePtr v, std::string loc = kDefaultLoc);
    static TermPtr pop(std::string loc, ValuePtr v);
    static TermPtr nu(std::string var, TermPtr body);  // new-variable binder

    TermKind kind() const { return kind_; }
    bool is(TermKind k) const { return kind_ == k; }

    const TermPtr& child_a() const { return a_; }  // Seq head, Sum left, Star/New body
    const TermPtr& child_b() const { return b_; }  // Seq tail, Sum right
    const ValuePtr& value() const { return value_; }
    const std::string& loc() const { return name_; }  // Push/Pop
    const std::string& var() const { return name_; }  // New

private:
    Term(TermKind k, TermPtr a, TermPtr b, ValuePtr v, std::string name)
        : kind_(k), a_(std::move(a)), b_(std::move(b)), value_(std::move(v)),
          name_(std::move(name)) {}

    TermKind kind_;
    TermPtr a_, b_;
    ValuePtr value_;
    std::string name_;
};

/// Builds the right-nested sequence a1;(a2;(...;(an;*)...)) from atoms.
TermPtr seq_of(const std::vector<TermPtr>& atoms);

/// Sequential composition of two terms, reusing canonical structure.
TermPtr seq_concat(const TermPtr& a, const TermPtr& b);

/// Globally fresh variable `%n`; the namespace is disjoint from parseable
/// user identifiers.
std::string fresh_var();
bool is_machine_var(const std::string& name);

std::set<std::string> free_vars(const TermPtr& t);

/// Syntactic duality: reverses composition, swaps push/pop, fixes the rest.
TermPtr dual(const TermPtr& t);

/// Equality up to renaming of bound variables.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

/// Capture-avoiding substitution into all values of a term.
TermPtr apply_subst_term(const Subst& s, const TermPtr& t);

/// Right-nests every sequence, terminates it with Skip, and extends the
/// scope of a binder occurring mid-sequence to the end of that sequence
/// (renaming the binder when needed).
TermPtr canonicalize_seq(const TermPtr& t);

size_t term_size(const TermPtr& t);

/// Structural equality (exact, not alpha).
bool term_eq(const TermPtr& a, const TermPtr& b);

/// The n-fold composition M;(M;...;(M;*)); n = 0 gives Skip.
TermPtr power(const TermPtr& m, size_t n);

}  // namespace rmc
