#include "rmc/term.hpp"

#include <atomic>
#include <map>

namespace rmc {

TermPtr Term::skip() {
    static const TermPtr t(new Term(TermKind::Skip, nullptr, nullptr, nullptr, ""));
    return t;
}

TermPtr Term::zero() {
    static const TermPtr t(new Term(TermKind::Zero, nullptr, nullptr, nullptr, ""));
    return t;
}

TermPtr Term::seq(TermPtr head, TermPtr tail) {
    return TermPtr(new Term(TermKind::Seq, std::move(head), std::move(tail), nullptr, ""));
}

TermPtr Term::star(TermPtr body) {
    return TermPtr(new Term(TermKind::Star, std::move(body), nullptr, nullptr, ""));
}

TermPtr Term::sum(TermPtr left, TermPtr right) {
    return TermPtr(new Term(TermKind::Sum, std::move(left), std::move(right), nullptr, ""));
}

TermPtr Term::push(ValuePtr v, std::string loc) {
    return TermPtr(new Term(TermKind::Push, nullptr, nullptr, std::move(v), std::move(loc)));
}

TermPtr Term::pop(std::string loc, ValuePtr v) {
    return TermPtr(new Term(TermKind::Pop, nullptr, nullptr, std::move(v), std::move(loc)));
}

TermPtr Term::nu(std::string var, TermPtr body) {
    return TermPtr(new Term(TermKind::New, std::move(body), nullptr, nullptr, std::move(var)));
}

TermPtr seq_of(const std::vector<TermPtr>& atoms) {
    TermPtr t = Term::skip();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) t = Term::seq(*it, t);
    return t;
}

TermPtr seq_concat(const TermPtr& a, const TermPtr& b) {
    if (a->is(TermKind::Skip)) return b;
    if (a->is(TermKind::Seq)) return Term::seq(a->child_a(), seq_concat(a->child_b(), b));
    return Term::seq(a, b);
}

namespace {
std::atomic<uint64_t> g_fresh_counter{0};
}

std::string fresh_var() {
    return "%" + std::to_string(++g_fresh_counter);
}

bool is_machine_var(const std::string& name) {
    return !name.empty() && name[0] == '%';
}

static void free_vars_rec(const TermPtr& t, std::set<std::string>& bound,
                          std::set<std::string>& out) {
    switch (t->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return;
        case TermKind::Seq:
        case TermKind::Sum:
            free_vars_rec(t->child_a(), bound, out);
            free_vars_rec(t->child_b(), bound, out);
            return;
        case TermKind::Star:
            free_vars_rec(t->child_a(), bound, out);
            return;
        case TermKind::Push:
        case TermKind::Pop: {
            std::set<std::string> vs;
            collect_vars(t->value(), vs);
            for (const auto& v : vs)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case TermKind::New: {
            bool added = bound.insert(t->var()).second;
            free_vars_rec(t->child_a(), bound, out);
            if (added) bound.erase(t->var());
            return;
        }
    }
}

std::set<std::string> free_vars(const TermPtr& t) {
    std::set<std::string> bound, out;
    free_vars_rec(t, bound, out);
    return out;
}

namespace {

void flatten_for_dual(const TermPtr& t, std::vector<TermPtr>& out);

TermPtr dual_raw(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return t;
        case TermKind::Seq: {
            std::vector<TermPtr> atoms;
            flatten_for_dual(t, atoms);
            std::vector<TermPtr> rev;
            for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
                rev.push_back(dual_raw(*it));
            return seq_of(rev);
        }
        case TermKind::Star:
            return Term::star(dual_raw(t->child_a()));
        case TermKind::Sum:
            return Term::sum(dual_raw(t->child_a()), dual_raw(t->child_b()));
        case TermKind::Push:
            return Term::pop(t->loc(), t->value());
        case TermKind::Pop:
            return Term::push(t->value(), t->loc());
        case TermKind::New:
            return Term::nu(t->var(), dual_raw(t->child_a()));
    }
    return t;
}

void flatten_for_dual(const TermPtr& t, std::vector<TermPtr>& out) {
    if (t->is(TermKind::Skip)) return;
    if (t->is(TermKind::Seq)) {
        flatten_for_dual(t->child_a(), out);
        flatten_for_dual(t->child_b(), out);
        return;
    }
    out.push_back(t);
}

}  // namespace

TermPtr dual(const TermPtr& t) {
    return canonicalize_seq(dual_raw(t));
}

namespace {

bool alpha_value(const ValuePtr& a, const ValuePtr& b,
                 const std::map<std::string, std::string>& ab,
                 const std::map<std::string, std::string>& ba) {
    if (a->is_var() != b->is_var()) return false;
    if (a->is_var()) {
        auto ia = ab.find(a->name());
        auto ib = ba.find(b->name());
        if (ia != ab.end() || ib != ba.end())
            return ia != ab.end() && ib != ba.end() && ia->second == b->name() &&
                   ib->second == a->name();
        return a->name() == b->name();  // both free
    }
    if (a->name() != b->name() || a->arity() != b->arity()) return false;
    for (size_t i = 0; i < a->arity(); ++i)
        if (!alpha_value(a->args()[i], b->args()[i], ab, ba)) return false;
    return true;
}

bool alpha_rec(const TermPtr& a, const TermPtr& b,
               std::map<std::string, std::string> ab,
               std::map<std::string, std::string> ba) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return true;
        case TermKind::Seq:
        case TermKind::Sum:
            return alpha_rec(a->child_a(), b->child_a(), ab, ba) &&
                   alpha_rec(a->child_b(), b->child_b(), ab, ba);
        case TermKind::Star:
            return alpha_rec(a->child_a(), b->child_a(), ab, ba);
        case TermKind::Push:
        case TermKind::Pop:
            return a->loc() == b->loc() && alpha_value(a->value(), b->value(), ab, ba);
        case TermKind::New: {
            ab[a->var()] = b->var();
            ba[b->var()] = a->var();
            return alpha_rec(a->child_a(), b->child_a(), std::move(ab), std::move(ba));
        }
    }
    return false;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    return alpha_rec(a, b, {}, {});
}

TermPtr apply_subst_term(const Subst& s, const TermPtr& t) {
    if (s.empty()) return t;
    switch (t->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return t;
        case TermKind::Seq:
            return Term::seq(apply_subst_term(s, t->child_a()),
                             apply_subst_term(s, t->child_b()));
        case TermKind::Sum:
            return Term::sum(apply_subst_term(s, t->child_a()),
                             apply_subst_term(s, t->child_b()));
        case TermKind::Star:
            return Term::star(apply_subst_term(s, t->child_a()));
        case TermKind::Push:
            return Term::push(s.apply(t->value()), t->loc());
        case TermKind::Pop:
            return Term::pop(t->loc(), s.apply(t->value()));
        case TermKind::New: {
            Subst inner = s.without(t->var());
            if (inner.empty()) return t;
            // Rename the binder when a codomain value would capture it.
            bool capture = false;
            auto fv = free_vars(t->child_a());
            for (const auto& [x, v] : inner.bindings()) {
                if (x != t->var() && fv.count(x) && occurs(t->var(), v)) {
                    capture = true;
                    break;
                }
            }
            std::string name = t->var();
            TermPtr body = t->child_a();
            if (capture) {
                name = fresh_var();
                body = apply_subst_term(Subst::singleton(t->var(), Value::var(name)), body);
            }
            return Term::nu(name, apply_subst_term(inner, body));
        }
    }
    return t;
}

namespace {

// Flattens a term into its top-level sequence atoms. Sequential units are
// structural: skip atoms vanish, so M;* and *;M flatten to M.
void flatten_seq(const TermPtr& t, std::vector<TermPtr>& out) {
    if (t->is(TermKind::Skip)) return;
    if (t->is(TermKind::Seq)) {
        flatten_seq(t->child_a(), out);
        flatten_seq(t->child_b(), out);
        return;
    }
    out.push_back(t);
}

TermPtr canon_atoms(std::vector<TermPtr> atoms, size_t i);
TermPtr canon_chain(std::vector<TermPtr> atoms);

TermPtr canon_atom(const TermPtr& a) {
    switch (a->kind()) {
        case TermKind::Star:
            return Term::star(canonicalize_seq(a->child_a()));
        case TermKind::Sum:
            return Term::sum(canonicalize_seq(a->child_a()),
                             canonicalize_seq(a->child_b()));
        case TermKind::New:
            return Term::nu(a->var(), canonicalize_seq(a->child_a()));
        default:
            return a;
    }
}

TermPtr canon_atoms(std::vector<TermPtr> atoms, size_t i) {
    if (i >= atoms.size()) return Term::skip();
    TermPtr head = canon_atom(atoms[i]);
    return Term::seq(std::move(head), canon_atoms(std::move(atoms), i + 1));
}

TermPtr canon_chain(std::vector<TermPtr> atoms) {
    TermPtr chain = canon_atoms(std::move(atoms), 0);
    // A one-element sequence is the element itself.
    if (chain->is(TermKind::Seq) && chain->child_b()->is(TermKind::Skip))
        return chain->child_a();
    return chain;
}

}  // namespace

TermPtr canonicalize_seq(const TermPtr& t) {
    std::vector<TermPtr> atoms;
    flatten_seq(t, atoms);
    return canon_chain(std::move(atoms));
}

size_t term_size(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return 1;
        case TermKind::Seq:
        case TermKind::Sum:
            return 1 + term_size(t->child_a()) + term_size(t->child_b());
        case TermKind::Star:
        case TermKind::New:
            return 1 + term_size(t->child_a());
        case TermKind::Push:
        case TermKind::Pop:
            return value_size(t->value());
    }
    return 1;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::Skip:
        case TermKind::Zero:
            return true;
        case TermKind::Seq:
        case TermKind::Sum:
            return term_eq(a->child_a(), b->child_a()) && term_eq(a->child_b(), b->child_b());
        case TermKind::Star:
            return term_eq(a->child_a(), b->child_a());
        case TermKind::Push:
        case TermKind::Pop:
            return a->loc() == b->loc() && value_eq(a->value(), b->value());
        case TermKind::New:
            return a->var() == b->var() && term_eq(a->child_a(), b->child_a());
    }
    return false;
}

TermPtr power(const TermPtr& m, size_t n) {
    TermPtr t = Term::skip();
    for (size_t i = 0; i < n; ++i) t = seq_concat(m, t);
    return t;
}

}  // namespace rmc
