#include "rmc/unify.hpp"

#include <deque>
#include <functional>
#include <map>

namespace rmc {

std::optional<Subst> mgu(const EquationSet& e) {
    std::deque<std::pair<ValuePtr, ValuePtr>> work(e.equations.begin(), e.equations.end());
    Subst sol;
    while (!work.empty()) {
        auto [lhs, rhs] = work.front();
        work.pop_front();
        ValuePtr a = sol.apply(lhs);
        ValuePtr b = sol.apply(rhs);
        if (value_eq(a, b)) continue;
        if (a->is_var()) {
            if (occurs(a->name(), b)) return std::nullopt;
            sol = Subst::singleton(a->name(), b).compose(sol);
            continue;
        }
        if (b->is_var()) {
            if (occurs(b->name(), a)) return std::nullopt;
            sol = Subst::singleton(b->name(), a).compose(sol);
            continue;
        }
        if (a->name() != b->name() || a->arity() != b->arity()) return std::nullopt;
        for (size_t i = a->arity(); i-- > 0;)
            work.push_front({a->args()[i], b->args()[i]});
    }
    return sol;
}

TermPtr encode_equations(const EquationSet& e) {
    std::vector<TermPtr> atoms;
    for (size_t i = e.equations.size(); i-- > 0;)
        atoms.push_back(Term::push(e.equations[i].first));
    for (const auto& [s, t] : e.equations) atoms.push_back(Term::pop(kDefaultLoc, t));
    return seq_of(atoms);
}

namespace {

// One-sided matching: find a variable renaming rho with rho(a) == b
// pointwise on a's domain, where b may also bind extra variables renamed
// away by rho's domain.
bool match_renaming(const Subst& a, const Subst& b) {
    std::map<std::string, std::string> rho, rho_inv;
    // Renaming candidates relate a's bindings to b's.
    std::function<bool(const ValuePtr&, const ValuePtr&)> match =
        [&](const ValuePtr& va, const ValuePtr& vb) -> bool {
        if (va->is_var()) {
            if (!vb->is_var()) return false;
            auto it = rho.find(va->name());
            if (it != rho.end()) return it->second == vb->name();
            auto jt = rho_inv.find(vb->name());
            if (jt != rho_inv.end()) return false;
            rho[va->name()] = vb->name();
            rho_inv[vb->name()] = va->name();
            return true;
        }
        if (vb->is_var() || va->name() != vb->name() || va->arity() != vb->arity())
            return false;
        for (size_t i = 0; i < va->arity(); ++i)
            if (!match(va->args()[i], vb->args()[i])) return false;
        return true;
    };
    for (const auto& [x, v] : a.bindings()) {
        ValuePtr w = b.lookup(x);
        if (!w) {
            // b leaves x alone; a must map it to a renamed variable.
            if (!v->is_var()) return false;
            w = Value::var(x);
        }
        if (!match(v, w)) return false;
    }
    return true;
}

}  // namespace

bool subst_eq_up_to_renaming(const Subst& a, const Subst& b) {
    return match_renaming(a, b) && match_renaming(b, a);
}

}  // namespace rmc
