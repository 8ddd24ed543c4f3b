#include "rmc/subst.hpp"

namespace rmc {

Subst Subst::singleton(const std::string& var, ValuePtr v) {
    Subst s;
    s.bind(var, std::move(v));
    return s;
}

ValuePtr Subst::lookup(const std::string& var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? nullptr : it->second;
}

ValuePtr Subst::apply(const ValuePtr& v) const {
    if (bindings_.empty()) return v;
    if (v->is_var()) {
        auto bound = lookup(v->name());
        return bound ? bound : v;
    }
    bool changed = false;
    std::vector<ValuePtr> args;
    args.reserve(v->arity());
    for (const auto& a : v->args()) {
        auto a2 = apply(a);
        changed = changed || a2.get() != a.get();
        args.push_back(std::move(a2));
    }
    return changed ? Value::fun(v->name(), std::move(args)) : v;
}

Subst Subst::compose(const Subst& inner) const {
    Subst out;
    for (const auto& [x, v] : inner.bindings_) {
        auto v2 = apply(v);
        if (!(v2->is_var() && v2->name() == x)) out.bindings_[x] = v2;
    }
    for (const auto& [x, v] : bindings_) {
        if (!inner.bindings_.count(x)) out.bindings_[x] = v;
    }
    return out;
}

Subst Subst::restrict_to(const std::set<std::string>& vars) const {
    Subst out;
    for (const auto& [x, v] : bindings_)
        if (vars.count(x)) out.bindings_[x] = v;
    return out;
}

Subst Subst::without(const std::string& var) const {
    Subst out = *this;
    out.bindings_.erase(var);
    return out;
}

void Subst::bind(const std::string& var, ValuePtr v) {
    bindings_[var] = std::move(v);
}

bool Subst::operator==(const Subst& other) const {
    if (bindings_.size() != other.bindings_.size()) return false;
    auto it = other.bindings_.begin();
    for (const auto& [x, v] : bindings_) {
        if (it->first != x || !value_eq(it->second, v)) return false;
        ++it;
    }
    return true;
}

}  // namespace rmc
