#include "rmc/value.hpp"

namespace rmc {

ValuePtr Value::var(std::string name) {
    return ValuePtr(new Value(true, std::move(name), {}));
}

ValuePtr Value::fun(std::string symbol, std::vector<ValuePtr> args) {
    return ValuePtr(new Value(false, std::move(symbol), std::move(args)));
}

bool value_eq(const ValuePtr& a, const ValuePtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->is_var() != b->is_var() || a->name() != b->name()) return false;
    if (a->arity() != b->arity()) return false;
    for (size_t i = 0; i < a->arity(); ++i)
        if (!value_eq(a->args()[i], b->args()[i])) return false;
    return true;
}

bool occurs(const std::string& var, const ValuePtr& v) {
    if (v->is_var()) return v->name() == var;
    for (const auto& a : v->args())
        if (occurs(var, a)) return true;
    return false;
}

void collect_vars(const ValuePtr& v, std::set<std::string>& out) {
    if (v->is_var()) {
        out.insert(v->name());
        return;
    }
    for (const auto& a : v->args()) collect_vars(a, out);
}

std::set<std::string> value_vars(const ValuePtr& v) {
    std::set<std::string> out;
    collect_vars(v, out);
    return out;
}

bool is_ground(const ValuePtr& v) {
    if (v->is_var()) return false;
    for (const auto& a : v->args())
        if (!is_ground(a)) return false;
    return true;
}

size_t value_size(const ValuePtr& v) {
    size_t n = 1;
    for (const auto& a : v->args()) n += value_size(a);
    return n;
}

int value_cmp(const ValuePtr& a, const ValuePtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->is_var() != b->is_var()) return a->is_var() ? -1 : 1;
    if (int c = a->name().compare(b->name())) return c < 0 ? -1 : 1;
    if (a->arity() != b->arity()) return a->arity() < b->arity() ? -1 : 1;
    for (size_t i = 0; i < a->arity(); ++i)
        if (int c = value_cmp(a->args()[i], b->args()[i])) return c;
    return 0;
}

}  // namespace rmc
