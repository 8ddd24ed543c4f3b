#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rmc {

class Value;
using ValuePtr = std::shared_ptr<const Value>;

/// First-order algebraic term: a variable or a function symbol applied to
/// arguments. Constants are nullary applications. Values are immutable and
/// freely shared.
class Value {
public:
    static ValuePtr var(std::string name);
    static ValuePtr fun(std::string symbol, std::vector<ValuePtr> args = {});

    bool is_var() const { return is_var_; }
    bool is_fun() const { return !is_var_; }

    /// Variable name or function symbol.
    const std::string& name() const { return name_; }
    const std::vector<ValuePtr>& args() const { return args_; }
    size_t arity() const { return args_.size(); }

private:
    Value(bool is_var, std::string name, std::vector<ValuePtr> args)
        : is_var_(is_var), name_(std::move(name)), args_(std::move(args)) {}

    bool is_var_;
    std::string name_;
    std::vector<ValuePtr> args_;
};

bool value_eq(const ValuePtr& a, const ValuePtr& b);

/// True iff the variable named `var` occurs anywhere in `v`.
bool occurs(const std::string& var, const ValuePtr& v);

void collect_vars(const ValuePtr& v, std::set<std::string>& out);
std::set<std::string> value_vars(const ValuePtr& v);
bool is_ground(const ValuePtr& v);

/// Number of nodes.
size_t value_size(const ValuePtr& v);

/// Total order usable as a map key; structural.
int value_cmp(const ValuePtr& a, const ValuePtr& b);

}  // namespace rmc
