#pragma once

#include <map>
#include <set>
#include <string>

#include "rmc/value.hpp"

namespace rmc {

/// Finite map from variable names to values. Kept idempotent in the MGU
/// sense: after composition no domain variable occurs in a codomain value.
class Subst {
public:
    Subst() = default;
    static Subst singleton(const std::string& var, ValuePtr v);

    bool empty() const { return bindings_.empty(); }
    size_t size() const { return bindings_.size(); }

    /// nullptr when unbound.
    ValuePtr lookup(const std::string& var) const;

    ValuePtr apply(const ValuePtr& v) const;

    /// Composition `this ∘ inner`: applying the result equals applying
    /// `inner` first and then `this`.
    Subst compose(const Subst& inner) const;

    Subst restrict_to(const std::set<std::string>& vars) const;
    Subst without(const std::string& var) const;

    void bind(const std::string& var, ValuePtr v);

    const std::map<std::string, ValuePtr>& bindings() const { return bindings_; }

    bool operator==(const Subst& other) const;

private:
    std::map<std::string, ValuePtr> bindings_;
};

}  // namespace rmc
