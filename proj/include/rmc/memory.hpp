#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmc/subst.hpp"
#include "rmc/value.hpp"

namespace rmc {

/// A family of stacks indexed by location name. The last element of each
/// vector is the head. Absent locations denote empty stacks; empty stacks
/// are pruned so equal memories compare equal.
class Memory {
public:
    Memory() = default;

    bool empty() const { return stacks_.empty(); }

    const std::vector<ValuePtr>* stack(const std::string& loc) const;
    size_t depth(const std::string& loc) const;

    void push(const std::string& loc, ValuePtr v);
    /// Head of the stack; nullptr when empty.
    ValuePtr head(const std::string& loc) const;
    void pop(const std::string& loc);

    Memory substituted(const Subst& s) const;

    std::set<std::string> vars() const;
    std::map<std::string, size_t> arities() const;

    const std::map<std::string, std::vector<ValuePtr>>& stacks() const { return stacks_; }

    bool operator==(const Memory& other) const;
    bool operator<(const Memory& other) const;

private:
    std::map<std::string, std::vector<ValuePtr>> stacks_;
};

}  // namespace rmc
