#include "rmc/memory.hpp"

namespace rmc {

const std::vector<ValuePtr>* Memory::stack(const std::string& loc) const {
    auto it = stacks_.find(loc);
    return it == stacks_.end() ? nullptr : &it->second;
}

size_t Memory::depth(const std::string& loc) const {
    auto s = stack(loc);
    return s ? s->size() : 0;
}

void Memory::push(const std::string& loc, ValuePtr v) {
    stacks_[loc].push_back(std::move(v));
}

ValuePtr Memory::head(const std::string& loc) const {
    auto s = stack(loc);
    return s && !s->empty() ? s->back() : nullptr;
}

void Memory::pop(const std::string& loc) {
    auto it = stacks_.find(loc);
    if (it == stacks_.end()) return;
    it->second.pop_back();
    if (it->second.empty()) stacks_.erase(it);
}

Memory Memory::substituted(const Subst& s) const {
    if (s.empty()) return *this;
    Memory out;
    for (const auto& [loc, st] : stacks_) {
        auto& dst = out.stacks_[loc];
        dst.reserve(st.size());
        for (const auto& v : st) dst.push_back(s.apply(v));
    }
    return out;
}

std::set<std::string> Memory::vars() const {
    std::set<std::string> out;
    for (const auto& [loc, st] : stacks_)
        for (const auto& v : st) collect_vars(v, out);
    return out;
}

std::map<std::string, size_t> Memory::arities() const {
    std::map<std::string, size_t> out;
    for (const auto& [loc, st] : stacks_) out[loc] = st.size();
    return out;
}

bool Memory::operator==(const Memory& other) const {
    if (stacks_.size() != other.stacks_.size()) return false;
    auto it = other.stacks_.begin();
    for (const auto& [loc, st] : stacks_) {
        if (it->first != loc || it->second.size() != st.size()) return false;
        for (size_t i = 0; i < st.size(); ++i)
            if (!value_eq(st[i], it->second[i])) return false;
        ++it;
    }
    return true;
}

bool Memory::operator<(const Memory& other) const {
    auto ia = stacks_.begin();
    auto ib = other.stacks_.begin();
    for (; ia != stacks_.end() && ib != other.stacks_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        const auto& sa = ia->second;
        const auto& sb = ib->second;
        for (size_t i = 0; i < sa.size() && i < sb.size(); ++i)
            if (int c = value_cmp(sa[i], sb[i])) return c < 0;
        if (sa.size() != sb.size()) return sa.size() < sb.size();
    }
    return ia == stacks_.end() && ib != other.stacks_.end();
}

}  // namespace rmc
