#include "rmc/gen.hpp"

#include <algorithm>

namespace rmc {

ValuePtr Gen::value(const TermOpts& o, const std::vector<std::string>& vars, size_t depth) {
    bool var_ok = !vars.empty();
    if (var_ok && chance(0.35)) return Value::var(vars[below(vars.size())]);
    std::vector<std::pair<std::string, size_t>> choices;
    for (const auto& fs : o.signature)
        if (depth > 0 || fs.second == 0) choices.push_back(fs);
    if (choices.empty()) {
        if (var_ok) return Value::var(vars[below(vars.size())]);
        return Value::fun("c");
    }
    auto [sym, arity] = choices[below(choices.size())];
    std::vector<ValuePtr> args;
    for (size_t i = 0; i < arity; ++i) args.push_back(value(o, vars, depth - 1));
    return Value::fun(sym, std::move(args));
}

TermPtr Gen::term_rec(const TermOpts& o, size_t& budget, std::vector<std::string>& scope) {
    if (budget == 0) return Term::skip();
    --budget;
    std::vector<std::string> vars = scope;
    if (!o.closed)
        vars.insert(vars.end(), o.free_pool.begin(), o.free_pool.end());
    // Weighted pick over constructors.
    enum { kPush, kPop, kSeq, kSum, kStar, kNew, kSkip, kZero };
    std::vector<int> options = {kPush, kPush, kPop, kPop, kSeq, kSeq, kSeq};
    if (o.allow_sum) options.push_back(kSum);
    if (o.allow_star) options.push_back(kStar);
    if (o.allow_new) {
        options.push_back(kNew);
        options.push_back(kNew);
    }
    options.push_back(kSkip);
    if (o.allow_sum) options.push_back(kZero);
    switch (options[below(options.size())]) {
        case kPush:
            return Term::push(value(o, vars, o.value_depth),
                              o.locations[below(o.locations.size())]);
        case kPop:
            return Term::pop(o.locations[below(o.locations.size())],
                             value(o, vars, o.value_depth));
        case kSeq: {
            TermPtr a = term_rec(o, budget, scope);
            TermPtr b = term_rec(o, budget, scope);
            return Term::seq(a, b);
        }
        case kSum: {
            TermPtr a = term_rec(o, budget, scope);
            TermPtr b = term_rec(o, budget, scope);
            return Term::sum(a, b);
        }
        case kStar:
            return Term::star(term_rec(o, budget, scope));
        case kNew: {
            std::string v = "B" + std::to_string(below(1000));
            scope.push_back(v);
            TermPtr body = term_rec(o, budget, scope);
            scope.pop_back();
            return Term::nu(v, body);
        }
        case kZero:
            return Term::zero();
        default:
            return Term::skip();
    }
}

TermPtr Gen::term(const TermOpts& o) {
    size_t budget = 1 + below(o.size);
    std::vector<std::string> scope;
    TermPtr t = term_rec(o, budget, scope);
    if (o.closed) {
        for (const auto& v : free_vars(t)) t = Term::nu(v, t);
    }
    return canonicalize_seq(t);
}

Memory Gen::memory(const TermOpts& o, size_t max_depth, bool closed_values) {
    Memory m;
    std::vector<std::string> vars;
    if (!closed_values) vars = o.free_pool;
    for (const auto& loc : o.locations) {
        size_t d = below(max_depth + 1);
        for (size_t i = 0; i < d; ++i) m.push(loc, value(o, vars, o.value_depth));
    }
    return m;
}

MemorySampler Gen::memory_sampler(const TermOpts& o, size_t max_depth, bool closed_values) {
    auto seed = rng_();
    return [o, max_depth, closed_values, seed](size_t i) {
        Gen g(seed + 0x9e3779b97f4a7c15ull * (i + 1));
        if (i == 0) return Memory{};  // the empty memory is always sampled
        return g.memory(o, max_depth, closed_values);
    };
}

}  // namespace rmc
