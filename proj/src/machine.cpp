#include "rmc/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rmc {

namespace {

void substitute_state(MachineState& s, const Subst& sigma,
                      const std::set<std::string>& initial_vars) {
    s.memory = s.memory.substituted(sigma);
    for (auto& k : s.continuation) k = apply_subst_term(sigma, k);
    s.accum = sigma.compose(s.accum).restrict_to(initial_vars);
}

}  // namespace

StepOutcome step(const MachineState& s, const std::set<std::string>& initial_vars) {
    const TermPtr& t = s.term;
    switch (t->kind()) {
        case TermKind::Skip: {
            if (s.continuation.empty()) return {StepOutcome::Kind::Success, {}};
            MachineState n = s;
            n.term = n.continuation.back();
            n.continuation.pop_back();
            return {StepOutcome::Kind::Next, {std::move(n)}};
        }
        case TermKind::Zero:
            return {StepOutcome::Kind::Stuck, {}};
        case TermKind::Seq: {
            MachineState n = s;
            n.term = t->child_a();
            n.continuation.push_back(t->child_b());
            return {StepOutcome::Kind::Next, {std::move(n)}};
        }
        case TermKind::Star: {
            MachineState exit = s;
            exit.term = Term::skip();
            MachineState unfold = s;
            unfold.term = Term::seq(t->child_a(), t);
            unfold.star_unfolds += 1;
            return {StepOutcome::Kind::Next, {std::move(exit), std::move(unfold)}};
        }
        case TermKind::Sum: {
            MachineState l = s, r = s;
            l.term = t->child_a();
            r.term = t->child_b();
            return {StepOutcome::Kind::Next, {std::move(l), std::move(r)}};
        }
        case TermKind::Push: {
            MachineState n = s;
            n.memory.push(t->loc(), t->value());
            n.term = Term::skip();
            return {StepOutcome::Kind::Next, {std::move(n)}};
        }
        case TermKind::New: {
            MachineState n = s;
            std::string y = fresh_var();
            n.term = apply_subst_term(Subst::singleton(t->var(), Value::var(y)),
                                      t->child_a());
            return {StepOutcome::Kind::Next, {std::move(n)}};
        }
        case TermKind::Pop: {
            ValuePtr top = s.memory.head(t->loc());
            if (!top) return {StepOutcome::Kind::Stuck, {}};
            const ValuePtr& pat = t->value();
            if (pat->is_var() && top->is_var() && pat->name() == top->name()) {
                MachineState n = s;
                n.memory.pop(t->loc());
                n.term = Term::skip();
                return {StepOutcome::Kind::Next, {std::move(n)}};
            }
            if (pat->is_var()) {
                if (occurs(pat->name(), top)) return {StepOutcome::Kind::Stuck, {}};
                MachineState n = s;
                n.memory.pop(t->loc());
                Subst sigma = Subst::singleton(pat->name(), top);
                n.term = Term::skip();
                substitute_state(n, sigma, initial_vars);
                return {StepOutcome::Kind::Next, {std::move(n)}};
            }
            if (top->is_var()) {
                if (occurs(top->name(), pat)) return {StepOutcome::Kind::Stuck, {}};
                MachineState n = s;
                n.memory.pop(t->loc());
                Subst sigma = Subst::singleton(top->name(), pat);
                n.term = Term::skip();
                substitute_state(n, sigma, initial_vars);
                return {StepOutcome::Kind::Next, {std::move(n)}};
            }
            // Head-symbol decomposition: push the stacked arguments and pop
            // the pattern's arguments in reverse.
            if (pat->name() != top->name() || pat->arity() != top->arity())
                return {StepOutcome::Kind::Stuck, {}};
            MachineState n = s;
            n.memory.pop(t->loc());
            for (const auto& a : top->args()) n.memory.push(t->loc(), a);
            std::vector<TermPtr> pops;
            for (size_t i = pat->arity(); i-- > 0;)
                pops.push_back(Term::pop(t->loc(), pat->args()[i]));
            n.term = seq_of(pops);
            return {StepOutcome::Kind::Next, {std::move(n)}};
        }
    }
    return {StepOutcome::Kind::Stuck, {}};
}

namespace {

std::set<std::string> initial_vars_of(const Memory& mem, const TermPtr& m) {
    auto vars = free_vars(m);
    auto mv = mem.vars();
    vars.insert(mv.begin(), mv.end());
    return vars;
}

ResultMultiset explore_bfs(const Memory& mem, const TermPtr& m, const Budget& b) {
    ResultMultiset out;
    auto initial = initial_vars_of(mem, m);
    std::deque<MachineState> frontier;
    frontier.push_back({mem, m, {}, {}, 0, 0});
    while (!frontier.empty()) {
        if (out.elements.size() >= b.max_solutions) {
            out.exhausted = false;
            break;
        }
        MachineState s = std::move(frontier.front());
        frontier.pop_front();
        StepOutcome o = step(s, initial);
        switch (o.kind) {
            case StepOutcome::Kind::Success:
                out.elements.emplace_back(s.memory, s.accum);
                break;
            case StepOutcome::Kind::Stuck:
                break;
            case StepOutcome::Kind::Next:
                for (auto& n : o.next) {
                    n.steps = s.steps + 1;
                    if (n.steps > b.max_steps_per_path ||
                        n.star_unfolds > b.max_star_unfold) {
                        out.exhausted = false;
                        continue;
                    }
                    frontier.push_back(std::move(n));
                }
                break;
        }
    }
    return out;
}

ResultMultiset explore_iddfs(const Memory& mem, const TermPtr& m, const Budget& b) {
    ResultMultiset out;
    auto initial = initial_vars_of(mem, m);
    for (size_t depth = 0; depth <= b.max_steps_per_path; ++depth) {
        bool pruned = false;
        bool capped = false;
        // Depth-limited DFS collecting successes discovered exactly at
        // `depth`, so each solution is reported once across iterations.
        std::vector<MachineState> stack;
        stack.push_back({mem, m, {}, {}, 0, 0});
        while (!stack.empty()) {
            if (out.elements.size() >= b.max_solutions) {
                capped = true;
                break;
            }
            MachineState s = std::move(stack.back());
            stack.pop_back();
            StepOutcome o = step(s, initial);
            switch (o.kind) {
                case StepOutcome::Kind::Success:
                    if (s.steps == depth) out.elements.emplace_back(s.memory, s.accum);
                    break;
                case StepOutcome::Kind::Stuck:
                    break;
                case StepOutcome::Kind::Next:
                    for (auto it = o.next.rbegin(); it != o.next.rend(); ++it) {
                        auto& n = *it;
                        n.steps = s.steps + 1;
                        if (n.steps > depth || n.star_unfolds > b.max_star_unfold) {
                            if (n.steps > depth && n.star_unfolds <= b.max_star_unfold)
                                pruned = true;
                            else if (n.star_unfolds > b.max_star_unfold)
                                out.exhausted = false;
                            continue;
                        }
                        stack.push_back(std::move(n));
                    }
                    break;
            }
        }
        if (capped) {
            out.exhausted = false;
            break;
        }
        if (!pruned) return out;  // tree fully explored at this depth
    }
    if (out.exhausted) out.exhausted = false;
    return out;
}

}  // namespace

ResultMultiset explore(const Memory& mem, const TermPtr& m, const Budget& b,
                       Strategy strategy) {
    return strategy == Strategy::Bfs ? explore_bfs(mem, m, b) : explore_iddfs(mem, m, b);
}

namespace {

struct EvalCtx {
    const Budget& budget;
    bool exhausted = true;
};

std::vector<EvalResult> eval(const Memory& mem, const TermPtr& t, EvalCtx& ctx);

std::vector<EvalResult> eval_pop(const Memory& mem, const std::string& loc,
                                 const ValuePtr& pat, EvalCtx& ctx) {
    ValuePtr top = mem.head(loc);
    if (!top) return {};
    if (pat->is_var() && top->is_var() && pat->name() == top->name()) {
        Memory m2 = mem;
        m2.pop(loc);
        return {{std::move(m2), Subst{}}};
    }
    if (pat->is_var()) {
        if (occurs(pat->name(), top)) return {};
        Memory m2 = mem;
        m2.pop(loc);
        Subst sigma = Subst::singleton(pat->name(), top);
        return {{m2.substituted(sigma), std::move(sigma)}};
    }
    if (top->is_var()) {
        if (occurs(top->name(), pat)) return {};
        Memory m2 = mem;
        m2.pop(loc);
        Subst sigma = Subst::singleton(top->name(), pat);
        return {{m2.substituted(sigma), std::move(sigma)}};
    }
    if (pat->name() != top->name() || pat->arity() != top->arity()) return {};
    Memory m2 = mem;
    m2.pop(loc);
    for (const auto& a : top->args()) m2.push(loc, a);
    std::vector<TermPtr> pops;
    for (size_t i = pat->arity(); i-- > 0;) pops.push_back(Term::pop(loc, pat->args()[i]));
    return eval(m2, seq_of(pops), ctx);
}

std::vector<EvalResult> eval(const Memory& mem, const TermPtr& t, EvalCtx& ctx) {
    switch (t->kind()) {
        case TermKind::Skip:
            return {{mem, Subst{}}};
        case TermKind::Zero:
            return {};
        case TermKind::Seq: {
            std::vector<EvalResult> out;
            for (auto& [tm, sigma] : eval(mem, t->child_a(), ctx)) {
                TermPtr rhs = apply_subst_term(sigma, t->child_b());
                for (auto& [um, tau] : eval(tm, rhs, ctx))
                    out.emplace_back(um, tau.compose(sigma));
            }
            return out;
        }
        case TermKind::Sum: {
            auto out = eval(mem, t->child_a(), ctx);
            auto rhs = eval(mem, t->child_b(), ctx);
            out.insert(out.end(), rhs.begin(), rhs.end());
            return out;
        }
        case TermKind::Star: {
            // Layer n holds the results of the n-fold composition; the
            // multiset union over all layers is the star's value.
            struct Layer {
                Memory mem;
                Subst acc;
                TermPtr residual;
            };
            std::vector<EvalResult> out;
            out.emplace_back(mem, Subst{});
            std::vector<Layer> frontier{{mem, Subst{}, t->child_a()}};
            for (size_t n = 0; n < ctx.budget.max_star_unfold && !frontier.empty(); ++n) {
                std::vector<Layer> next;
                for (auto& layer : frontier) {
                    for (auto& [um, tau] : eval(layer.mem, layer.residual, ctx)) {
                        Subst acc = tau.compose(layer.acc);
                        out.emplace_back(um, acc);
                        next.push_back({um, std::move(acc),
                                        apply_subst_term(tau, layer.residual)});
                        if (out.size() > ctx.budget.max_solutions * 64) {
                            ctx.exhausted = false;
                            return out;
                        }
                    }
                }
                frontier = std::move(next);
            }
            if (!frontier.empty()) ctx.exhausted = false;
            return out;
        }
        case TermKind::Push: {
            Memory m2 = mem;
            m2.push(t->loc(), t->value());
            return {{std::move(m2), Subst{}}};
        }
        case TermKind::Pop:
            return eval_pop(mem, t->loc(), t->value(), ctx);
        case TermKind::New: {
            std::string y = fresh_var();
            TermPtr body =
                apply_subst_term(Subst::singleton(t->var(), Value::var(y)), t->child_a());
            auto results = eval(mem, body, ctx);
            for (auto& [tm, sigma] : results) sigma = sigma.without(y);
            return results;
        }
    }
    return {};
}

}  // namespace

ResultMultiset big_eval(const Memory& mem, const TermPtr& m, const Budget& b) {
    EvalCtx ctx{b};
    auto initial = initial_vars_of(mem, m);
    auto results = eval(mem, m, ctx);
    ResultMultiset out;
    out.exhausted = ctx.exhausted;
    if (results.size() > b.max_solutions) {
        results.resize(b.max_solutions);
        out.exhausted = false;
    }
    out.elements.reserve(results.size());
    for (auto& [tm, sigma] : results)
        out.elements.emplace_back(std::move(tm), sigma.restrict_to(initial));
    return out;
}

namespace {

void canonical_scan(const ValuePtr& v, std::map<std::string, std::string>& rename,
                    size_t& counter) {
    if (v->is_var()) {
        if (is_machine_var(v->name()) && !rename.count(v->name()))
            rename[v->name()] = "%" + std::to_string(++counter);
        return;
    }
    for (const auto& a : v->args()) canonical_scan(a, rename, counter);
}

ValuePtr rename_value(const ValuePtr& v, const std::map<std::string, std::string>& rename) {
    if (v->is_var()) {
        auto it = rename.find(v->name());
        return it == rename.end() ? v : Value::var(it->second);
    }
    if (v->args().empty()) return v;
    std::vector<ValuePtr> args;
    args.reserve(v->arity());
    for (const auto& a : v->args()) args.push_back(rename_value(a, rename));
    return Value::fun(v->name(), std::move(args));
}

}  // namespace

EvalResult canonical_result(const EvalResult& r) {
    std::map<std::string, std::string> rename;
    size_t counter = 0;
    for (const auto& [loc, st] : r.first.stacks())
        for (const auto& v : st) canonical_scan(v, rename, counter);
    for (const auto& [x, v] : r.second.bindings()) canonical_scan(v, rename, counter);
    if (rename.empty()) return r;
    Memory mem;
    for (const auto& [loc, st] : r.first.stacks())
        for (const auto& v : st) mem.push(loc, rename_value(v, rename));
    Subst sub;
    for (const auto& [x, v] : r.second.bindings()) {
        auto it = rename.find(x);
        sub.bind(it == rename.end() ? x : it->second, rename_value(v, rename));
    }
    return {std::move(mem), std::move(sub)};
}

int result_cmp(const EvalResult& a, const EvalResult& b) {
    if (a.first < b.first) return -1;
    if (b.first < a.first) return 1;
    auto ia = a.second.bindings().begin();
    auto ib = b.second.bindings().begin();
    for (; ia != a.second.bindings().end() && ib != b.second.bindings().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (int c = value_cmp(ia->second, ib->second)) return c;
    }
    if (ia != a.second.bindings().end()) return 1;
    if (ib != b.second.bindings().end()) return -1;
    return 0;
}

static std::vector<EvalResult> canonical_sorted(const ResultMultiset& rs) {
    std::vector<EvalResult> out;
    out.reserve(rs.elements.size());
    for (const auto& r : rs.elements) out.push_back(canonical_result(r));
    std::sort(out.begin(), out.end(),
              [](const EvalResult& a, const EvalResult& b) { return result_cmp(a, b) < 0; });
    return out;
}

std::vector<EvalResult> canonical_set(const ResultMultiset& rs) {
    auto out = canonical_sorted(rs);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const EvalResult& a, const EvalResult& b) {
                              return result_cmp(a, b) == 0;
                          }),
              out.end());
    return out;
}

std::vector<EvalResult> canonical_multiset(const ResultMultiset& rs) {
    return canonical_sorted(rs);
}

namespace {

bool subset_of(const std::vector<EvalResult>& a, const std::vector<EvalResult>& b) {
    size_t j = 0;
    for (const auto& x : a) {
        while (j < b.size() && result_cmp(b[j], x) < 0) ++j;
        if (j == b.size() || result_cmp(b[j], x) != 0) return false;
    }
    return true;
}

}  // namespace

Verdict machine_equiv(const TermPtr& a, const TermPtr& b, const MemorySampler& sampler,
                      size_t samples, const Budget& budget, EquivMode mode) {
    Verdict v;
    for (size_t i = 0; i < samples; ++i) {
        Memory mem = sampler(i);
        auto ra = big_eval(mem, a, budget);
        auto rb = big_eval(mem, b, budget);
        v.complete = v.complete && ra.exhausted && rb.exhausted;
        auto sa = canonical_set(ra);
        auto sb = canonical_set(rb);
        bool ok = mode == EquivMode::Equivalent
                      ? sa.size() == sb.size() && subset_of(sa, sb)
                      : subset_of(sa, sb);
        if (!ok) {
            v.consistent = false;
            v.counterexample = mem;
            v.detail = "result sets differ (" + std::to_string(sa.size()) + " vs " +
                       std::to_string(sb.size()) + " canonical results)";
            return v;
        }
    }
    return v;
}

namespace {

bool value_instance_of(const ValuePtr& inst, const ValuePtr& pat, Subst& binding) {
    if (pat->is_var() && is_machine_var(pat->name())) {
        if (auto bound = binding.lookup(pat->name())) return value_eq(bound, inst);
        binding.bind(pat->name(), inst);
        return true;
    }
    if (pat->is_var() || inst->is_var())
        return inst->is_var() && pat->is_var() && inst->name() == pat->name();
    if (pat->name() != inst->name() || pat->arity() != inst->arity()) return false;
    for (size_t i = 0; i < pat->arity(); ++i)
        if (!value_instance_of(inst->args()[i], pat->args()[i], binding)) return false;
    return true;
}

}  // namespace

bool memory_instance_of(const Memory& inst, const Memory& pat) {
    if (inst.stacks().size() != pat.stacks().size()) return false;
    Subst binding;
    auto ip = pat.stacks().begin();
    for (const auto& [loc, st] : inst.stacks()) {
        if (ip->first != loc || ip->second.size() != st.size()) return false;
        for (size_t i = 0; i < st.size(); ++i)
            if (!value_instance_of(st[i], ip->second[i], binding)) return false;
        ++ip;
    }
    return true;
}

std::vector<MachineState> first_successful_run(const Memory& mem, const TermPtr& m,
                                               const Budget& b) {
    auto initial = initial_vars_of(mem, m);
    struct Node {
        MachineState state;
        ptrdiff_t parent;
    };
    std::vector<Node> arena;
    arena.push_back({{mem, m, {}, {}, 0, 0}, -1});
    std::deque<size_t> frontier{0};
    size_t expanded = 0;
    while (!frontier.empty()) {
        size_t idx = frontier.front();
        frontier.pop_front();
        MachineState s = arena[idx].state;
        StepOutcome o = step(s, initial);
        if (o.kind == StepOutcome::Kind::Success) {
            std::vector<MachineState> path;
            for (ptrdiff_t i = static_cast<ptrdiff_t>(idx); i >= 0; i = arena[i].parent)
                path.push_back(arena[i].state);
            std::reverse(path.begin(), path.end());
            return path;
        }
        if (o.kind != StepOutcome::Kind::Next) continue;
        if (++expanded > b.max_steps_per_path * 64) break;
        for (auto& n : o.next) {
            n.steps = s.steps + 1;
            if (n.steps > b.max_steps_per_path || n.star_unfolds > b.max_star_unfold)
                continue;
            arena.push_back({std::move(n), static_cast<ptrdiff_t>(idx)});
            frontier.push_back(arena.size() - 1);
        }
    }
    return {};
}

}  // namespace rmc
