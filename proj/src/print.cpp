#include "rmc/print.hpp"

#include <functional>
#include <vector>

namespace rmc {

std::string print_value(const ValuePtr& v) {
    std::string out = v->name();
    if (v->is_fun() && !v->args().empty()) {
        out += '(';
        for (size_t i = 0; i < v->args().size(); ++i) {
            if (i) out += ", ";
            out += print_value(v->args()[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

// Binding strength: sum < new < seq < star < atom.
enum Level { kSum = 0, kNew = 1, kSeq = 2, kStar = 3, kAtom = 4 };

void print_rec(const TermPtr& t, int level, std::string& out);

void wrap(const TermPtr& t, int own, int level, std::string& out,
          const std::function<void()>& body) {
    (void)t;
    bool parens = own < level;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
}

void print_rec(const TermPtr& t, int level, std::string& out) {
    switch (t->kind()) {
        case TermKind::Skip:
            out += '*';
            return;
        case TermKind::Zero:
            out += '0';
            return;
        case TermKind::Push:
            out += '[';
            out += print_value(t->value());
            out += ']';
            if (t->loc() != kDefaultLoc) out += t->loc();
            return;
        case TermKind::Pop:
            if (t->loc() != kDefaultLoc) out += t->loc();
            out += '<';
            out += print_value(t->value());
            out += '>';
            return;
        case TermKind::Star:
            wrap(t, kStar, level, out, [&] {
                print_rec(t->child_a(), kAtom, out);
                out += "^*";
            });
            return;
        case TermKind::Sum:
            // Sums associate to the left in the parser.
            wrap(t, kSum, level, out, [&] {
                print_rec(t->child_a(), kSum, out);
                out += " + ";
                print_rec(t->child_b(), kSum + 1, out);
            });
            return;
        case TermKind::New:
            wrap(t, kNew, level, out, [&] {
                out += 'E';
                TermPtr body = t;
                while (true) {
                    out += ' ';
                    out += body->var();
                    TermPtr inner = body->child_a();
                    // Coalesce a chain of binders written E x y z. M.
                    if (inner->is(TermKind::New)) {
                        body = inner;
                        continue;
                    }
                    if (inner->is(TermKind::Seq) && inner->child_a()->is(TermKind::New) &&
                        inner->child_b()->is(TermKind::Skip)) {
                        body = inner->child_a();
                        continue;
                    }
                    out += ". ";
                    print_rec(inner, kNew, out);
                    return;
                }
            });
            return;
        case TermKind::Seq: {
            // Collect the chain; singleton sequences print as their element.
            std::vector<TermPtr> elems;
            TermPtr cur = t;
            while (cur->is(TermKind::Seq)) {
                elems.push_back(cur->child_a());
                cur = cur->child_b();
            }
            if (!cur->is(TermKind::Skip)) elems.push_back(cur);
            if (elems.size() == 1) {
                print_rec(elems[0], level, out);
                return;
            }
            wrap(t, kSeq, level, out, [&] {
                for (size_t i = 0; i < elems.size(); ++i) {
                    if (i) out += ';';
                    // A binder may stand unparenthesized only as the final
                    // element, where its scope runs to the end anyway.
                    int lvl = (i + 1 == elems.size()) ? kNew : kStar;
                    print_rec(elems[i], lvl, out);
                }
            });
            return;
        }
    }
}

}  // namespace

std::string print_term(const TermPtr& t) {
    std::string out;
    print_rec(t, kSum, out);
    return out;
}

std::string print_memory(const Memory& m) {
    if (m.stacks().empty()) return "";
    std::string out;
    bool first_loc = true;
    for (const auto& [loc, st] : m.stacks()) {
        if (!first_loc) out += "; ";
        first_loc = false;
        out += loc;
        out += ": [";
        for (size_t i = 0; i < st.size(); ++i) {
            if (i) out += ", ";
            out += print_value(st[i]);
        }
        out += ']';
    }
    return out;
}

std::string print_subst(const Subst& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, v] : s.bindings()) {
        if (!first) out += ", ";
        first = false;
        out += print_value(v);
        out += '/';
        out += x;
    }
    out += '}';
    return out;
}

}  // namespace rmc
