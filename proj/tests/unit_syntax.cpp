#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmc/gen.hpp"
#include "rmc/parse.hpp"
#include "rmc/print.hpp"
#include "rmc/term.hpp"
#include "support/oracles.hpp"

using namespace rmc;

TEST_CASE("precedence: star, then seq, then new, then sum") {
    TermPtr t = parse_term("[c];<c> + [c]^*");
    REQUIRE(t->is(TermKind::Sum));
    TermPtr lhs = t->child_a();
    REQUIRE(lhs->is(TermKind::Seq));
    CHECK(lhs->child_a()->is(TermKind::Push));
    CHECK(lhs->child_b()->child_a()->is(TermKind::Pop));
    TermPtr rhs = t->child_b();
    CHECK(rhs->is(TermKind::Star));

    TermPtr full = parse_term("E X.[X];<c> + [d];[e]^*");
    REQUIRE(full->is(TermKind::Sum));
    CHECK(full->child_a()->is(TermKind::New));
}

TEST_CASE("skip and zero literals") {
    CHECK(parse_term("*")->is(TermKind::Skip));
    CHECK(term_eq(parse_term("0"), canonicalize_seq(Term::zero())));
}

TEST_CASE("binder swallows the rest of its sequence") {
    TermPtr a = parse_term("[c]; E X. <X>;[X]");
    TermPtr b = parse_term("[c]; (E X. (<X>;[X]))");
    CHECK(alpha_eq(a, b));
}

TEST_CASE("binder sugar E X Y. M") {
    CHECK(alpha_eq(parse_term("E X Y. <X>;<Y>"), parse_term("E X. E Y. <X>;<Y>")));
}

TEST_CASE("parse errors carry a position; arity clashes are rejected") {
    CHECK_THROWS_AS(parse_term("[c];"), ParseError);
    CHECK_THROWS_AS(parse_term("E .M"), ParseError);
    CHECK_THROWS_AS(parse_term("<f(c)>;[f(c,d)]"), ArityError);
}

TEST_CASE("print: worked permutation term") {
    std::vector<TermPtr> atoms;
    for (const char* v : {"X", "Y", "Z"}) atoms.push_back(Term::pop(kDefaultLoc, Value::var(v)));
    for (const char* v : {"X", "Z", "Y"}) atoms.push_back(Term::push(Value::var(v)));
    CHECK(print_term(seq_of(atoms)) == "<X>;<Y>;<Z>;[X];[Z];[Y]");
}

TEST_CASE("print: parentheses under star") {
    TermPtr t = Term::star(Term::sum(canonicalize_seq(Term::push(Value::fun("c"))),
                                     canonicalize_seq(Term::push(Value::fun("d")))));
    std::string s = print_term(t);
    CHECK(s == "([c] + [d])^*");
    CHECK(alpha_eq(parse_term(s), canonicalize_seq(t)));
}

TEST_CASE("round-trip: parse after print is alpha-equal (1000 random terms)") {
    Gen g(20240901);
    Gen::TermOpts o;
    o.allow_star = true;
    for (int i = 0; i < 1000; ++i) {
        TermPtr t = g.term(o);
        TermPtr back = parse_term(print_term(t));
        CAPTURE(print_term(t));
        REQUIRE(alpha_eq(back, t));
    }
}

TEST_CASE("free_vars") {
    CHECK(free_vars(parse_term("E X.<X>;[X]")).empty());
    CHECK(free_vars(parse_term("[X];<c>")) == std::set<std::string>{"X"});
    CHECK(free_vars(parse_term("E X.[f(X,Y)]")) == std::set<std::string>{"Y"});
}

TEST_CASE("substitution into terms") {
    Subst s = Subst::singleton("X", Value::fun("c"));
    CHECK(alpha_eq(apply_subst_term(s, parse_term("[X];<X>")), parse_term("[c];<c>")));

    // Binder renamed to avoid capturing the substituted value.
    Subst cap = Subst::singleton("X", Value::var("Y"));
    TermPtr t = apply_subst_term(cap, parse_term("E Y.[X]"));
    CHECK(alpha_eq(t, parse_term("E W.[Y]")));

    Subst nest = Subst::singleton("X", Value::fun("f", {Value::var("Z")}));
    CHECK(alpha_eq(apply_subst_term(nest, parse_term("<f(X)>")), parse_term("<f(f(Z))>")));
}

TEST_CASE("substitution free-variable flow") {
    Gen g(77);
    Gen::TermOpts o;
    for (int i = 0; i < 300; ++i) {
        TermPtr m = g.term(o);
        auto fv = free_vars(m);
        if (!fv.count("X")) continue;
        ValuePtr v = g.value(o, {"Y"}, 2);
        TermPtr m2 = apply_subst_term(Subst::singleton("X", v), m);
        auto fv2 = free_vars(m2);
        std::set<std::string> expected = fv;
        expected.erase("X");
        for (const auto& w : value_vars(v)) expected.insert(w);
        for (const auto& w : fv2) CHECK(expected.count(w));
    }
}

TEST_CASE("compose: unit, worked example, action on 200 random triples") {
    Subst sigma = Subst::singleton("X", Value::fun("f", {Value::var("Y")}));
    Subst tau = Subst::singleton("Y", Value::fun("c"));
    Subst composed = tau.compose(sigma);
    CHECK(value_eq(composed.lookup("X"), parse_value("f(c)")));
    CHECK(value_eq(composed.lookup("Y"), parse_value("c")));

    CHECK(Subst{}.compose(sigma) == sigma);
    CHECK(sigma.compose(Subst{}) == sigma);

    Gen g(1234);
    Gen::TermOpts o;
    for (int i = 0; i < 200; ++i) {
        Subst a = Subst::singleton("X", g.value(o, {"Y", "Z"}, 2));
        Subst b = Subst::singleton(i % 2 ? "Y" : "Z", g.value(o, {"W"}, 2));
        Subst c = Subst::singleton("W", g.value(o, {}, 2));
        ValuePtr v = g.value(o, {"X", "Y", "Z", "W"}, 3);
        CHECK(value_eq(c.compose(b).compose(a).apply(v),
                       c.compose(b.compose(a)).apply(v)));
        CHECK(value_eq(b.compose(a).apply(v), b.apply(a.apply(v))));
        TermPtr m = g.term(o);
        CHECK(alpha_eq(apply_subst_term(b.compose(a), m),
                       apply_subst_term(b, apply_subst_term(a, m))));
    }
}

TEST_CASE("dual: worked example and fixpoints") {
    TermPtr t = parse_term("<X>;<Y>;<Z>;[X];[Z];[Y]");
    CHECK(print_term(dual(t)) == "<Y>;<Z>;<X>;[Z];[Y];[X]");
    CHECK(print_term(dual(parse_term("*"))) == "*");
    CHECK(print_term(dual(parse_term("0"))) == "0");
}

TEST_CASE("dual is an involution (1000 random terms)") {
    Gen g(4242);
    Gen::TermOpts o;
    o.allow_star = true;
    for (int i = 0; i < 1000; ++i) {
        TermPtr t = g.term(o);
        REQUIRE(alpha_eq(dual(dual(t)), t));
    }
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(parse_term("E X.[X]"), parse_term("E Y.[Y]")));
    CHECK_FALSE(alpha_eq(parse_term("E X.[X]"), parse_term("E X.[c]")));
    CHECK_FALSE(alpha_eq(parse_term("[X]"), parse_term("[Y]")));  // free vars differ

    Gen g(99);
    Gen::TermOpts o;
    for (int i = 0; i < 300; ++i) {
        TermPtr t = g.term(o);
        CHECK(alpha_eq(t, oracles::freshen_binders(t)));
    }
}

TEST_CASE("canonical sequences are right-nested, skip-terminated, idempotent") {
    TermPtr t = canonicalize_seq(
        Term::seq(Term::seq(parse_term("[a1]"), parse_term("[a2]")), parse_term("[a3]")));
    REQUIRE(t->is(TermKind::Seq));
    CHECK(t->child_a()->is(TermKind::Push));
    CHECK(t->child_b()->child_b()->child_b()->is(TermKind::Skip));
    CHECK(term_eq(canonicalize_seq(t), t));
    CHECK(term_eq(canonicalize_seq(Term::skip()), Term::skip()));

    Gen g(7);
    Gen::TermOpts o;
    o.allow_star = true;
    for (int i = 0; i < 200; ++i) {
        TermPtr m = g.term(o);
        CHECK(term_eq(canonicalize_seq(m), m));  // generator output is canonical
    }
}

TEST_CASE("memory literals parse and print with head last") {
    Memory m = parse_memory("_: [e, d, c]; a: [f(X)]");
    REQUIRE(m.depth("_") == 3);
    CHECK(value_eq(m.head("_"), parse_value("c")));
    CHECK(print_memory(m) == "_: [e, d, c]; a: [f(X)]");
    CHECK(parse_memory("").empty());
    CHECK(parse_memory("b: []").empty());
}

TEST_CASE("machine variables parse and stay disjoint from user names") {
    TermPtr t = parse_term("[%3]");
    auto fv = free_vars(t);
    REQUIRE(fv.size() == 1);
    CHECK(is_machine_var(*fv.begin()));
    CHECK(!is_machine_var("X"));
}
