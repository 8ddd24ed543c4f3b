#include "rmc/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rmc {

namespace {

bool ident_start_lower(char c) {
    return std::islower(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_start_upper(char c) {
    return std::isupper(static_cast<unsigned char>(c)) || c == '%';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TermPtr term() {
        skip_ws();
        TermPtr t = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        check_arities(t);
        return canonicalize_seq(t);
    }

    ValuePtr value_only() {
        skip_ws();
        ValuePtr v = parse_value();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

    Memory memory() {
        Memory m;
        skip_ws();
        while (pos_ < text_.size()) {
            std::string loc = lex_lower_ident("location name");
            expect(':');
            skip_ws();
            expect('[');
            skip_ws();
            if (!eat(']')) {
                while (true) {
                    m.push(loc, parse_value());
                    skip_ws();
                    if (eat(']')) break;
                    expect(',');
                    skip_ws();
                }
            }
            skip_ws();
            if (!eat(';')) break;
            skip_ws();
        }
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input in memory literal");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string lex_ident() {
        size_t start = pos_;
        if (peek() == '%') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start + 1) fail("malformed machine variable");
            return text_.substr(start, pos_ - start);
        }
        if (!ident_char(peek()) ) fail("expected identifier");
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::string lex_lower_ident(const std::string& what) {
        skip_ws();
        if (!ident_start_lower(peek())) fail("expected " + what);
        return lex_ident();
    }

    // ---- values ----

    ValuePtr parse_value() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Value::fun(text_.substr(start, pos_ - start));
        }
        if (ident_start_upper(c)) {
            std::string name = lex_ident();
            if (name == "E") fail("'E' is reserved for the new-variable binder");
            return Value::var(name);
        }
        if (ident_start_lower(c)) {
            std::string sym = lex_ident();
            std::vector<ValuePtr> args;
            skip_ws();
            if (eat('(')) {
                skip_ws();
                if (!eat(')')) {
                    while (true) {
                        args.push_back(parse_value());
                        skip_ws();
                        if (eat(')')) break;
                        expect(',');
                    }
                }
            }
            return Value::fun(sym, std::move(args));
        }
        fail("expected value");
    }

    // ---- terms ----
    // Precedence: ^* binds tightest, then ';', then 'E x.', then '+'.

    TermPtr parse_sum() {
        TermPtr t = parse_new_or_seq();
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            TermPtr rhs = parse_new_or_seq();
            t = Term::sum(t, rhs);
            skip_ws();
        }
        return t;
    }

    bool at_new_keyword() {
        return peek() == 'E' && !ident_char(peek2());
    }

    TermPtr parse_new_or_seq() {
        skip_ws();
        if (at_new_keyword()) return parse_new();
        return parse_seq();
    }

    TermPtr parse_new() {
        expect('E');
        std::vector<std::string> vars;
        while (true) {
            skip_ws();
            if (eat('.')) break;
            if (!ident_start_upper(peek())) fail("expected bound variable after 'E'");
            std::string v = lex_ident();
            if (v == "E") fail("'E' is reserved");
            vars.push_back(v);
        }
        if (vars.empty()) fail("binder needs at least one variable");
        TermPtr body = parse_new_or_seq();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = Term::nu(*it, body);
        return body;
    }

    TermPtr parse_seq() {
        std::vector<TermPtr> elems;
        elems.push_back(parse_starred());
        skip_ws();
        while (peek() == ';') {
            ++pos_;
            skip_ws();
            if (at_new_keyword()) {
                // The binder swallows the remainder of this sequence level.
                elems.push_back(parse_new());
                break;
            }
            elems.push_back(parse_starred());
            skip_ws();
        }
        if (elems.size() == 1) return elems[0];
        return seq_of(elems);
    }

    TermPtr parse_starred() {
        TermPtr t = parse_atom();
        skip_ws();
        while (peek() == '^' && peek2() == '*') {
            pos_ += 2;
            t = Term::star(t);
            skip_ws();
        }
        return t;
    }

    TermPtr parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '*') {
            ++pos_;
            return Term::skip();
        }
        if (c == '0' && !ident_char(peek2())) {
            ++pos_;
            return Term::zero();
        }
        if (c == '(') {
            ++pos_;
            TermPtr t = parse_sum();
            skip_ws();
            expect(')');
            return t;
        }
        if (c == '[') {
            ++pos_;
            ValuePtr v = parse_value();
            skip_ws();
            expect(']');
            std::string loc = kDefaultLoc;
            if (ident_start_lower(peek())) loc = lex_ident();
            return Term::push(std::move(v), std::move(loc));
        }
        if (c == '<') {
            ++pos_;
            ValuePtr v = parse_value();
            skip_ws();
            expect('>');
            return Term::pop(kDefaultLoc, std::move(v));
        }
        if (ident_start_lower(c)) {
            size_t save = pos_;
            std::string loc = lex_ident();
            skip_ws();
            if (eat('<')) {
                ValuePtr v = parse_value();
                skip_ws();
                expect('>');
                return Term::pop(std::move(loc), std::move(v));
            }
            pos_ = save;
            fail("expected '<' after location name");
        }
        fail("expected term");
    }

    // Every symbol must be used at a single arity.
    void collect_value_arities(const ValuePtr& v, std::map<std::string, size_t>& seen) {
        if (v->is_var()) return;
        auto [it, inserted] = seen.emplace(v->name(), v->arity());
        if (!inserted && it->second != v->arity())
            throw ArityError("symbol '" + v->name() + "' used at arities " +
                             std::to_string(it->second) + " and " +
                             std::to_string(v->arity()));
        for (const auto& a : v->args()) collect_value_arities(a, seen);
    }

    void check_arities_rec(const TermPtr& t, std::map<std::string, size_t>& seen) {
        switch (t->kind()) {
            case TermKind::Push:
            case TermKind::Pop:
                collect_value_arities(t->value(), seen);
                return;
            case TermKind::Seq:
            case TermKind::Sum:
                check_arities_rec(t->child_a(), seen);
                check_arities_rec(t->child_b(), seen);
                return;
            case TermKind::Star:
            case TermKind::New:
                check_arities_rec(t->child_a(), seen);
                return;
            default:
                return;
        }
    }

    void check_arities(const TermPtr& t) {
        std::map<std::string, size_t> seen;
        check_arities_rec(t, seen);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) {
    return Parser(text).term();
}

ValuePtr parse_value(const std::string& text) {
    return Parser(text).value_only();
}

Memory parse_memory(const std::string& text) {
    return Parser(text).memory();
}

TermPtr parse_term_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_term(ss.str());
}

}  // namespace rmc
