#include "fixlog/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fixlog {

int Term::depth() const {
    if (kind != Kind::compound) return 0;
    int d = 0;
    for (const Term& a : args) d = std::max(d, a.depth());
    return 1 + d;
}

bool Term::is_ground() const {
    if (kind == Kind::variable) return false;
    for (const Term& a : args)
        if (!a.is_ground()) return false;
    return true;
}

bool Term::operator==(const Term& other) const {
    return kind == other.kind && name == other.name && args == other.args;
}

bool Atom::is_ground() const {
    for (const Term& t : args)
        if (!t.is_ground()) return false;
    return true;
}

bool Atom::operator==(const Atom& other) const {
    return predicate == other.predicate && args == other.args;
}

namespace {

enum class TokKind { ident_lower, ident_upper, number, lparen, rparen, comma, dot, arrow, naf, end };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {TokKind::end, "", line, col};
        char c = text_[pos_];
        if (c == '(') return advance(), Token{TokKind::lparen, "(", line, col};
        if (c == ')') return advance(), Token{TokKind::rparen, ")", line, col};
        if (c == ',') return advance(), Token{TokKind::comma, ",", line, col};
        if (c == '.') return advance(), Token{TokKind::dot, ".", line, col};
        if (c == ':') {
            advance();
            if (pos_ < text_.size() && text_[pos_] == '-') {
                advance();
                return {TokKind::arrow, ":-", line, col};
            }
            throw parse_error("expected ':-'", line, col);
        }
        if (c == '\\') {
            advance();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                advance();
                return {TokKind::naf, "\\+", line, col};
            }
            throw parse_error("expected '\\+'", line, col);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance();
            }
            return {TokKind::number, s, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            bool upper = std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_';
            if (!upper && s == "not") return {TokKind::naf, s, line, col};
            return {upper ? TokKind::ident_upper : TokKind::ident_lower, s, line, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    Program parse() {
        Program p;
        while (tok_.kind != TokKind::end) {
            p.clauses.push_back(parse_clause());
        }
        for (const Clause& c : p.clauses) {
            register_clause_symbols(p, c);
        }
        return p;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what, tok_.line, tok_.column);
    }

    void expect(TokKind k, const char* what) {
        if (tok_.kind != k) fail(std::string("expected ") + what);
        shift();
    }

    Clause parse_clause() {
        Clause c;
        c.head = parse_atom();
        if (tok_.kind == TokKind::arrow) {
            shift();
            while (true) {
                bool negated = false;
                if (tok_.kind == TokKind::naf) {
                    negated = true;
                    shift();
                }
                Atom a = parse_atom();
                (negated ? c.neg_body : c.pos_body).push_back(std::move(a));
                if (tok_.kind == TokKind::comma) {
                    shift();
                    continue;
                }
                break;
            }
        }
        expect(TokKind::dot, "'.'");
        return c;
    }

    Atom parse_atom() {
        if (tok_.kind != TokKind::ident_lower)
            fail("expected an atom (lowercase-initial name)");
        Atom a;
        a.predicate = tok_.text;
        shift();
        if (tok_.kind == TokKind::lparen) {
            shift();
            while (true) {
                a.args.push_back(parse_term());
                if (tok_.kind == TokKind::comma) {
                    shift();
                    continue;
                }
                break;
            }
            expect(TokKind::rparen, "')'");
        }
        check_arity(a.predicate, a.args.size());
        return a;
    }

    Term parse_term() {
        if (tok_.kind == TokKind::ident_upper) {
            Term t = Term::var(tok_.text);
            shift();
            return t;
        }
        if (tok_.kind == TokKind::number) {
            Term t = Term::constant(tok_.text);
            shift();
            return t;
        }
        if (tok_.kind != TokKind::ident_lower) fail("expected a term");
        std::string name = tok_.text;
        shift();
        if (tok_.kind == TokKind::lparen) {
            shift();
            std::vector<Term> args;
            while (true) {
                args.push_back(parse_term());
                if (tok_.kind == TokKind::comma) {
                    shift();
                    continue;
                }
                break;
            }
            expect(TokKind::rparen, "')'");
            return Term::compound(std::move(name), std::move(args));
        }
        return Term::constant(std::move(name));
    }

    void check_arity(const std::string& pred, std::size_t arity) {
        auto [it, fresh] = arities_.emplace(pred, arity);
        if (!fresh && it->second != arity) {
            std::ostringstream os;
            os << "arity conflict for predicate '" << pred << "': used with arity "
               << it->second << " and " << arity;
            throw parse_error(os.str(), tok_.line, tok_.column);
        }
    }

    void register_term_symbols(Program& p, const Term& t) {
        if (t.kind == Term::Kind::constant) {
            if (std::find(p.constants.begin(), p.constants.end(), t.name) == p.constants.end())
                p.constants.push_back(t.name);
        } else if (t.kind == Term::Kind::compound) {
            auto key = std::make_pair(t.name, t.args.size());
            if (std::find(p.functors.begin(), p.functors.end(), key) == p.functors.end())
                p.functors.push_back(key);
            for (const Term& a : t.args) register_term_symbols(p, a);
        }
    }

    void register_clause_symbols(Program& p, const Clause& c) {
        auto reg_atom = [&](const Atom& a) {
            p.predicate_arity[a.predicate] = a.arity();
            for (const Term& t : a.args) register_term_symbols(p, t);
        };
        reg_atom(c.head);
        for (const Atom& a : c.pos_body) reg_atom(a);
        for (const Atom& a : c.neg_body) reg_atom(a);
    }

    Lexer lexer_;
    Token tok_{TokKind::end, "", 1, 1};
    std::map<std::string, std::size_t> arities_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Term& t) {
    if (t.kind != Term::Kind::compound) return t.name;
    std::string s = t.name + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ",";
        s += to_string(t.args[i]);
    }
    return s + ")";
}

std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.predicate;
    std::string s = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) s += ",";
        s += to_string(a.args[i]);
    }
    return s + ")";
}

std::string to_string(const Clause& c) {
    std::string s = to_string(c.head);
    if (!c.is_fact()) {
        s += " :- ";
        bool first = true;
        for (const Atom& a : c.pos_body) {
            if (!first) s += ", ";
            first = false;
            s += to_string(a);
        }
        for (const Atom& a : c.neg_body) {
            if (!first) s += ", ";
            first = false;
            s += "not " + to_string(a);
        }
    }
    return s + ".";
}

std::string to_lp(const Program& p) {
    std::string s;
    for (const Clause& c : p.clauses) {
        s += to_string(c);
        s += "\n";
    }
    return s;
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::variable) {
        out.insert(t.name);
    } else {
        for (const Term& a : t.args) collect_variables(a, out);
    }
}

void collect_variables(const Atom& a, std::set<std::string>& out) {
    for (const Term& t : a.args) collect_variables(t, out);
}

} // namespace

LocalVariableScan has_local_variables(const Program& p) {
    LocalVariableScan scan;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        const Clause& c = p.clauses[i];
        std::set<std::string> head_vars;
        collect_variables(c.head, head_vars);
        std::set<std::string> body_vars;
        for (const Atom& a : c.pos_body) collect_variables(a, body_vars);
        for (const Atom& a : c.neg_body) collect_variables(a, body_vars);
        bool local = std::any_of(body_vars.begin(), body_vars.end(), [&](const std::string& v) {
            return head_vars.find(v) == head_vars.end();
        });
        if (local) {
            scan.found = true;
            scan.clause_indices.push_back(i);
        }
    }
    return scan;
}

} // namespace fixlog
