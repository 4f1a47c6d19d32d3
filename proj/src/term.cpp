#include "mvdual/term.hpp"

#include <algorithm>
#include <cctype>

namespace mvd {

Term Term::var(int index) {
    if (index < 0) throw domain_error("negative variable index");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    return Term(std::move(n));
}

Term Term::zero() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Zero;
    return Term(std::move(n));
}

Term Term::neg(Term t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = std::move(t.node_);
    return Term(std::move(n));
}

Term Term::oplus(Term a, Term b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Oplus;
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return Term(std::move(n));
}

int Term::var_index() const {
    if (kind() != Kind::Var) throw domain_error("var_index on non-variable");
    return node_->var;
}

Term Term::child() const {
    if (kind() != Kind::Neg) throw domain_error("child on non-negation");
    return Term(node_->a);
}

Term Term::left() const {
    if (kind() != Kind::Oplus) throw domain_error("left on non-oplus");
    return Term(node_->a);
}

Term Term::right() const {
    if (kind() != Kind::Oplus) throw domain_error("right on non-oplus");
    return Term(node_->b);
}

int Term::min_arity() const {
    switch (kind()) {
        case Kind::Var: return node_->var + 1;
        case Kind::Zero: return 0;
        case Kind::Neg: return child().min_arity();
        case Kind::Oplus: return std::max(left().min_arity(), right().min_arity());
    }
    return 0;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::Var: return a.node_->var == b.node_->var;
        case Term::Kind::Zero: return true;
        case Term::Kind::Neg: return a.child() == b.child();
        case Term::Kind::Oplus: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

namespace {

void print_term(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Var:
            out += "x" + std::to_string(t.var_index());
            break;
        case Term::Kind::Zero:
            out += "0";
            break;
        case Term::Kind::Neg:
            if (t.child().kind() == Term::Kind::Zero) {
                out += "1";
            } else if (t.child().kind() == Term::Kind::Oplus) {
                out += "~(";
                print_term(t.child(), out);
                out += ")";
            } else {
                out += "~";
                print_term(t.child(), out);
            }
            break;
        case Term::Kind::Oplus:
            print_term(t.left(), out);
            out += " (+) ";
            if (t.right().kind() == Term::Kind::Oplus) {
                out += "(";
                print_term(t.right(), out);
                out += ")";
            } else {
                print_term(t.right(), out);
            }
            break;
    }
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Term parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of term");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Term t = parse_imp();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return t;
        }
        if (c == '0') {
            ++pos;
            return Term::zero();
        }
        if (c == '1') {
            ++pos;
            return Term::one();
        }
        if (c == 'x') {
            std::size_t start = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected variable index after 'x'");
            return Term::var(std::stoi(s.substr(start, pos - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Term parse_unary() {
        skip_ws();
        if (pos < s.size() && s[pos] == '~') {
            ++pos;
            return Term::neg(parse_unary());
        }
        return parse_atom();
    }

    Term parse_odot() {
        Term t = parse_unary();
        while (eat("&")) t = Term::odot(std::move(t), parse_unary());
        return t;
    }

    Term parse_oplus() {
        Term t = parse_odot();
        while (eat("(+)")) t = Term::oplus(std::move(t), parse_odot());
        return t;
    }

    Term parse_wedge() {
        Term t = parse_oplus();
        while (true) {
            skip_ws();
            // "(+)" also starts with '(', so the oplus level has consumed it;
            // here only the two-character tokens matter.
            if (s.compare(pos, 2, "/\\") == 0) {
                pos += 2;
                t = Term::wedge(std::move(t), parse_oplus());
            } else {
                break;
            }
        }
        return t;
    }

    Term parse_vee() {
        Term t = parse_wedge();
        while (true) {
            skip_ws();
            if (s.compare(pos, 2, "\\/") == 0) {
                pos += 2;
                t = Term::vee(std::move(t), parse_wedge());
            } else {
                break;
            }
        }
        return t;
    }

    Term parse_imp() {
        Term t = parse_vee();
        while (true) {
            skip_ws();
            if (s.compare(pos, 2, "->") == 0) {
                pos += 2;
                t = Term::imp(std::move(t), parse_vee());
            } else {
                break;
            }
        }
        return t;
    }
};

}  // namespace

std::string Term::str() const {
    std::string out;
    print_term(*this, out);
    return out;
}

Term parse_term(const std::string& text) {
    Parser p(text);
    Term t = p.parse_imp();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after term");
    return t;
}

Rat eval(const Term& t, const Point& p) {
    if (t.min_arity() > static_cast<int>(p.size()))
        throw domain_error("eval: point has fewer coordinates than the term's arity");
    for (const auto& c : p)
        if (!in_unit_interval(c)) throw domain_error("eval: coordinate outside [0,1]");
    struct Rec {
        const Point& pt;
        Rat run(const Term& u) const {
            switch (u.kind()) {
                case Term::Kind::Var: return pt[static_cast<std::size_t>(u.var_index())];
                case Term::Kind::Zero: return Rat(0);
                case Term::Kind::Neg: return mv_neg(run(u.child()));
                case Term::Kind::Oplus: return mv_oplus(run(u.left()), run(u.right()));
            }
            return Rat(0);
        }
    };
    return Rec{p}.run(t);
}

Term substitute(const Term& t, const std::vector<Term>& images) {
    if (t.min_arity() > static_cast<int>(images.size()))
        throw domain_error("substitute: missing image for a variable");
    switch (t.kind()) {
        case Term::Kind::Var: return images[static_cast<std::size_t>(t.var_index())];
        case Term::Kind::Zero: return t;
        case Term::Kind::Neg: return Term::neg(substitute(t.child(), images));
        case Term::Kind::Oplus:
            return Term::oplus(substitute(t.left(), images), substitute(t.right(), images));
    }
    return t;
}

Term chang_distance(const Term& s, const Term& t) {
    return Term::oplus(Term::ominus(s, t), Term::ominus(t, s));
}

Presentation::Presentation(int arity_, std::vector<std::pair<Term, Term>> rels)
    : arity(arity_), relations(std::move(rels)) {
    if (arity < 0) throw domain_error("presentation with negative arity");
    for (const auto& [s, t] : relations)
        if (s.min_arity() > arity || t.min_arity() > arity)
            throw domain_error("presentation relation uses a variable beyond its arity");
}

}  // namespace mvd
