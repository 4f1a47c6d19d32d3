#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mvdual/rational.hpp"

namespace mvd {

// Core Lukasiewicz term language: variables, 0, negation, truncated sum.
// Sugar connectives expand definitionally at construction time:
//   a & b   = ~(~a (+) ~b)          (strong conjunction)
//   a \/ b  = ~(~a (+) b) (+) b
//   a /\ b  = ~(~a \/ ~b)
//   a -> b  = ~a (+) b
//   a - b   = a & ~b                (ominus; no concrete syntax)
//   1       = ~0
// Terms are immutable trees with shared subterms; copying is cheap.
class Term {
public:
    enum class Kind { Var, Zero, Neg, Oplus };

    static Term var(int index);
    static Term zero();
    static Term neg(Term t);
    static Term oplus(Term a, Term b);

    static Term one() { return neg(zero()); }
    static Term odot(Term a, Term b) { return neg(oplus(neg(a), neg(b))); }
    static Term vee(Term a, Term b) { return oplus(neg(oplus(neg(a), b)), b); }
    static Term wedge(Term a, Term b) { return neg(vee(neg(a), neg(b))); }
    static Term imp(Term a, Term b) { return oplus(neg(std::move(a)), std::move(b)); }
    static Term ominus(Term a, Term b) { return odot(std::move(a), neg(std::move(b))); }

    Kind kind() const { return node_->kind; }
    int var_index() const;
    Term child() const;       // Neg
    Term left() const;        // Oplus
    Term right() const;       // Oplus

    // Smallest arity the term fits in: 1 + max variable index (0 if closed).
    int min_arity() const;

    std::string str() const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        int var = -1;
        std::shared_ptr<const Node> a, b;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Grammar (tightest first): ~  >  &  >  (+)  >  /\  >  \/  >  ->, all binary
// operators left-associative; atoms are '0', '1', 'x<digits>', parentheses.
Term parse_term(const std::string& text);

// Exact value of t at p under the standard semantics. p must supply at least
// min_arity coordinates, all within [0,1].
Rat eval(const Term& t, const Point& p);

// Simultaneous substitution: variable i becomes images[i]. Every variable of
// t must have an image.
Term substitute(const Term& t, const std::vector<Term>& images);

// (s - t) (+) (t - s); evaluates to |eval(s) - eval(t)| everywhere.
Term chang_distance(const Term& s, const Term& t);

// Finite presentation: arity plus relation pairs over x0..x{arity-1}.
struct Presentation {
    int arity = 0;
    std::vector<std::pair<Term, Term>> relations;

    Presentation() = default;
    Presentation(int arity_, std::vector<std::pair<Term, Term>> rels);
};

}  // namespace mvd
