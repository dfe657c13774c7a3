#ifndef ELLOCAL_PARSE_EXPR_HPP
#define ELLOCAL_PARSE_EXPR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "ellocal/errors.hpp"
#include "ellocal/poly.hpp"

namespace ellocal {

// Tiny recursive-descent parser for arithmetic expressions in one variable:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := uint | var | '(' expr ')'
// Juxtaposition of an integer and a variable or '(' multiplies ("4x^3").
//
// Eval must provide:
//   value_type from_int(const Int&)   value_type variable()
//   add/sub/mul/div(value_type, value_type)   pow(value_type, long long)
// and expose the variable's name via var_name() (0 = no variable allowed).
template <typename Eval>
class ExprParser {
public:
    ExprParser(std::string_view src, Eval eval) : src_(src), eval_(eval) {}

    typename Eval::value_type parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected character '" + std::string(1, src_[pos_]) +
                             "' at position " + std::to_string(pos_) + " in \"" +
                             std::string(src_) + "\"");
        return v;
    }

private:
    using V = typename Eval::value_type;

    V expr() {
        V acc = term();
        for (;;) {
            skip_ws();
            if (eat('+')) acc = eval_.add(acc, term());
            else if (eat('-')) acc = eval_.sub(acc, term());
            else return acc;
        }
    }

    V term() {
        V acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) acc = eval_.mul(acc, factor());
            else if (eat('/')) acc = eval_.div(acc, factor());
            else if (peek_juxtaposed()) acc = eval_.mul(acc, factor());
            else return acc;
        }
    }

    V factor() {
        skip_ws();
        if (eat('-')) return eval_.sub(eval_.from_int(0), factor());
        V base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            long long e = parse_uint_small();
            return eval_.pow(base, e);
        }
        return base;
    }

    V atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression");
        char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            last_was_int_ = true;
            return eval_.from_int(parse_int_big());
        }
        last_was_int_ = false;
        if (ch == '(') {
            ++pos_;
            V v = expr();
            skip_ws();
            if (!eat(')')) throw ParseError("missing ')' in expression");
            return v;
        }
        char var = eval_.var_name();
        if (var != 0 && ch == var) {
            ++pos_;
            return eval_.variable();
        }
        throw ParseError("unexpected character '" + std::string(1, ch) + "' in \"" +
                         std::string(src_) + "\"");
    }

    // An integer immediately followed by the variable or '(' multiplies.
    bool peek_juxtaposed() {
        if (!last_was_int_ || pos_ >= src_.size()) return false;
        char ch = src_[pos_];
        return ch == '(' || (eval_.var_name() != 0 && ch == eval_.var_name());
    }

    Int parse_int_big() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer");
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    long long parse_uint_small() {
        Int v = parse_int_big();
        if (v > 1000000) throw ParseError("exponent too large");
        return v.convert_to<long long>();
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    std::string_view src_;
    Eval eval_;
    size_t pos_ = 0;
    bool last_was_int_ = false;
};

// Evaluator over Q[x]; division restricted to constants (enough for
// descriptor polynomials and rational coefficients like 1/3*x^2).
struct QPolyEval {
    using value_type = QPoly;
    char var_name() const { return var; }
    QPoly from_int(const Int& n) const { return QPoly::constant(Rat(n)); }
    QPoly variable() const { return QPoly::var(); }
    QPoly add(const QPoly& a, const QPoly& b) const { return a + b; }
    QPoly sub(const QPoly& a, const QPoly& b) const { return a - b; }
    QPoly mul(const QPoly& a, const QPoly& b) const { return a * b; }
    QPoly div(const QPoly& a, const QPoly& b) const {
        if (b.is_zero()) throw ParseError("division by zero in polynomial expression");
        if (b.degree() > 0)
            throw ParseError("division by a non-constant polynomial is not supported here");
        return a * QPoly::constant(Rat(1) / b.coeff(0));
    }
    QPoly pow(QPoly base, long long e) const {
        if (e < 0) throw ParseError("negative exponent in polynomial expression");
        QPoly acc = QPoly::constant(1);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    char var = 'x';
};

inline QPoly parse_qpoly(std::string_view src, char var = 'x') {
    return ExprParser<QPolyEval>(src, QPolyEval{var}).parse();
}

} // namespace ellocal

#endif
