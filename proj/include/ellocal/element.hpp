#ifndef ELLOCAL_ELEMENT_HPP
#define ELLOCAL_ELEMENT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ellocal/errors.hpp"
#include "ellocal/field.hpp"
#include "ellocal/parse_expr.hpp"
#include "ellocal/poly.hpp"
#include "ellocal/residue.hpp"
#include "ellocal/valuation.hpp"

namespace ellocal {

// Exact element of the fraction field of one of the DVR backends:
//   qp:p    - rational number, valuation = p-adic order
//   fqt:q   - rational function over F_q, valuation = order at t=0
//   eis:p:E - class in Q[x]/(E), valuation via the Eisenstein term formula
//             v(sum c_i pi^i) = min_i (e*v_p(c_i) + i),
//             exact because the candidate valuations are distinct mod e.
class LocalFieldElement {
public:
    LocalFieldElement() = default;

    static LocalFieldElement zero(const FieldRef& f) { return from_integer(f, 0); }
    static LocalFieldElement one(const FieldRef& f) { return from_integer(f, 1); }

    static LocalFieldElement from_integer(const FieldRef& f, const Int& n) {
        require_field(f);
        switch (f->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f, Rat(n));
            case FieldKind::FunctionFieldAtT: {
                long long q = f->residue_char();
                long long r = static_cast<long long>(n % q);
                return LocalFieldElement(f, RatFunc(FpPoly::constant(q, mod_ll(r, q)),
                                                    FpPoly::constant(q, 1)));
            }
            case FieldKind::Eisenstein: return LocalFieldElement(f, QPoly::constant(Rat(n)));
        }
        throw InternalError("from_integer: bad kind");
    }

    static LocalFieldElement uniformizer(const FieldRef& f) {
        require_field(f);
        switch (f->kind()) {
            case FieldKind::RationalAtP: return from_integer(f, f->residue_char());
            case FieldKind::FunctionFieldAtT: {
                long long q = f->residue_char();
                return LocalFieldElement(f, RatFunc(FpPoly::var(q), FpPoly::constant(q, 1)));
            }
            case FieldKind::Eisenstein: {
                LocalFieldElement e(f, QPoly::var());
                e.reduce_eis();
                return e;
            }
        }
        throw InternalError("uniformizer: bad kind");
    }

    // Canonical lift of a residue element: the integer itself.
    static LocalFieldElement lift(const FieldRef& f, const Residue& r) {
        require_field(f);
        if (r.prime() != 0 && r.prime() != f->residue_char())
            throw DescriptorMismatch("lift: residue prime " + std::to_string(r.prime()) +
                                     " does not match field " + f->str());
        return from_integer(f, r.value());
    }

    static LocalFieldElement parse(const FieldRef& f, std::string_view s);

    const FieldRef& field() const { return f_; }

    bool is_zero() const {
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return rat() == 0;
            case FieldKind::FunctionFieldAtT: return ff().is_zero();
            case FieldKind::Eisenstein: return eis().is_zero();
        }
        return true;
    }

    LocalFieldElement operator+(const LocalFieldElement& o) const {
        match(o);
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f_, rat() + o.rat());
            case FieldKind::FunctionFieldAtT: return LocalFieldElement(f_, ff() + o.ff());
            case FieldKind::Eisenstein: return reduced(f_, eis() + o.eis());
        }
        throw InternalError("add: bad kind");
    }
    LocalFieldElement operator-(const LocalFieldElement& o) const {
        match(o);
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f_, rat() - o.rat());
            case FieldKind::FunctionFieldAtT: return LocalFieldElement(f_, ff() - o.ff());
            case FieldKind::Eisenstein: return reduced(f_, eis() - o.eis());
        }
        throw InternalError("sub: bad kind");
    }
    LocalFieldElement operator-() const {
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f_, Rat(-rat()));
            case FieldKind::FunctionFieldAtT: return LocalFieldElement(f_, -ff());
            case FieldKind::Eisenstein: return LocalFieldElement(f_, -eis());
        }
        throw InternalError("neg: bad kind");
    }
    LocalFieldElement operator*(const LocalFieldElement& o) const {
        match(o);
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f_, rat() * o.rat());
            case FieldKind::FunctionFieldAtT: return LocalFieldElement(f_, ff() * o.ff());
            case FieldKind::Eisenstein: return reduced(f_, eis() * o.eis());
        }
        throw InternalError("mul: bad kind");
    }

    LocalFieldElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in " + f_->str());
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return LocalFieldElement(f_, Rat(1) / rat());
            case FieldKind::FunctionFieldAtT:
                return LocalFieldElement(f_, RatFunc(ff().den(), ff().num()));
            case FieldKind::Eisenstein: {
                // extended gcd with E over Q[x]; E is irreducible, so the gcd
                // is 1 and u is the inverse.
                auto [g, u, v] = QPoly::egcd(eis(), modulus());
                (void)v;
                if (g.degree() != 0)
                    throw InternalError("eisenstein: modulus not coprime to element");
                return reduced(f_, u * QPoly::constant(Rat(1) / g.coeff(0)));
            }
        }
        throw InternalError("inverse: bad kind");
    }
    LocalFieldElement operator/(const LocalFieldElement& o) const {
        match(o);
        return *this * o.inverse();
    }

    LocalFieldElement pow(long long n) const {
        if (n < 0) return inverse().pow(-n);
        LocalFieldElement acc = one(f_), base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            if (n >>= 1) base = base * base;
        }
        return acc;
    }

    bool operator==(const LocalFieldElement& o) const {
        if (!same_field(f_, o.f_)) return false;
        return payload_ == o.payload_;
    }
    bool operator!=(const LocalFieldElement& o) const { return !(*this == o); }

    Valuation valuation() const {
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return vp_rat(rat(), f_->residue_char());
            case FieldKind::FunctionFieldAtT: return ff().order_at_zero();
            case FieldKind::Eisenstein: {
                const QPoly& a = eis();
                if (a.is_zero()) return Valuation::infinity();
                long long e = f_->ramification_degree(), p = f_->residue_char();
                Valuation best = Valuation::infinity();
                for (size_t i = 0; i < a.coeffs().size(); ++i) {
                    if (a.coeffs()[i] == 0) continue;
                    Valuation term(e * vp_rat(a.coeffs()[i], p).value() +
                                   static_cast<long long>(i));
                    best = min(best, term);
                }
                return best;
            }
        }
        throw InternalError("valuation: bad kind");
    }

    // Image in the residue field F_p; requires valuation >= 0.
    Residue reduce() const {
        if (valuation() < 0)
            throw NegativeValuation("reduce: element has negative valuation in " + f_->str());
        long long p = f_->residue_char();
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return reduce_rat(rat(), p);
            case FieldKind::FunctionFieldAtT: {
                long long n = ff().num().eval(0), d = ff().den().eval(0);
                return Residue(mulmod_ll(n, invmod_ll(d, p), p), p);
            }
            case FieldKind::Eisenstein: return reduce_rat(eis().coeff(0), p);
        }
        throw InternalError("reduce: bad kind");
    }

    std::string str() const {
        switch (f_->kind()) {
            case FieldKind::RationalAtP: return rat_str(rat());
            case FieldKind::FunctionFieldAtT: return ff().str('t');
            case FieldKind::Eisenstein: {
                const QPoly& a = eis();
                if (a.is_zero()) return "0";
                std::string out;
                for (size_t i = 0; i < a.coeffs().size(); ++i) {
                    const Rat& c = a.coeffs()[i];
                    if (c == 0) continue;
                    if (!out.empty()) out += "+";
                    if (i == 0) {
                        out += rat_str(c);
                    } else {
                        if (c != 1) out += rat_str(c) + "*";
                        out += "x";
                        if (i > 1) out += "^" + std::to_string(i);
                    }
                }
                return out;
            }
        }
        return "?";
    }

    // payload accessors (used by serialization and base change)
    const Rat& rat() const { return std::get<Rat>(payload_); }
    const RatFunc& ff() const { return std::get<RatFunc>(payload_); }
    const QPoly& eis() const { return std::get<QPoly>(payload_); }

private:
    LocalFieldElement(FieldRef f, Rat v) : f_(std::move(f)), payload_(std::move(v)) {}
    LocalFieldElement(FieldRef f, RatFunc v) : f_(std::move(f)), payload_(std::move(v)) {}
    LocalFieldElement(FieldRef f, QPoly v) : f_(std::move(f)), payload_(std::move(v)) {}

    static void require_field(const FieldRef& f) {
        if (!f) throw InternalError("element: null field descriptor");
    }
    void match(const LocalFieldElement& o) const {
        if (!same_field(f_, o.f_))
            throw DescriptorMismatch("elements from different fields: " + f_->str() + " vs " +
                                     o.f_->str());
    }

    QPoly modulus() const {
        std::vector<Rat> c;
        for (const auto& x : f_->eisenstein_poly()) c.emplace_back(x);
        return QPoly(std::move(c));
    }
    void reduce_eis() {
        QPoly& a = std::get<QPoly>(payload_);
        if (a.degree() >= static_cast<int>(f_->ramification_degree())) a = a.mod(modulus());
    }
    static LocalFieldElement reduced(const FieldRef& f, QPoly v) {
        LocalFieldElement e(f, std::move(v));
        e.reduce_eis();
        return e;
    }

    static Residue reduce_rat(const Rat& x, long long p) {
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        long long n = static_cast<long long>(num % p);
        long long d = static_cast<long long>(den % p);
        return Residue(mulmod_ll(mod_ll(n, p), invmod_ll(d, p), p), p);
    }

    static std::string rat_str(const Rat& x) {
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    FieldRef f_;
    std::variant<Rat, RatFunc, QPoly> payload_;
};

namespace detail {
struct FieldEval {
    using value_type = LocalFieldElement;
    FieldRef f;
    char var_name() const {
        switch (f->kind()) {
            case FieldKind::RationalAtP: return 0;
            case FieldKind::FunctionFieldAtT: return 't';
            case FieldKind::Eisenstein: return 'x';
        }
        return 0;
    }
    LocalFieldElement from_int(const Int& n) const { return LocalFieldElement::from_integer(f, n); }
    LocalFieldElement variable() const { return LocalFieldElement::uniformizer(f); }
    LocalFieldElement add(const LocalFieldElement& a, const LocalFieldElement& b) const { return a + b; }
    LocalFieldElement sub(const LocalFieldElement& a, const LocalFieldElement& b) const { return a - b; }
    LocalFieldElement mul(const LocalFieldElement& a, const LocalFieldElement& b) const { return a * b; }
    LocalFieldElement div(const LocalFieldElement& a, const LocalFieldElement& b) const { return a / b; }
    LocalFieldElement pow(const LocalFieldElement& a, long long e) const { return a.pow(e); }
};
} // namespace detail

inline LocalFieldElement LocalFieldElement::parse(const FieldRef& f, std::string_view s) {
    require_field(f);
    try {
        return ExprParser<detail::FieldEval>(s, detail::FieldEval{f}).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("while parsing \"" + std::string(s) + "\": " + e.what());
    }
}

} // namespace ellocal

#endif
