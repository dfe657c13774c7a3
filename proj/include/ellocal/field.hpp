#ifndef ELLOCAL_FIELD_HPP
#define ELLOCAL_FIELD_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ellocal/errors.hpp"
#include "ellocal/parse_expr.hpp"
#include "ellocal/poly.hpp"

namespace ellocal {

enum class FieldKind {
    RationalAtP,       // Q with the p-adic valuation
    FunctionFieldAtT,  // F_q(t) with the t-adic valuation
    Eisenstein,        // Q[x]/(E) with the valuation above p, E Eisenstein at p
};

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Identifies one of the three DVR backends.  Immutable; elements share their
// descriptor by pointer but compare it by value.
class FieldDescriptor {
public:
    static FieldDescriptor rational_at(long long p) {
        check_prime(p);
        return FieldDescriptor(FieldKind::RationalAtP, p, {});
    }
    static FieldDescriptor function_field(long long q) {
        check_prime(q);
        return FieldDescriptor(FieldKind::FunctionFieldAtT, q, {});
    }
    // eis: monic integer polynomial, Eisenstein at p, ascending coefficients.
    static FieldDescriptor eisenstein(long long p, std::vector<Int> poly) {
        check_prime(p);
        if (poly.size() < 2) throw UnsupportedField("eisenstein: polynomial must have degree >= 1");
        if (poly.back() != 1) throw UnsupportedField("eisenstein: polynomial must be monic");
        for (size_t i = 0; i + 1 < poly.size(); ++i)
            if (poly[i] % p != 0)
                throw UnsupportedField("eisenstein: coefficient of x^" + std::to_string(i) +
                                       " not divisible by " + std::to_string(p));
        if (poly[0] % (Int(p) * p) == 0)
            throw UnsupportedField("eisenstein: constant term divisible by p^2");
        return FieldDescriptor(FieldKind::Eisenstein, p, std::move(poly));
    }

    // "qp:2" | "fqt:3" | "eis:2:x^4-2"
    static FieldDescriptor parse(std::string_view s) {
        size_t c1 = s.find(':');
        if (c1 == std::string_view::npos) throw ParseError("field descriptor: missing ':' in \"" + std::string(s) + "\"");
        std::string_view kind = s.substr(0, c1);
        std::string_view rest = s.substr(c1 + 1);
        if (kind == "qp" || kind == "fqt") {
            long long p = parse_prime(rest);
            return kind == "qp" ? rational_at(p) : function_field(p);
        }
        if (kind == "eis") {
            size_t c2 = rest.find(':');
            if (c2 == std::string_view::npos)
                throw ParseError("field descriptor: eis needs \"eis:p:poly\"");
            long long p = parse_prime(rest.substr(0, c2));
            QPoly e = parse_qpoly(rest.substr(c2 + 1), 'x');
            std::vector<Int> coeffs;
            for (const auto& c : e.coeffs()) {
                if (boost::multiprecision::denominator(c) != 1)
                    throw ParseError("field descriptor: eis polynomial must have integer coefficients");
                coeffs.push_back(boost::multiprecision::numerator(c));
            }
            return eisenstein(p, std::move(coeffs));
        }
        throw ParseError("field descriptor: unknown kind \"" + std::string(kind) + "\"");
    }

    FieldKind kind() const { return kind_; }
    long long residue_char() const { return p_; }
    // Ramification degree over the base: deg E for eisenstein, else 1.
    long long ramification_degree() const {
        return kind_ == FieldKind::Eisenstein ? static_cast<long long>(eis_.size()) - 1 : 1;
    }
    const std::vector<Int>& eisenstein_poly() const { return eis_; }

    bool operator==(const FieldDescriptor& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && eis_ == o.eis_;
    }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind_) {
            case FieldKind::RationalAtP: return "qp:" + std::to_string(p_);
            case FieldKind::FunctionFieldAtT: return "fqt:" + std::to_string(p_);
            case FieldKind::Eisenstein: return "eis:" + std::to_string(p_) + ":" + poly_str();
        }
        return "?";
    }

    // Compact integer-polynomial form, descending: "x^4+4x^3+6x^2+4x+2".
    std::string poly_str() const {
        std::string out;
        for (size_t i = eis_.size(); i-- > 0;) {
            const Int& c = eis_[i];
            if (c == 0) continue;
            Int a = c < 0 ? Int(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? "-" : "+";
            }
            if (i == 0) {
                out += a.str();
            } else {
                if (a != 1) out += a.str();
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    FieldDescriptor(FieldKind kind, long long p, std::vector<Int> eis)
        : kind_(kind), p_(p), eis_(std::move(eis)) {}

    static void check_prime(long long p) {
        if (p >= (1LL << 31)) throw UnsupportedField("residue characteristic too large");
        if (!is_prime_ll(p))
            throw UnsupportedField("residue field size must be prime, got " + std::to_string(p));
    }
    static long long parse_prime(std::string_view s) {
        if (s.empty()) throw ParseError("field descriptor: missing prime");
        long long v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw ParseError("field descriptor: bad prime \"" + std::string(s) + "\"");
            v = v * 10 + (ch - '0');
            if (v >= (1LL << 31)) throw UnsupportedField("residue characteristic too large");
        }
        check_prime(v);
        return v;
    }

    FieldKind kind_;
    long long p_;
    std::vector<Int> eis_;
};

using FieldRef = std::shared_ptr<const FieldDescriptor>;

inline FieldRef make_field(FieldDescriptor d) {
    return std::make_shared<const FieldDescriptor>(std::move(d));
}
inline FieldRef parse_field(std::string_view s) { return make_field(FieldDescriptor::parse(s)); }

inline bool same_field(const FieldRef& a, const FieldRef& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace ellocal

#endif
