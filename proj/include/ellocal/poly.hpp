#ifndef ELLOCAL_POLY_HPP
#define ELLOCAL_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellocal/errors.hpp"
#include "ellocal/valuation.hpp"

namespace ellocal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long mod_ll(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

inline long long mulmod_ll(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

// Inverse of a mod p (p prime, a not divisible by p), via extended gcd.
inline long long invmod_ll(long long a, long long p) {
    a = mod_ll(a, p);
    if (a == 0) throw DivisionByZero("residue field: inverse of 0 mod " + std::to_string(p));
    long long old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
    }
    if (old_r != 1) throw InternalError("invmod: modulus not coprime (non-prime p?)");
    return mod_ll(old_s, p);
}

// Dense polynomial over F_p, coefficients ascending, canonical (no trailing
// zeros, all values in [0,p)).  The zero polynomial has an empty coefficient
// vector and degree -1.
class FpPoly {
public:
    FpPoly() : p_(0) {}
    explicit FpPoly(long long p) : p_(p) {}
    FpPoly(long long p, std::vector<long long> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x = mod_ll(x, p_);
        normalize();
    }

    static FpPoly zero(long long p) { return FpPoly(p); }
    static FpPoly constant(long long p, long long v) { return FpPoly(p, {v}); }
    static FpPoly var(long long p) { return FpPoly(p, {0, 1}); }

    long long p() const { return p_; }
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    long long lead() const {
        if (is_zero()) throw InternalError("FpPoly: lead of zero polynomial");
        return c_.back();
    }

    FpPoly operator+(const FpPoly& o) const {
        check(o);
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = mod_ll(coeff(i) + o.coeff(i), p_);
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator-(const FpPoly& o) const {
        check(o);
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = mod_ll(coeff(i) - o.coeff(i), p_);
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator-() const {
        std::vector<long long> r(c_);
        for (auto& x : r) x = mod_ll(-x, p_);
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator*(const FpPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return FpPoly(p_ ? p_ : o.p_);
        std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = mod_ll(r[i + j] + mulmod_ll(c_[i], o.c_[j], p_), p_);
        return FpPoly(p_, std::move(r));
    }

    bool operator==(const FpPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
        check(d);
        if (d.is_zero()) throw DivisionByZero("FpPoly: division by zero polynomial");
        FpPoly q(p_), r = *this;
        long long dl_inv = invmod_ll(d.lead(), p_);
        std::vector<long long> qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0, 0);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            long long f = mulmod_ll(r.lead(), dl_inv, p_);
            int shift = r.degree() - d.degree();
            qc[shift] = f;
            std::vector<long long> rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rc[i + shift] = mod_ll(rc[i + shift] - mulmod_ll(f, d.c_[i], p_), p_);
            r = FpPoly(p_, std::move(rc));
        }
        return {FpPoly(p_, std::move(qc)), r};
    }
    FpPoly mod(const FpPoly& d) const { return divmod(d).second; }

    FpPoly make_monic() const {
        if (is_zero()) return *this;
        long long inv = invmod_ll(lead(), p_);
        std::vector<long long> r(c_);
        for (auto& x : r) x = mulmod_ll(x, inv, p_);
        return FpPoly(p_, std::move(r));
    }

    // Monic gcd.
    static FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.make_monic();
    }

    long long eval(long long x) const {
        long long acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = mod_ll(mulmod_ll(acc, x, p_) + c_[i], p_);
        return acc;
    }

    // t -> t^e substitution.
    FpPoly subst_pow(long long e) const {
        if (e < 1) throw InternalError("FpPoly: subst_pow needs e >= 1");
        if (is_zero()) return *this;
        std::vector<long long> r(static_cast<size_t>(degree()) * e + 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
        return FpPoly(p_, std::move(r));
    }

    // Index of the lowest nonzero coefficient (order of vanishing at t=0).
    Valuation order_at_zero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return Valuation(static_cast<long long>(i));
        return Valuation::infinity();
    }

    std::string str(char var) const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c_[i]);
            } else {
                if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void check(const FpPoly& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw DescriptorMismatch("FpPoly: mixed moduli " + std::to_string(p_) + " and " +
                                     std::to_string(o.p_));
    }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    long long p_;
    std::vector<long long> c_;
};

// Dense polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static QPoly constant(const Rat& v) { return QPoly({v}); }
    static QPoly var() { return QPoly({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const {
        if (is_zero()) throw InternalError("QPoly: lead of zero polynomial");
        return c_.back();
    }

    QPoly operator+(const QPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return QPoly(std::move(r));
    }
    QPoly operator-(const QPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return QPoly(std::move(r));
    }
    QPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x = -x;
        return QPoly(std::move(r));
    }
    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(r));
    }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("QPoly: division by zero polynomial");
        QPoly r = *this;
        std::vector<Rat> qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0, Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat f = r.lead() / d.lead();
            int shift = r.degree() - d.degree();
            qc[shift] = f;
            std::vector<Rat> rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rc[i + shift] -= f * d.c_[i];
            r = QPoly(std::move(rc));
        }
        return {QPoly(std::move(qc)), r};
    }
    QPoly mod(const QPoly& d) const { return divmod(d).second; }

    // Extended gcd: returns (g, u, v) with u*this + v*o = g, g monic or zero.
    static std::tuple<QPoly, QPoly, QPoly> egcd(const QPoly& a, const QPoly& b) {
        QPoly old_r = a, r = b;
        QPoly old_u = QPoly::constant(1), u;
        QPoly old_v, v = QPoly::constant(1);
        while (!r.is_zero()) {
            auto [q, rem] = old_r.divmod(r);
            old_r = std::exchange(r, rem);
            QPoly nu = old_u - q * u;
            old_u = std::exchange(u, nu);
            QPoly nv = old_v - q * v;
            old_v = std::exchange(v, nv);
        }
        if (!old_r.is_zero()) {
            Rat inv = Rat(1) / old_r.lead();
            old_r = old_r * QPoly::constant(inv);
            old_u = old_u * QPoly::constant(inv);
            old_v = old_v * QPoly::constant(inv);
        }
        return {old_r, old_u, old_v};
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// p-adic valuation of a nonzero integer.
inline long long vp_int(Int n, long long p) {
    if (n == 0) throw InternalError("vp_int: valuation of 0");
    long long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// p-adic valuation of a rational, +infinity for 0.
inline Valuation vp_rat(const Rat& x, long long p) {
    if (x == 0) return Valuation::infinity();
    return Valuation(vp_int(boost::multiprecision::numerator(x), p) -
                     vp_int(boost::multiprecision::denominator(x), p));
}

// Rational function over F_p in canonical form: denominator monic,
// gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(long long p) : num_(p), den_(FpPoly::constant(p, 1)) {}
    RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    long long p() const { return den_.p(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw DivisionByZero("function field: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Valuation order_at_zero() const {
        if (is_zero()) return Valuation::infinity();
        return num_.order_at_zero() - den_.order_at_zero();
    }

    RatFunc subst_pow(long long e) const {
        return RatFunc(num_.subst_pow(e), den_.subst_pow(e));
    }

    std::string str(char var = 't') const {
        if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("function field: zero denominator");
        if (num_.is_zero()) {
            den_ = FpPoly::constant(den_.p(), 1);
            return;
        }
        FpPoly g = FpPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        long long inv = invmod_ll(den_.lead(), den_.p());
        num_ = num_ * FpPoly::constant(num_.p(), inv);
        den_ = den_ * FpPoly::constant(den_.p(), inv);
    }

    FpPoly num_, den_;
};

} // namespace ellocal

#endif
