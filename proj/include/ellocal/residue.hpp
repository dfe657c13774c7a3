#ifndef ELLOCAL_RESIDUE_HPP
#define ELLOCAL_RESIDUE_HPP

#include <string>
#include <vector>

#include "ellocal/errors.hpp"
#include "ellocal/poly.hpp"

namespace ellocal {

// Element of the residue field F_p, canonical representative in [0,p).
// A default-constructed Residue is the zero of an unspecified prime field
// and unifies with any modulus; this keeps generic code simple.
class Residue {
public:
    Residue() : v_(0), p_(0) {}
    Residue(long long value, long long p) : v_(mod_ll(value, p)), p_(p) {}

    long long value() const { return v_; }
    long long prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Residue operator+(const Residue& o) const {
        long long p = unify(o);
        return Residue(v_ + o.v_, p);
    }
    Residue operator-(const Residue& o) const {
        long long p = unify(o);
        return Residue(v_ - o.v_, p);
    }
    Residue operator-() const { return p_ ? Residue(-v_, p_) : Residue(); }
    Residue operator*(const Residue& o) const {
        long long p = unify(o);
        return Residue(mulmod_ll(v_, o.v_, p), p);
    }
    Residue inverse() const {
        if (p_ == 0 || v_ == 0) throw DivisionByZero("residue field: inverse of zero");
        return Residue(invmod_ll(v_, p_), p_);
    }
    Residue operator/(const Residue& o) const { return *this * o.inverse(); }

    bool operator==(const Residue& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
        return v_ == o.v_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }
    bool operator<(const Residue& o) const { return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    long long unify(const Residue& o) const {
        if (p_ == 0 && o.p_ == 0)
            throw InternalError("residue: arithmetic on two unspecified-field zeros");
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw DescriptorMismatch("residue: mixed primes " + std::to_string(p_) + " and " +
                                     std::to_string(o.p_));
        return p_ ? p_ : o.p_;
    }

    long long v_, p_;
};

struct ResidueRoot {
    Residue root;
    int multiplicity;
};

// All roots in F_p of a nonzero polynomial (coefficients ascending), with
// multiplicities, in ascending order of canonical representative.  Brute
// force over the field; p is assumed small, which v1 guarantees.
inline std::vector<ResidueRoot> residue_roots(const FpPoly& f) {
    if (f.is_zero()) throw Error("residue_roots: zero polynomial");
    long long p = f.p();
    std::vector<ResidueRoot> out;
    for (long long x = 0; x < p; ++x) {
        if (f.eval(x) != 0) continue;
        // multiplicity by repeated synthetic division by (X - x)
        int mult = 0;
        FpPoly g = f;
        while (!g.is_zero() && g.eval(x) == 0) {
            std::vector<long long> q(g.degree() >= 1 ? g.degree() : 0, 0);
            long long carry = 0;
            for (int i = g.degree(); i >= 1; --i) {
                carry = mod_ll(mulmod_ll(carry, x, p) + g.coeff(i), p);
                q[i - 1] = carry;
            }
            g = FpPoly(p, std::move(q));
            ++mult;
        }
        out.push_back({Residue(x, p), mult});
    }
    return out;
}

inline std::vector<ResidueRoot> residue_roots(const std::vector<Residue>& coeffs) {
    long long p = 0;
    for (const auto& c : coeffs)
        if (c.prime() != 0) { p = c.prime(); break; }
    if (p == 0) throw Error("residue_roots: zero polynomial");
    std::vector<long long> cc;
    cc.reserve(coeffs.size());
    for (const auto& c : coeffs) cc.push_back(c.value());
    return residue_roots(FpPoly(p, std::move(cc)));
}

// Smallest root of f in F_p with multiplicity >= mult, if any.
inline bool find_root_with_multiplicity(const FpPoly& f, int mult, Residue& out) {
    for (const auto& r : residue_roots(f)) {
        if (r.multiplicity >= mult) {
            out = r.root;
            return true;
        }
    }
    return false;
}

} // namespace ellocal

#endif
