#ifndef ELLOCAL_VALUATION_HPP
#define ELLOCAL_VALUATION_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "ellocal/errors.hpp"

namespace ellocal {

// Value of a discrete valuation: an integer or +infinity (for 0).
class Valuation {
public:
    Valuation() : inf_(true), v_(0) {}
    Valuation(long long v) : inf_(false), v_(v) {} // NOLINT(google-explicit-constructor)

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return inf_; }
    long long value() const {
        if (inf_) throw InternalError("valuation: value() on +infinity");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return Valuation(v_ + o.v_);
    }
    Valuation operator-(const Valuation& o) const {
        if (inf_) return infinity();
        if (o.inf_) throw InternalError("valuation: cannot subtract +infinity");
        return Valuation(v_ - o.v_);
    }

    bool operator==(const Valuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    // Comparisons against plain integers, used all over Tate's steps.
    bool operator==(long long k) const { return !inf_ && v_ == k; }
    bool operator<(long long k) const { return !inf_ && v_ < k; }
    bool operator>=(long long k) const { return inf_ || v_ >= k; }
    bool operator>(long long k) const { return inf_ || v_ > k; }
    bool operator<=(long long k) const { return !inf_ && v_ <= k; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    bool inf_;
    long long v_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

// Exact fraction with small integer parts, plus +infinity.  Used for the
// weighted minimum min_i v(a_i)/i and for the table thresholds, which must
// compare exactly.
class Fraction {
public:
    Fraction() : num_(0), den_(1), inf_(true) {}
    Fraction(long long num, long long den) : num_(num), den_(den), inf_(false) {
        if (den_ == 0) throw InternalError("fraction: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    Fraction(long long num) : Fraction(num, 1) {} // NOLINT(google-explicit-constructor)

    static Fraction infinity() { return Fraction(); }

    bool is_infinite() const { return inf_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    bool operator==(const Fraction& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool operator<(const Fraction& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Fraction& o) const { return *this < o || *this == o; }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return o <= *this; }

    // "1/4", "3", "inf"
    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Always slashed: "1/4", "0/1"; used in certificate serialization.
    std::string str_slashed() const {
        if (inf_) return "inf";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_, den_;
    bool inf_;
};

} // namespace ellocal

#endif
