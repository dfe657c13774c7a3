#ifndef ELLOCAL_KODAIRA_HPP
#define ELLOCAL_KODAIRA_HPP

#include <string>

#include "ellocal/errors.hpp"

namespace ellocal {

enum class KodairaTag { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

// Kodaira reduction type; n >= 1 is carried for the parametric families
// In and In*.
class KodairaType {
public:
    static KodairaType I0() { return KodairaType(KodairaTag::I0, 0); }
    static KodairaType In(long long n) {
        if (n < 1) throw InternalError("KodairaType: In needs n >= 1");
        return KodairaType(KodairaTag::In, n);
    }
    static KodairaType II() { return KodairaType(KodairaTag::II, 0); }
    static KodairaType III() { return KodairaType(KodairaTag::III, 0); }
    static KodairaType IV() { return KodairaType(KodairaTag::IV, 0); }
    static KodairaType I0star() { return KodairaType(KodairaTag::I0star, 0); }
    static KodairaType Instar(long long n) {
        if (n < 1) throw InternalError("KodairaType: In* needs n >= 1");
        return KodairaType(KodairaTag::Instar, n);
    }
    static KodairaType IVstar() { return KodairaType(KodairaTag::IVstar, 0); }
    static KodairaType IIIstar() { return KodairaType(KodairaTag::IIIstar, 0); }
    static KodairaType IIstar() { return KodairaType(KodairaTag::IIstar, 0); }

    KodairaTag tag() const { return tag_; }
    long long n() const {
        if (tag_ != KodairaTag::In && tag_ != KodairaTag::Instar)
            throw InternalError("KodairaType: n on a non-parametric type");
        return n_;
    }

    bool is_good() const { return tag_ == KodairaTag::I0; }
    bool is_multiplicative() const { return tag_ == KodairaTag::In; }
    bool is_additive() const { return !is_good() && !is_multiplicative(); }

    bool operator==(const KodairaType& o) const { return tag_ == o.tag_ && n_ == o.n_; }
    bool operator!=(const KodairaType& o) const { return !(*this == o); }

    std::string str() const {
        switch (tag_) {
            case KodairaTag::I0: return "I0";
            case KodairaTag::In: return "I" + std::to_string(n_);
            case KodairaTag::II: return "II";
            case KodairaTag::III: return "III";
            case KodairaTag::IV: return "IV";
            case KodairaTag::I0star: return "I0*";
            case KodairaTag::Instar: return "I" + std::to_string(n_) + "*";
            case KodairaTag::IVstar: return "IV*";
            case KodairaTag::IIIstar: return "III*";
            case KodairaTag::IIstar: return "II*";
        }
        return "?";
    }

private:
    KodairaType(KodairaTag tag, long long n) : tag_(tag), n_(n) {}

    KodairaTag tag_;
    long long n_;
};

} // namespace ellocal

#endif
