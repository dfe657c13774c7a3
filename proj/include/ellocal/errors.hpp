#ifndef ELLOCAL_ERRORS_HPP
#define ELLOCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellocal {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two elements from different fields were combined.
class DescriptorMismatch : public Error {
public:
    explicit DescriptorMismatch(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// reduce() on an element with a pole at the maximal ideal.
class NegativeValuation : public Error {
public:
    explicit NegativeValuation(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A model with vanishing discriminant was handed to an algorithm that
// needs a nonsingular curve.
class SingularModel : public Error {
public:
    explicit SingularModel(const std::string& msg) : Error(msg) {}
};

// Base-change prediction was requested for a ramification degree sharing a
// factor with the residue characteristic.
class WildExtension : public Error {
public:
    explicit WildExtension(const std::string& msg) : Error(msg) {}
};

// Field descriptor outside what this library supports.
class UnsupportedField : public Error {
public:
    explicit UnsupportedField(const std::string& msg) : Error(msg) {}
};

// An operation that needs additive reduction was called on a curve with
// good or multiplicative reduction.
class NonAdditiveReduction : public Error {
public:
    explicit NonAdditiveReduction(const std::string& msg) : Error(msg) {}
};

// Internal invariant violation; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace ellocal

#endif
