#pragma once

#include <stdexcept>
#include <string>

namespace absirr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

class InfiniteGroupNoBound : public Error {
public:
    InfiniteGroupNoBound()
        : Error("group has positive free rank; an explicit length bound is required") {}
};

/// A search exceeded its node budget. Never raised silently truncated.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what, long long budget)
        : Error(what + ": budget of " + std::to_string(budget) + " nodes exceeded"),
          budget_(budget) {}
    long long budget() const noexcept { return budget_; }

private:
    long long budget_;
};

class NotZeroSum : public Error {
public:
    NotZeroSum() : Error("sequence is not a zero-sum sequence") {}
};

class AtomNotInSet : public Error {
public:
    AtomNotInSet() : Error("sequence is not an atom of the given atom set") {}
};

class NotMember : public Error {
public:
    using Error::Error;
};

class NoWitness : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    explicit NotPrime(const std::string& p) : Error(p + " is not prime") {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial has no fixed divisor") {}
};

class NotIntegerValued : public Error {
public:
    using Error::Error;
};

/// Carries the name of the precondition clause that failed.
class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(std::string clause)
        : Error("precondition failed: " + clause), clause_(std::move(clause)) {}
    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

class ZeroOrUnit : public Error {
public:
    ZeroOrUnit() : Error("element is zero or a unit") {}
};

class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("division by zero") {}
};

}  // namespace absirr
