#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace cqg {

/// Opaque token naming an irreducible representation within one model.
struct IrrepLabel {
    std::string id;

    IrrepLabel() = default;
    IrrepLabel(std::string s) : id(std::move(s)) {}
    IrrepLabel(const char* s) : id(s) {}

    auto operator<=>(const IrrepLabel&) const = default;
    bool operator==(const IrrepLabel&) const = default;
};

inline std::string to_string(const IrrepLabel& l) { return l.id; }

/// Numerical thresholds shared by every check.
///
/// `eigen_group` is a log-scale threshold: two eigenvalues are the same
/// iff |ln a - ln b| <= eigen_group.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;
    double eigen_group = 1e-9;

    static Tolerance uniform(double v) { return {v, v, v}; }
};

bool valid(const Tolerance& tol);

// Error taxonomy. Everything derives from Error so callers (the CLI in
// particular) can map failures onto exit codes in one place.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const IrrepLabel& l) : Error("unknown irrep label '" + l.id + "'") {}
};

class TruncationError : public Error {
public:
    TruncationError(IrrepLabel left, IrrepLabel right)
        : Error("pair (" + left.id + ", " + right.id + ") is not in the ingested fusion table"),
          left_(std::move(left)), right_(std::move(right)) {}
    const IrrepLabel& left() const { return left_; }
    const IrrepLabel& right() const { return right_; }

private:
    IrrepLabel left_;
    IrrepLabel right_;
};

class CgUnavailable : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace cqg
