#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace robincap {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// A point of the extended plane: either finite or the point at infinity.
class ExtendedPoint {
public:
    ExtendedPoint() = default;
    ExtendedPoint(Complex z) : value_(z) {}  // NOLINT(google-explicit-constructor)

    static ExtendedPoint infinity() {
        ExtendedPoint p;
        p.value_.reset();
        return p;
    }

    bool is_infinite() const { return !value_.has_value(); }
    Complex value() const {
        if (!value_) throw std::logic_error("value() on the point at infinity");
        return *value_;
    }

private:
    std::optional<Complex> value_ = Complex{};
};

/// Malformed input: bad files, invalid geometry, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure could not deliver a trustworthy result.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line, int column)
        : InputError(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace robincap
