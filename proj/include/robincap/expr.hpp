#pragma once

// Holomorphic maps as expression trees over z.
//
// The grammar accepted by HolomorphicMap::parse:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | number 'i' | 'z' | 'i' | 'pi' | 'e'
//            | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: exp, log, sqrt, sin, cos, sinh, cosh,
//   mobius(u, a, b, c, d)        (a u + b) / (c u + d)
//   disk_auto(u, a [, theta])    e^{i theta} (u - a) / (1 - conj(a) u)
//   blaschke(u, a1, ..., an)     product of disk_auto(u, ak)
//   cayley(u)                    (u - i) / (u + i)
// Function parameters other than the first argument must be constants.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robincap/types.hpp"

namespace robincap {

enum class Op { Var, Const, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sqrt, Mobius };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    Op op;
    Complex value{};               // Const value, or Pow exponent
    std::vector<Expr> args;
    std::array<Complex, 4> mobius{};  // a, b, c, d for Op::Mobius
};

namespace expr {

Expr var();
Expr constant(Complex c);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr neg(Expr a);
Expr pow(Expr a, Complex exponent);
Expr exp(Expr a);
Expr log(Expr a);
Expr sqrt(Expr a);
Expr mobius(Expr a, Complex ma, Complex mb, Complex mc, Complex md);

bool is_constant(const Expr& e);
Complex eval(const Expr& e, Complex z);
Expr derivative(const Expr& e);
std::string to_string(const Expr& e);

/// Taylor coefficients c_0..c_order of e around z0, by truncated power-series
/// arithmetic. Throws NumericError at branch points.
std::vector<Complex> taylor(const Expr& e, Complex z0, int order);

/// Parses an expression; `line` is used only for error positions.
Expr parse(std::string_view text, int line = 1);

/// Evaluates a constant expression such as "pi/2" or "0.3-0.2i".
Complex parse_constant(std::string_view text, int line = 1);

}  // namespace expr

/// Polynomial with coefficients in increasing degree.
using Polynomial = std::vector<Complex>;

struct RationalForm {
    Polynomial numerator;
    Polynomial denominator;
};

enum class PreimageMethod { ClosedForm, PolynomialRoots, NewtonDeflation };

class HolomorphicMap {
public:
    static HolomorphicMap parse(std::string_view text, int valence_hint = 1);
    explicit HolomorphicMap(Expr e, std::string source = {}, int valence_hint = 1);

    Complex operator()(Complex z) const { return expr::eval(expression_, z); }
    Complex derivative(Complex z) const { return expr::eval(derivatives_[0], z); }
    Complex second_derivative(Complex z) const { return expr::eval(derivatives_[1], z); }
    Complex third_derivative(Complex z) const { return expr::eval(derivatives_[2], z); }

    /// c_0..c_order with c_n = f^{(n)}(z0)/n!.
    std::vector<Complex> taylor(Complex z0, int order) const {
        return expr::taylor(expression_, z0, order);
    }

    const Expr& expression() const { return expression_; }
    const Expr& derivative_expression() const { return derivatives_[0]; }
    const std::string& source() const { return source_; }
    int valence_hint() const { return valence_hint_; }

    /// Numerator/denominator form when the map is rational in z.
    const std::optional<RationalForm>& rational() const { return rational_; }
    PreimageMethod preimage_method() const;

    HolomorphicMap compose_after(const HolomorphicMap& inner) const;

private:
    Expr expression_;
    std::array<Expr, 3> derivatives_;
    std::string source_;
    int valence_hint_ = 1;
    std::optional<RationalForm> rational_;
};

/// Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 from the derivative trees.
Complex schwarzian(const HolomorphicMap& f, Complex z);

/// The same quantity from local coefficients: 6 (c3/c1 - c2^2/c1^2).
Complex schwarzian_from_coefficients(const HolomorphicMap& f, Complex z);

/// Substitutes `inner` for z in `outer`.
Expr substitute(const Expr& outer, const Expr& inner);

std::optional<RationalForm> to_rational(const Expr& e);

}  // namespace robincap
