#include "robincap/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace robincap {

namespace {

Expr make(Op op, std::vector<Expr> args = {}, Complex value = {}) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    n->value = value;
    return n;
}

bool is_const_value(const Expr& e, Complex c) { return e->op == Op::Const && e->value == c; }

std::optional<int> as_small_int(Complex c) {
    if (c.imag() != 0.0) return std::nullopt;
    const double r = std::round(c.real());
    if (r != c.real() || std::abs(r) > 64) return std::nullopt;
    return static_cast<int>(r);
}

Complex ipow(Complex base, int n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    Complex result = 1.0;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Complex mobius_eval(const std::array<Complex, 4>& m, Complex u) {
    return (m[0] * u + m[1]) / (m[2] * u + m[3]);
}

}  // namespace

namespace expr {

Expr var() { return make(Op::Var); }
Expr constant(Complex c) { return make(Op::Const, {}, c); }

bool is_constant(const Expr& e) {
    if (e->op == Op::Var) return false;
    for (const auto& a : e->args)
        if (!is_constant(a)) return false;
    return true;
}

Expr add(Expr a, Expr b) {
    if (a->op == Op::Const && b->op == Op::Const) return constant(a->value + b->value);
    if (is_const_value(a, 0.0)) return b;
    if (is_const_value(b, 0.0)) return a;
    return make(Op::Add, {std::move(a), std::move(b)});
}

Expr sub(Expr a, Expr b) {
    if (a->op == Op::Const && b->op == Op::Const) return constant(a->value - b->value);
    if (is_const_value(b, 0.0)) return a;
    if (is_const_value(a, 0.0)) return neg(std::move(b));
    return make(Op::Sub, {std::move(a), std::move(b)});
}

Expr mul(Expr a, Expr b) {
    if (a->op == Op::Const && b->op == Op::Const) return constant(a->value * b->value);
    if (is_const_value(a, 0.0) || is_const_value(b, 0.0)) return constant(0.0);
    if (is_const_value(a, 1.0)) return b;
    if (is_const_value(b, 1.0)) return a;
    return make(Op::Mul, {std::move(a), std::move(b)});
}

Expr div(Expr a, Expr b) {
    if (is_const_value(b, 0.0)) throw InputError("division by the constant zero");
    if (a->op == Op::Const && b->op == Op::Const) return constant(a->value / b->value);
    if (is_const_value(a, 0.0)) return constant(0.0);
    if (is_const_value(b, 1.0)) return a;
    return make(Op::Div, {std::move(a), std::move(b)});
}

Expr neg(Expr a) {
    if (a->op == Op::Const) return constant(-a->value);
    if (a->op == Op::Neg) return a->args[0];
    return make(Op::Neg, {std::move(a)});
}

Expr pow(Expr a, Complex exponent) {
    if (exponent == 0.0) return constant(1.0);
    if (exponent == 1.0) return a;
    if (a->op == Op::Const) {
        if (auto n = as_small_int(exponent)) return constant(ipow(a->value, *n));
        return constant(std::pow(a->value, exponent));
    }
    return make(Op::Pow, {std::move(a)}, exponent);
}

Expr exp(Expr a) {
    if (a->op == Op::Const) return constant(std::exp(a->value));
    return make(Op::Exp, {std::move(a)});
}

Expr log(Expr a) {
    if (a->op == Op::Const) return constant(std::log(a->value));
    return make(Op::Log, {std::move(a)});
}

Expr sqrt(Expr a) {
    if (a->op == Op::Const) return constant(std::sqrt(a->value));
    return make(Op::Sqrt, {std::move(a)});
}

Expr mobius(Expr a, Complex ma, Complex mb, Complex mc, Complex md) {
    if (ma * md - mb * mc == 0.0) throw InputError("degenerate Mobius map (ad - bc = 0)");
    if (a->op == Op::Const) return constant(mobius_eval({ma, mb, mc, md}, a->value));
    auto n = std::make_shared<Node>();
    n->op = Op::Mobius;
    n->args = {std::move(a)};
    n->mobius = {ma, mb, mc, md};
    return n;
}

Complex eval(const Expr& e, Complex z) {
    switch (e->op) {
        case Op::Var: return z;
        case Op::Const: return e->value;
        case Op::Add: return eval(e->args[0], z) + eval(e->args[1], z);
        case Op::Sub: return eval(e->args[0], z) - eval(e->args[1], z);
        case Op::Mul: return eval(e->args[0], z) * eval(e->args[1], z);
        case Op::Div: return eval(e->args[0], z) / eval(e->args[1], z);
        case Op::Neg: return -eval(e->args[0], z);
        case Op::Pow: {
            const Complex base = eval(e->args[0], z);
            if (auto n = as_small_int(e->value)) return ipow(base, *n);
            return std::pow(base, e->value);
        }
        case Op::Exp: return std::exp(eval(e->args[0], z));
        case Op::Log: return std::log(eval(e->args[0], z));
        case Op::Sqrt: return std::sqrt(eval(e->args[0], z));
        case Op::Mobius: return mobius_eval(e->mobius, eval(e->args[0], z));
    }
    return {};
}

Expr derivative(const Expr& e) {
    switch (e->op) {
        case Op::Var: return constant(1.0);
        case Op::Const: return constant(0.0);
        case Op::Add: return add(derivative(e->args[0]), derivative(e->args[1]));
        case Op::Sub: return sub(derivative(e->args[0]), derivative(e->args[1]));
        case Op::Mul: {
            const auto& u = e->args[0];
            const auto& v = e->args[1];
            return add(mul(derivative(u), v), mul(u, derivative(v)));
        }
        case Op::Div: {
            const auto& u = e->args[0];
            const auto& v = e->args[1];
            return div(sub(mul(derivative(u), v), mul(u, derivative(v))), pow(v, 2.0));
        }
        case Op::Neg: return neg(derivative(e->args[0]));
        case Op::Pow: {
            const auto& u = e->args[0];
            return mul(mul(constant(e->value), pow(u, e->value - 1.0)), derivative(u));
        }
        case Op::Exp: return mul(e, derivative(e->args[0]));
        case Op::Log: return div(derivative(e->args[0]), e->args[0]);
        case Op::Sqrt: return div(derivative(e->args[0]), mul(constant(2.0), e));
        case Op::Mobius: {
            const auto& m = e->mobius;
            const auto& u = e->args[0];
            const Complex det = m[0] * m[3] - m[1] * m[2];
            Expr den = add(mul(constant(m[2]), u), constant(m[3]));
            return mul(div(constant(det), pow(den, 2.0)), derivative(u));
        }
    }
    return constant(0.0);
}

namespace {

std::string fmt_complex(Complex c) {
    std::ostringstream os;
    os.precision(17);
    if (c.imag() == 0.0) {
        os << c.real();
    } else if (c.real() == 0.0) {
        os << c.imag() << "i";
    } else {
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    return os.str();
}

}  // namespace

std::string to_string(const Expr& e) {
    switch (e->op) {
        case Op::Var: return "z";
        case Op::Const: return fmt_complex(e->value);
        case Op::Add: return "(" + to_string(e->args[0]) + " + " + to_string(e->args[1]) + ")";
        case Op::Sub: return "(" + to_string(e->args[0]) + " - " + to_string(e->args[1]) + ")";
        case Op::Mul: return to_string(e->args[0]) + "*" + to_string(e->args[1]);
        case Op::Div: return to_string(e->args[0]) + "/(" + to_string(e->args[1]) + ")";
        case Op::Neg: return "-(" + to_string(e->args[0]) + ")";
        case Op::Pow: return "(" + to_string(e->args[0]) + ")^" + fmt_complex(e->value);
        case Op::Exp: return "exp(" + to_string(e->args[0]) + ")";
        case Op::Log: return "log(" + to_string(e->args[0]) + ")";
        case Op::Sqrt: return "sqrt(" + to_string(e->args[0]) + ")";
        case Op::Mobius: {
            const auto& m = e->mobius;
            return "mobius(" + to_string(e->args[0]) + ", " + fmt_complex(m[0]) + ", " + fmt_complex(m[1]) +
                   ", " + fmt_complex(m[2]) + ", " + fmt_complex(m[3]) + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Truncated power series

namespace {

using Series = std::vector<Complex>;

Series s_const(Complex c, int order) {
    Series s(order + 1, 0.0);
    s[0] = c;
    return s;
}

Series s_mul(const Series& a, const Series& b) {
    Series r(a.size(), 0.0);
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) r[n] += a[k] * b[n - k];
    return r;
}

Series s_div(const Series& a, const Series& b) {
    if (std::abs(b[0]) == 0.0) throw NumericError("power series division by a vanishing leading term");
    Series r(a.size(), 0.0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        Complex acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * r[n - k];
        r[n] = acc / b[0];
    }
    return r;
}

Series s_exp(const Series& u) {
    Series r(u.size(), 0.0);
    r[0] = std::exp(u[0]);
    for (std::size_t n = 1; n < u.size(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * u[k] * r[n - k];
        r[n] = acc / static_cast<double>(n);
    }
    return r;
}

Series s_log(const Series& u) {
    if (std::abs(u[0]) == 0.0) throw NumericError("logarithm branch point in power series");
    Series r(u.size(), 0.0);
    r[0] = std::log(u[0]);
    for (std::size_t n = 1; n < u.size(); ++n) {
        Complex acc = static_cast<double>(n) * u[n];
        for (std::size_t k = 1; k < n; ++k) acc -= static_cast<double>(k) * r[k] * u[n - k];
        r[n] = acc / (static_cast<double>(n) * u[0]);
    }
    return r;
}

Series s_pow(const Series& u, Complex c) {
    const int order = static_cast<int>(u.size()) - 1;
    if (auto n = as_small_int(c)) {
        if (*n < 0) return s_div(s_const(1.0, order), s_pow(u, static_cast<double>(-*n)));
        Series result = s_const(1.0, order);
        Series base = u;
        int k = *n;
        while (k > 0) {
            if (k & 1) result = s_mul(result, base);
            base = s_mul(base, base);
            k >>= 1;
        }
        return result;
    }
    if (std::abs(u[0]) == 0.0) throw NumericError("non-integer power at a zero of its base");
    // n u0 v_n = sum_{k=1}^{n} (c k - (n - k)) u_k v_{n-k}
    Series v(u.size(), 0.0);
    v[0] = std::pow(u[0], c);
    for (std::size_t n = 1; n < u.size(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += (c * static_cast<double>(k) - static_cast<double>(n - k)) * u[k] * v[n - k];
        v[n] = acc / (static_cast<double>(n) * u[0]);
    }
    return v;
}

Series s_eval(const Expr& e, Complex z0, int order) {
    switch (e->op) {
        case Op::Var: {
            Series s = s_const(z0, order);
            if (order >= 1) s[1] = 1.0;
            return s;
        }
        case Op::Const: return s_const(e->value, order);
        case Op::Add: {
            Series a = s_eval(e->args[0], z0, order);
            const Series b = s_eval(e->args[1], z0, order);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            return a;
        }
        case Op::Sub: {
            Series a = s_eval(e->args[0], z0, order);
            const Series b = s_eval(e->args[1], z0, order);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        }
        case Op::Mul: return s_mul(s_eval(e->args[0], z0, order), s_eval(e->args[1], z0, order));
        case Op::Div: return s_div(s_eval(e->args[0], z0, order), s_eval(e->args[1], z0, order));
        case Op::Neg: {
            Series a = s_eval(e->args[0], z0, order);
            for (auto& x : a) x = -x;
            return a;
        }
        case Op::Pow: return s_pow(s_eval(e->args[0], z0, order), e->value);
        case Op::Exp: return s_exp(s_eval(e->args[0], z0, order));
        case Op::Log: return s_log(s_eval(e->args[0], z0, order));
        case Op::Sqrt: return s_pow(s_eval(e->args[0], z0, order), 0.5);
        case Op::Mobius: {
            const auto& m = e->mobius;
            const Series u = s_eval(e->args[0], z0, order);
            Series num(u.size()), den(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) {
                num[i] = m[0] * u[i];
                den[i] = m[2] * u[i];
            }
            num[0] += m[1];
            den[0] += m[3];
            return s_div(num, den);
        }
    }
    return s_const(0.0, order);
}

}  // namespace

std::vector<Complex> taylor(const Expr& e, Complex z0, int order) {
    if (order < 0) throw InputError("taylor: negative order");
    return s_eval(e, z0, order);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, int line) : text_(text), line_(line) {}

    Expr parse_all() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression: " + msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (;;) {
            if (accept('+')) lhs = expr::add(lhs, parse_term());
            else if (accept('-')) lhs = expr::sub(lhs, parse_term());
            else return lhs;
        }
    }

    Expr parse_term() {
        Expr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = expr::mul(lhs, parse_unary());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Expr rhs = parse_unary();
                if (is_const_value(rhs, 0.0)) {
                    pos_ = at;
                    fail("division by zero");
                }
                lhs = expr::div(lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    Expr parse_unary() {
        if (accept('-')) return expr::neg(parse_unary());
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (accept('^')) {
            const std::size_t at = pos_;
            Expr exponent = parse_unary();
            if (!expr::is_constant(exponent)) {
                pos_ = at;
                fail("exponent must be a constant");
            }
            return expr::pow(base, expr::eval(exponent, 0.0));
        }
        return base;
    }

    Complex constant_arg(const Expr& e, std::size_t at) {
        if (!expr::is_constant(e)) {
            pos_ = at;
            fail("function parameter must be a constant");
        }
        return expr::eval(e, 0.0);
    }

    Expr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (accept('(')) {
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') return parse_call(name, start);
            if (name == "z") return expr::var();
            if (name == "i") return expr::constant({0.0, 1.0});
            if (name == "pi") return expr::constant(kPi);
            if (name == "e") return expr::constant(std::exp(1.0));
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number '" + token + "'");
        }
        if (used != token.size()) {
            pos_ = start;
            fail("malformed number '" + token + "'");
        }
        if (pos_ < text_.size() && text_[pos_] == 'i' &&
            (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return expr::constant({0.0, v});
        }
        return expr::constant(v);
    }

    Expr parse_call(const std::string& name, std::size_t start) {
        expect('(');
        std::vector<Expr> args;
        std::vector<std::size_t> positions;
        skip_ws();
        positions.push_back(pos_);
        args.push_back(parse_expr());
        while (accept(',')) {
            skip_ws();
            positions.push_back(pos_);
            args.push_back(parse_expr());
        }
        expect(')');
        const auto arity = [&](std::size_t lo, std::size_t hi) {
            if (args.size() < lo || args.size() > hi) {
                pos_ = start;
                fail("wrong number of arguments to " + name);
            }
        };
        const Expr& u = args[0];
        const Complex I{0.0, 1.0};
        if (name == "exp") { arity(1, 1); return expr::exp(u); }
        if (name == "log") { arity(1, 1); return expr::log(u); }
        if (name == "sqrt") { arity(1, 1); return expr::sqrt(u); }
        if (name == "sin" || name == "cos" || name == "sinh" || name == "cosh") {
            arity(1, 1);
            const bool trig = name == "sin" || name == "cos";
            Expr arg = trig ? expr::mul(expr::constant(I), u) : u;
            Expr ep = expr::exp(arg);
            Expr em = expr::exp(expr::neg(arg));
            if (name == "cos" || name == "cosh") return expr::mul(expr::constant(0.5), expr::add(ep, em));
            Expr d = expr::mul(expr::constant(0.5), expr::sub(ep, em));
            return trig ? expr::mul(expr::constant(-I), d) : d;
        }
        if (name == "mobius") {
            arity(5, 5);
            Complex m[4];
            for (int k = 0; k < 4; ++k) m[k] = constant_arg(args[k + 1], positions[k + 1]);
            if (m[0] * m[3] - m[1] * m[2] == 0.0) {
                pos_ = start;
                fail("degenerate Mobius map (ad - bc = 0)");
            }
            return expr::mobius(u, m[0], m[1], m[2], m[3]);
        }
        if (name == "disk_auto") {
            arity(2, 3);
            const Complex a = constant_arg(args[1], positions[1]);
            const double theta = args.size() == 3 ? constant_arg(args[2], positions[2]).real() : 0.0;
            if (std::abs(a) >= 1.0) {
                pos_ = positions[1];
                fail("disk_auto parameter must satisfy |a| < 1");
            }
            const Complex rot = std::polar(1.0, theta);
            return expr::mobius(u, rot, -rot * a, -std::conj(a), 1.0);
        }
        if (name == "blaschke") {
            if (args.size() < 2) {
                pos_ = start;
                fail("blaschke needs at least one zero");
            }
            Expr product;
            for (std::size_t k = 1; k < args.size(); ++k) {
                const Complex a = constant_arg(args[k], positions[k]);
                if (std::abs(a) >= 1.0) {
                    pos_ = positions[k];
                    fail("Blaschke zeros must lie in the unit disk");
                }
                Expr factor = expr::mobius(u, 1.0, -a, -std::conj(a), 1.0);
                product = product ? expr::mul(product, factor) : factor;
            }
            return product;
        }
        if (name == "cayley") {
            arity(1, 1);
            return expr::mobius(u, 1.0, -I, 1.0, I);
        }
        pos_ = start;
        fail("unknown function '" + name + "'");
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, int line) { return Parser(text, line).parse_all(); }

Complex parse_constant(std::string_view text, int line) {
    Expr e = parse(text, line);
    if (!is_constant(e)) throw ParseError("expected a constant, got an expression in z", line, 1);
    return eval(e, 0.0);
}

}  // namespace expr

// ---------------------------------------------------------------------------
// Rational forms

namespace {

Polynomial p_trim(Polynomial p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    return p;
}

Polynomial p_add(const Polynomial& a, const Polynomial& b, double sign = 1.0) {
    Polynomial r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
    return p_trim(r);
}

Polynomial p_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return p_trim(r);
}

Polynomial p_scale(const Polynomial& a, Complex s) {
    Polynomial r = a;
    for (auto& c : r) c *= s;
    return p_trim(r);
}

RationalForm r_pow(const RationalForm& r, int n) {
    RationalForm base = n >= 0 ? r : RationalForm{r.denominator, r.numerator};
    int k = std::abs(n);
    RationalForm result{{1.0}, {1.0}};
    while (k > 0) {
        if (k & 1) result = {p_mul(result.numerator, base.numerator), p_mul(result.denominator, base.denominator)};
        base = {p_mul(base.numerator, base.numerator), p_mul(base.denominator, base.denominator)};
        k >>= 1;
    }
    return result;
}

}  // namespace

std::optional<RationalForm> to_rational(const Expr& e) {
    switch (e->op) {
        case Op::Var: return RationalForm{{0.0, 1.0}, {1.0}};
        case Op::Const: return RationalForm{{e->value}, {1.0}};
        case Op::Add:
        case Op::Sub: {
            auto a = to_rational(e->args[0]);
            auto b = to_rational(e->args[1]);
            if (!a || !b) return std::nullopt;
            const double sign = e->op == Op::Add ? 1.0 : -1.0;
            return RationalForm{p_add(p_mul(a->numerator, b->denominator), p_mul(b->numerator, a->denominator), sign),
                                p_mul(a->denominator, b->denominator)};
        }
        case Op::Mul: {
            auto a = to_rational(e->args[0]);
            auto b = to_rational(e->args[1]);
            if (!a || !b) return std::nullopt;
            return RationalForm{p_mul(a->numerator, b->numerator), p_mul(a->denominator, b->denominator)};
        }
        case Op::Div: {
            auto a = to_rational(e->args[0]);
            auto b = to_rational(e->args[1]);
            if (!a || !b) return std::nullopt;
            return RationalForm{p_mul(a->numerator, b->denominator), p_mul(a->denominator, b->numerator)};
        }
        case Op::Neg: {
            auto a = to_rational(e->args[0]);
            if (!a) return std::nullopt;
            return RationalForm{p_scale(a->numerator, -1.0), a->denominator};
        }
        case Op::Pow: {
            auto n = as_small_int(e->value);
            if (!n) return std::nullopt;
            auto a = to_rational(e->args[0]);
            if (!a) return std::nullopt;
            return r_pow(*a, *n);
        }
        case Op::Mobius: {
            auto a = to_rational(e->args[0]);
            if (!a) return std::nullopt;
            const auto& m = e->mobius;
            return RationalForm{p_add(p_scale(a->numerator, m[0]), p_scale(a->denominator, m[1])),
                                p_add(p_scale(a->numerator, m[2]), p_scale(a->denominator, m[3]))};
        }
        case Op::Exp:
        case Op::Log:
        case Op::Sqrt: return std::nullopt;
    }
    return std::nullopt;
}

Expr substitute(const Expr& outer, const Expr& inner) {
    switch (outer->op) {
        case Op::Var: return inner;
        case Op::Const: return outer;
        case Op::Add: return expr::add(substitute(outer->args[0], inner), substitute(outer->args[1], inner));
        case Op::Sub: return expr::sub(substitute(outer->args[0], inner), substitute(outer->args[1], inner));
        case Op::Mul: return expr::mul(substitute(outer->args[0], inner), substitute(outer->args[1], inner));
        case Op::Div: return expr::div(substitute(outer->args[0], inner), substitute(outer->args[1], inner));
        case Op::Neg: return expr::neg(substitute(outer->args[0], inner));
        case Op::Pow: return expr::pow(substitute(outer->args[0], inner), outer->value);
        case Op::Exp: return expr::exp(substitute(outer->args[0], inner));
        case Op::Log: return expr::log(substitute(outer->args[0], inner));
        case Op::Sqrt: return expr::sqrt(substitute(outer->args[0], inner));
        case Op::Mobius: {
            const auto& m = outer->mobius;
            return expr::mobius(substitute(outer->args[0], inner), m[0], m[1], m[2], m[3]);
        }
    }
    return outer;
}

HolomorphicMap::HolomorphicMap(Expr e, std::string source, int valence_hint)
    : expression_(std::move(e)), source_(std::move(source)), valence_hint_(valence_hint) {
    if (valence_hint_ < 1) throw InputError("valence hint must be >= 1");
    if (source_.empty()) source_ = expr::to_string(expression_);
    derivatives_[0] = expr::derivative(expression_);
    derivatives_[1] = expr::derivative(derivatives_[0]);
    derivatives_[2] = expr::derivative(derivatives_[1]);
    rational_ = to_rational(expression_);
}

HolomorphicMap HolomorphicMap::parse(std::string_view text, int valence_hint) {
    return HolomorphicMap(expr::parse(text), std::string(text), valence_hint);
}

PreimageMethod HolomorphicMap::preimage_method() const {
    if (!rational_) return PreimageMethod::NewtonDeflation;
    const auto& num = rational_->numerator;
    const auto& den = rational_->denominator;
    if (num.size() <= 2 && den.size() <= 2) return PreimageMethod::ClosedForm;
    return PreimageMethod::PolynomialRoots;
}

HolomorphicMap HolomorphicMap::compose_after(const HolomorphicMap& inner) const {
    return HolomorphicMap(substitute(expression_, inner.expression_),
                          "(" + source_ + ")o(" + inner.source_ + ")", valence_hint_ * inner.valence_hint_);
}

Complex schwarzian(const HolomorphicMap& f, Complex z) {
    const Complex d1 = f.derivative(z);
    if (std::abs(d1) == 0.0) throw InputError("schwarzian: f'(z) vanishes");
    const Complex q = f.second_derivative(z) / d1;
    return f.third_derivative(z) / d1 - 1.5 * q * q;
}

Complex schwarzian_from_coefficients(const HolomorphicMap& f, Complex z) {
    const auto c = f.taylor(z, 3);
    if (std::abs(c[1]) == 0.0) throw InputError("schwarzian: f'(z) vanishes");
    return 6.0 * (c[3] / c[1] - (c[2] * c[2]) / (c[1] * c[1]));
}

}  // namespace robincap
