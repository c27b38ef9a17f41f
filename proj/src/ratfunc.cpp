#include "flexrig/ratfunc.hpp"

#include <sstream>

namespace flexrig {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
}

std::optional<Rational> RatFunc::constant_value() const {
    if (num_.degree() <= 0 && den_.degree() == 0) return num_.coeff(0);
    return std::nullopt;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw EvaluationPole("evaluation at a pole: t = " + x.to_string());
    return num_.eval(x) / d;
}

namespace {

// Integer-coefficient representation of num/den, scaled by a common positive
// rational so both polynomials have integer coefficients with coprime joint
// content. The denominator keeps a positive leading coefficient.
struct IntPolyPair {
    std::vector<mpz_class> num, den;
};

IntPolyPair integer_scaled(const Poly& num, const Poly& den) {
    mpz_class lcm(1);
    for (const auto& c : num.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : den.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());

    IntPolyPair out;
    mpz_class content(0);
    auto scale = [&](const Poly& p, std::vector<mpz_class>& dst) {
        for (const auto& c : p.coeffs()) {
            mpz_class v = c.num() * (lcm / c.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
            dst.push_back(v);
        }
    };
    scale(num, out.num);
    scale(den, out.den);
    if (content > 1) {
        for (auto& v : out.num) v /= content;
        for (auto& v : out.den) v /= content;
    }
    return out;
}

size_t term_count(const std::vector<mpz_class>& coeffs) {
    size_t n = 0;
    for (const auto& c : coeffs)
        if (c != 0) ++n;
    return n;
}

std::string int_poly_to_string(const std::vector<mpz_class>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const mpz_class& c = coeffs[static_cast<size_t>(k)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (k >= 2) os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

// A denominator prints bare when it is a plain power of t or a bare integer;
// anything else is parenthesized.
bool den_needs_parens(const std::vector<mpz_class>& coeffs) {
    if (term_count(coeffs) >= 2) return true;
    if (coeffs.size() <= 1) return false;
    return abs(coeffs.back()) != 1;
}

} // namespace

std::string RatFunc::to_string() const {
    IntPolyPair ip = integer_scaled(num_, den_);
    if (ip.den.size() == 1 && ip.den[0] == 1) return int_poly_to_string(ip.num);

    std::string ns = int_poly_to_string(ip.num);
    if (term_count(ip.num) >= 2) ns = "(" + ns + ")";
    std::string ds = int_poly_to_string(ip.den);
    if (den_needs_parens(ip.den)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

} // namespace flexrig
