#include "currents/exact.hpp"

#include <cctype>
#include <ostream>

namespace currents {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::of(long p, long q) {
    if (q == 0) throw DivisionByZero();
    Rational r;
    r.value_ = mpq_class(mpz_class(p), mpz_class(q));
    r.value_.canonicalize();
    return r;
}

Rational Rational::of(const mpz_class& p, const mpz_class& q) {
    if (q == 0) throw DivisionByZero();
    Rational r;
    r.value_ = mpq_class(p, q);
    r.value_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            throw ParseError("", "malformed rational '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits))
        throw ParseError("", "malformed rational '" + std::string(text) + "'");

    // mpz_class rejects a leading '+'
    mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class q(den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10));
    return of(p, q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string out = "(" + re_.to_string();
    out += im_.sign() < 0 ? "-" : "+";
    out += im_.abs().to_string() + "i)";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

}  // namespace currents
