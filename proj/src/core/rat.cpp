#include "fubini/rat.hpp"

#include <cctype>

namespace fubini {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Int int_from_string(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw std::invalid_argument("malformed integer literal: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Int(s, 10);
}

std::string to_string(const Int& value) { return value.get_str(10); }

Rat::Rat(const Int& numerator, const Int& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(int_from_string(text));
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    Int d(std::string(den), 10);
    if (d == 0) throw DomainError("rational literal with zero denominator: '" + std::string(text) + "'");
    return Rat(int_from_string(num), d);
}

std::string Rat::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rat Rat::operator-() const { return Rat(Raw{}, mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& other) {
    value_ += other.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& other) {
    value_ -= other.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& other) {
    value_ *= other.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& other) {
    if (other.is_zero()) throw DomainError("division by zero");
    value_ /= other.value_;
    return *this;
}

Rat abs(const Rat& value) { return value.sign() < 0 ? -value : value; }

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) return Rat(1) / pow(base, -exponent);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(num, den);
}

Int pow(const Int& base, unsigned long exponent) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

}  // namespace fubini
