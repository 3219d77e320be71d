#include "crystal/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace crystal {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_reduce(Int v, const Int& p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

// Modular inverse via extended Euclid; a must be nonzero mod p.
Int mod_inverse(Int a, const Int& p) {
    Int old_r = mod_reduce(std::move(a), p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
    }
    if (old_r != 1) throw error("element has no modular inverse");
    return mod_reduce(std::move(old_s), p);
}

} // namespace

Field::Field(std::uint64_t ch) : characteristic(ch) {
    if (ch != 0 && !is_prime(ch))
        throw format_error("field characteristic must be 0 or a prime, got " +
                           std::to_string(ch));
}

Scalar::Scalar(Field f, Int numerator, Int denominator)
    : field_(f), num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void Scalar::normalize() {
    if (den_ == 0) throw format_error("zero denominator");
    if (field_.is_rational()) {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    } else {
        Int p(field_.characteristic);
        num_ = mod_reduce(std::move(num_), p);
        Int d = mod_reduce(std::move(den_), p);
        if (d == 0) throw format_error("denominator vanishes in GF(p)");
        if (d != 1) num_ = mod_reduce(num_ * mod_inverse(d, p), p);
        den_ = 1;
    }
}

Scalar Scalar::parse(Field f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar(f, Int(text));
    return Scalar(f, Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (field_ != o.field_) throw dimension_error("scalar field mismatch");
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (field_ != o.field_) throw dimension_error("scalar field mismatch");
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, -num_, den_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    if (field_.is_rational()) return Scalar(field_, den_, num_);
    return Scalar(field_, mod_inverse(num_, Int(field_.characteristic)));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar acc = Scalar::one(field_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    // Default-constructed zero compares equal to zero over any field.
    if (num_ == 0 && o.num_ == 0) return true;
    return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

} // namespace crystal
