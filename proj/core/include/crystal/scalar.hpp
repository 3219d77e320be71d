#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "crystal/errors.hpp"

namespace crystal {

using Int = boost::multiprecision::cpp_int;

// The coefficient field: GF(p) for a prime p, or the rationals when
// characteristic == 0. Primality is checked at construction.
struct Field {
    std::uint64_t characteristic = 0;

    Field() = default;
    explicit Field(std::uint64_t ch);

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const Field&) const = default;
};

// An exact field element: a residue in [0, p) over GF(p), or a reduced
// fraction with positive denominator over the rationals.
class Scalar {
  public:
    Scalar() = default; // zero over Q; usable as a neutral accumulator seed
    Scalar(Field f, Int numerator, Int denominator = 1);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    // Parses "3", "-4" or "2/7".
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void normalize();

    Field field_{};
    Int num_ = 0;
    Int den_ = 1;
};

} // namespace crystal
