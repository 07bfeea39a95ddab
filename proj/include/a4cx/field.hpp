#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "a4cx/errors.hpp"

namespace a4cx {

enum class Field : std::uint8_t { F2, F4 };

inline const char* field_name(Field f) { return f == Field::F2 ? "F2" : "F4"; }

// Element of F2 or GF(4). Encoding: bit0 = a, bit1 = b for a + b*w,
// where w^2 = w + 1. F2 values only use bit0.
class Scalar {
  public:
    Scalar() : field_(Field::F2), v_(0) {}
    Scalar(Field f, std::uint8_t v) : field_(f), v_(v) {
        if (f == Field::F2 && v > 1) throw DomainError("F2 scalar out of range");
        if (v > 3) throw DomainError("scalar out of range");
    }

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    static Scalar omega() { return Scalar(Field::F4, 2); }

    Field field() const { return field_; }
    std::uint8_t bits() const { return v_; }
    bool a_bit() const { return v_ & 1; }
    bool b_bit() const { return (v_ >> 1) & 1; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(Scalar o) const {
        check(o);
        return Scalar(field_, static_cast<std::uint8_t>(v_ ^ o.v_));
    }
    Scalar operator*(Scalar o) const {
        check(o);
        return Scalar(field_, mul_table[v_][o.v_]);
    }
    Scalar inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Scalar(field_, inv_table[v_]);
    }
    Scalar square() const { return *this * *this; }

    bool operator==(const Scalar& o) const = default;

    std::string str() const {
        switch (v_) {
            case 0: return "0";
            case 1: return "1";
            case 2: return "w";
            default: return "w+1";
        }
    }

  private:
    void check(Scalar o) const {
        if (field_ != o.field_) throw DomainError("field mismatch");
    }
    // (a1+b1w)(a2+b2w) = (a1a2+b1b2) + (a1b2+a2b1+b1b2)w
    static constexpr std::uint8_t mul_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    static constexpr std::uint8_t inv_table[4] = {0, 1, 3, 2};

    Field field_;
    std::uint8_t v_;
};

// Nonzero elements, useful for exhaustive loops.
inline std::array<Scalar, 3> units(Field f) {
    if (f == Field::F2)
        return {Scalar::one(f), Scalar::one(f), Scalar::one(f)};
    return {Scalar(f, 1), Scalar(f, 2), Scalar(f, 3)};
}

inline int unit_count(Field f) { return f == Field::F2 ? 1 : 3; }
inline int field_size(Field f) { return f == Field::F2 ? 2 : 4; }

inline Scalar scalar_from_index(Field f, int i) {
    return Scalar(f, static_cast<std::uint8_t>(i));
}

}  // namespace a4cx
