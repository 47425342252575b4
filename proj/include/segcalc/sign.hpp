#pragma once

#include <cstdint>
#include <string>

namespace segcalc {

/// An element of {+1, -1} under multiplication.
class Sign {
public:
    constexpr Sign() = default;

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }

    /// Throws PreconditionError unless value is +1 or -1.
    static Sign from_int(int value);

    /// (-1)^exponent.
    static constexpr Sign parity(std::int64_t exponent) { return Sign(exponent % 2 != 0); }

    constexpr int value() const { return negative_ ? -1 : 1; }
    constexpr bool is_negative() const { return negative_; }

    /// this^exponent; exponent must be non-negative.
    constexpr Sign pow(std::int64_t exponent) const {
        return Sign(negative_ && exponent % 2 != 0);
    }

    constexpr Sign operator*(Sign other) const { return Sign(negative_ != other.negative_); }
    constexpr Sign& operator*=(Sign other) {
        negative_ = negative_ != other.negative_;
        return *this;
    }
    constexpr Sign operator-() const { return Sign(!negative_); }

    friend constexpr bool operator==(Sign, Sign) = default;

    /// "+1" or "-1".
    std::string str() const { return negative_ ? "-1" : "+1"; }

private:
    constexpr explicit Sign(bool negative) : negative_(negative) {}

    bool negative_ = false;
};

}  // namespace segcalc
