#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trikraft {

/// Arbitrary-precision unsigned integer. Little-endian base-2^32 limbs with
/// no high zero limbs; an empty limb vector means zero.
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t value);

    static BigNat power(std::uint32_t base, std::uint32_t exponent);
    static BigNat power_of_two(std::size_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool bit(std::size_t index) const;
    std::size_t bit_length() const;

    BigNat& operator+=(const BigNat& rhs);
    /// Requires *this >= rhs.
    BigNat& operator-=(const BigNat& rhs);
    friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
    friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }
    friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);

    BigNat& shift_left(std::size_t bits);
    BigNat& shift_right(std::size_t bits);

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<BigNat, BigNat> div_mod(const BigNat& dividend, const BigNat& divisor);
    static BigNat gcd(BigNat a, BigNat b);

    std::strong_ordering operator<=>(const BigNat& rhs) const;
    bool operator==(const BigNat& rhs) const { return limbs_ == rhs.limbs_; }

    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
    void set_bit(std::size_t index);
    std::uint32_t div_mod_small(std::uint32_t divisor);
};

/// Reduced fraction over BigNat magnitudes. The denominator is always
/// positive; the sign lives in a flag so Kraft sums stay exact end to end.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long long value);
    ExactRational(long long numerator, long long denominator);
    ExactRational(BigNat numerator, BigNat denominator, bool negative = false);

    bool is_negative() const { return negative_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigNat(1); }
    const BigNat& numerator() const { return num_; }
    const BigNat& denominator() const { return den_; }

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);
    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

    std::strong_ordering operator<=>(const ExactRational& rhs) const;
    bool operator==(const ExactRational& rhs) const;

    /// "p/q" in lowest terms; integers print without the "/q" part.
    std::string to_string() const;

private:
    bool negative_ = false;
    BigNat num_;
    BigNat den_ = BigNat(1);

    void reduce();
};

} // namespace trikraft
