#include "trikraft/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace trikraft {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigNat::BigNat(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigNat BigNat::power(std::uint32_t base, std::uint32_t exponent) {
    BigNat result(1);
    BigNat factor(base);
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * factor;
        }
        exponent >>= 1;
        if (exponent != 0) {
            factor = factor * factor;
        }
    }
    return result;
}

BigNat BigNat::power_of_two(std::size_t exponent) {
    BigNat result(1);
    result.shift_left(exponent);
    return result;
}

bool BigNat::bit(std::size_t index) const {
    const std::size_t limb = index / 32;
    if (limb >= limbs_.size()) {
        return false;
    }
    return (limbs_[limb] >> (index % 32)) & 1u;
}

void BigNat::set_bit(std::size_t index) {
    const std::size_t limb = index / 32;
    if (limb >= limbs_.size()) {
        limbs_.resize(limb + 1, 0);
    }
    limbs_[limb] |= 1u << (index % 32);
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) {
        return 0;
    }
    std::size_t bits = 32 * (limbs_.size() - 1);
    std::uint32_t top = limbs_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) {
        limbs_.resize(rhs.limbs_.size(), 0);
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) {
            sum += rhs.limbs_[i];
        }
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (*this < rhs) {
        throw std::underflow_error("BigNat subtraction would go negative");
    }
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) {
            diff -= rhs.limbs_[i];
        }
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return BigNat();
    }
    BigNat result;
    result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = result.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
            result.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = result.limbs_[k] + carry;
            result.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    result.trim();
    return result;
}

BigNat& BigNat::shift_left(std::size_t bits) {
    if (is_zero() || bits == 0) {
        return *this;
    }
    const std::size_t limb_shift = bits / 32;
    const std::size_t bit_shift = bits % 32;
    std::vector<std::uint32_t> shifted(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const std::uint64_t piece = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        shifted[i + limb_shift] |= static_cast<std::uint32_t>(piece & 0xffffffffu);
        shifted[i + limb_shift + 1] |= static_cast<std::uint32_t>(piece >> 32);
    }
    limbs_ = std::move(shifted);
    trim();
    return *this;
}

BigNat& BigNat::shift_right(std::size_t bits) {
    const std::size_t limb_shift = bits / 32;
    const std::size_t bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> shifted(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        std::uint64_t piece = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size()) {
            piece |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        }
        shifted[i] = static_cast<std::uint32_t>(piece & 0xffffffffu);
    }
    limbs_ = std::move(shifted);
    trim();
    return *this;
}

std::pair<BigNat, BigNat> BigNat::div_mod(const BigNat& dividend, const BigNat& divisor) {
    if (divisor.is_zero()) {
        throw std::domain_error("BigNat division by zero");
    }
    BigNat quotient;
    BigNat remainder;
    const std::size_t bits = dividend.bit_length();
    for (std::size_t i = bits; i-- > 0;) {
        remainder.shift_left(1);
        if (dividend.bit(i)) {
            remainder.set_bit(0);
        }
        if (remainder >= divisor) {
            remainder -= divisor;
            quotient.set_bit(i);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = div_mod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
        return limbs_.size() <=> rhs.limbs_.size();
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) {
            return limbs_[i] <=> rhs.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

std::uint32_t BigNat::div_mod_small(std::uint32_t divisor) {
    std::uint64_t remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (remainder << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        remainder = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(remainder);
}

std::string BigNat::to_string() const {
    if (is_zero()) {
        return "0";
    }
    BigNat scratch = *this;
    std::string digits;
    while (!scratch.is_zero()) {
        std::uint32_t chunk = scratch.div_mod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

ExactRational::ExactRational(long long value)
    : negative_(value < 0),
      num_(value < 0 ? -static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value)) {}

ExactRational::ExactRational(long long numerator, long long denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    negative_ = (numerator < 0) != (denominator < 0);
    num_ = BigNat(numerator < 0 ? -static_cast<std::uint64_t>(numerator)
                                : static_cast<std::uint64_t>(numerator));
    den_ = BigNat(denominator < 0 ? -static_cast<std::uint64_t>(denominator)
                                  : static_cast<std::uint64_t>(denominator));
    reduce();
}

ExactRational::ExactRational(BigNat numerator, BigNat denominator, bool negative)
    : negative_(negative), num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    reduce();
}

void ExactRational::reduce() {
    if (num_.is_zero()) {
        negative_ = false;
        den_ = BigNat(1);
        return;
    }
    BigNat g = BigNat::gcd(num_, den_);
    if (g != BigNat(1)) {
        num_ = BigNat::div_mod(num_, g).first;
        den_ = BigNat::div_mod(den_, g).first;
    }
}

ExactRational ExactRational::operator-() const {
    ExactRational result = *this;
    if (!result.num_.is_zero()) {
        result.negative_ = !result.negative_;
    }
    return result;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    BigNat left = num_ * rhs.den_;
    BigNat right = rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    if (negative_ == rhs.negative_) {
        num_ = left + right;
    } else if (left >= right) {
        num_ = left - right;
    } else {
        num_ = right - left;
        negative_ = rhs.negative_;
    }
    reduce();
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    return *this += -rhs;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    negative_ = negative_ != rhs.negative_;
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.num_.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    negative_ = negative_ != rhs.negative_;
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering ExactRational::operator<=>(const ExactRational& rhs) const {
    if (negative_ != rhs.negative_) {
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const std::strong_ordering mag = (num_ * rhs.den_) <=> (rhs.num_ * den_);
    if (!negative_) {
        return mag;
    }
    if (mag == std::strong_ordering::less) {
        return std::strong_ordering::greater;
    }
    if (mag == std::strong_ordering::greater) {
        return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

bool ExactRational::operator==(const ExactRational& rhs) const {
    return negative_ == rhs.negative_ && num_ == rhs.num_ && den_ == rhs.den_;
}

std::string ExactRational::to_string() const {
    std::string text = negative_ ? "-" : "";
    text += num_.to_string();
    if (!is_integer()) {
        text += "/";
        text += den_.to_string();
    }
    return text;
}

} // namespace trikraft
