#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "palinpair/error.hpp"

namespace palinpair {

using digit_t = std::uint32_t;

/// Canonical little-endian digit sequence in a fixed base.
/// digits()[i] is the coefficient of base^i; the top digit is nonzero
/// except for zero itself, which is the single digit 0.
class Numeral {
public:
    static constexpr std::uint32_t min_base = 2;
    static constexpr std::uint32_t max_base = 65536;

    /// Canonical zero in base 10.
    Numeral() : base_(10), digits_{0} {}

    static Numeral zero(std::uint32_t base);
    static Numeral from_value(std::uint64_t value, std::uint32_t base);
    /// Takes little-endian digits; strips leading (high) zeros, rejects digits >= base.
    static Numeral from_digits(std::vector<digit_t> digits, std::uint32_t base);
    /// Most-significant-first text. Bases <= 36 use 0-9a-z (case-insensitive);
    /// larger bases use dot-separated decimal digit values.
    static Numeral parse(std::string_view text, std::uint32_t base);

    std::string render() const;

    std::uint32_t base() const noexcept { return base_; }
    const std::vector<digit_t>& digits() const noexcept { return digits_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

    bool is_palindrome() const noexcept;
    Numeral reversed() const;

    digit_t max_digit() const noexcept;
    std::uint64_t digit_sum() const noexcept;
    std::uint64_t digit_square_sum() const noexcept;

    /// Value of the last (units) digit; nonzero means reversal is lossless.
    digit_t units_digit() const noexcept { return digits_[0]; }

    friend bool operator==(const Numeral&, const Numeral&) = default;

private:
    Numeral(std::uint32_t base, std::vector<digit_t> digits)
        : base_(base), digits_(std::move(digits)) {}

    std::uint32_t base_;
    std::vector<digit_t> digits_;
};

/// Value comparison; throws base_mismatch for numerals in different bases.
std::strong_ordering compare_value(const Numeral& a, const Numeral& b);

/// Unreduced coefficients; coeffs[j] may exceed base-1, that is its purpose.
struct CoefficientProfile {
    std::uint32_t base;
    std::vector<std::uint64_t> coeffs;

    std::uint64_t max_coefficient() const noexcept;
};

/// Per-position schoolbook state: sigma[i] = gamma[i] + c_i(unreduced),
/// reduced[i] = sigma[i] mod base, gamma[i+1] = (sigma[i] - reduced[i]) / base.
/// gamma has one more entry than sigma and starts (and ends) at 0.
struct CarryTrace {
    std::vector<std::uint64_t> sigma;
    std::vector<digit_t> reduced;
    std::vector<std::uint64_t> gamma;
};

CoefficientProfile convolve(const Numeral& a, const Numeral& b);
Numeral reduce(const CoefficientProfile& profile);
Numeral multiply(const Numeral& a, const Numeral& b);
Numeral add(const Numeral& a, const Numeral& b);
CarryTrace carry_trace(const Numeral& a, const Numeral& b);

} // namespace palinpair
