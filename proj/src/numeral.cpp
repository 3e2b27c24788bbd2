#include "palinpair/numeral.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace palinpair {

namespace {

constexpr std::string_view symbols = "0123456789abcdefghijklmnopqrstuvwxyz";

void check_base(std::uint32_t base) {
    if (base < Numeral::min_base || base > Numeral::max_base)
        fail(errc::invalid_argument,
             "base " + std::to_string(base) + " out of range [2, 65536]");
}

std::vector<digit_t> strip_high_zeros(std::vector<digit_t> digits) {
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
    if (digits.empty()) digits.push_back(0);
    return digits;
}

int symbol_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

} // namespace

Numeral Numeral::zero(std::uint32_t base) {
    check_base(base);
    return Numeral(base, {0});
}

Numeral Numeral::from_value(std::uint64_t value, std::uint32_t base) {
    check_base(base);
    std::vector<digit_t> digits;
    do {
        digits.push_back(static_cast<digit_t>(value % base));
        value /= base;
    } while (value != 0);
    return Numeral(base, std::move(digits));
}

Numeral Numeral::from_digits(std::vector<digit_t> digits, std::uint32_t base) {
    check_base(base);
    if (digits.empty()) fail(errc::empty_input, "empty digit list");
    for (digit_t d : digits)
        if (d >= base)
            fail(errc::invalid_digit,
                 "digit " + std::to_string(d) + " >= base " + std::to_string(base));
    return Numeral(base, strip_high_zeros(std::move(digits)));
}

Numeral Numeral::parse(std::string_view text, std::uint32_t base) {
    check_base(base);
    if (text.empty()) fail(errc::empty_input, "empty numeral text");
    std::vector<digit_t> digits; // collected most-significant first
    if (base <= 36) {
        for (char c : text) {
            int v = symbol_value(c);
            if (v < 0 || static_cast<std::uint32_t>(v) >= base)
                fail(errc::invalid_digit,
                     std::string("invalid digit '") + c + "' for base " + std::to_string(base));
            digits.push_back(static_cast<digit_t>(v));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view part = text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
            std::uint32_t v = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
            if (ec != std::errc() || ptr != part.data() + part.size())
                fail(errc::invalid_digit, "invalid digit component '" + std::string(part) + "'");
            if (v >= base)
                fail(errc::invalid_digit,
                     "digit " + std::to_string(v) + " >= base " + std::to_string(base));
            digits.push_back(v);
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    }
    std::reverse(digits.begin(), digits.end());
    return Numeral(base, strip_high_zeros(std::move(digits)));
}

std::string Numeral::render() const {
    std::string out;
    if (base_ <= 36) {
        out.reserve(digits_.size());
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) out.push_back(symbols[*it]);
    } else {
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
            if (!out.empty()) out.push_back('.');
            out += std::to_string(*it);
        }
    }
    return out;
}

bool Numeral::is_palindrome() const noexcept {
    for (std::size_t i = 0, j = digits_.size() - 1; i < j; ++i, --j)
        if (digits_[i] != digits_[j]) return false;
    return true;
}

Numeral Numeral::reversed() const {
    std::vector<digit_t> digits(digits_.rbegin(), digits_.rend());
    return Numeral(base_, strip_high_zeros(std::move(digits)));
}

digit_t Numeral::max_digit() const noexcept {
    return *std::max_element(digits_.begin(), digits_.end());
}

std::uint64_t Numeral::digit_sum() const noexcept {
    std::uint64_t s = 0;
    for (digit_t d : digits_) s += d;
    return s;
}

std::uint64_t Numeral::digit_square_sum() const noexcept {
    std::uint64_t s = 0;
    for (digit_t d : digits_) s += static_cast<std::uint64_t>(d) * d;
    return s;
}

std::strong_ordering compare_value(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "comparing numerals in different bases");
    if (a.digit_count() != b.digit_count())
        return a.digit_count() <=> b.digit_count();
    const auto& da = a.digits();
    const auto& db = b.digits();
    for (std::size_t i = da.size(); i-- > 0;)
        if (da[i] != db[i]) return da[i] <=> db[i];
    return std::strong_ordering::equal;
}

std::uint64_t CoefficientProfile::max_coefficient() const noexcept {
    return *std::max_element(coeffs.begin(), coeffs.end());
}

CoefficientProfile convolve(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "convolving numerals in different bases");
    const auto& da = a.digits();
    const auto& db = b.digits();
    std::vector<std::uint64_t> coeffs(da.size() + db.size() - 1, 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] == 0) continue;
        const std::uint64_t x = da[i];
        for (std::size_t k = 0; k < db.size(); ++k) coeffs[i + k] += x * db[k];
    }
    return CoefficientProfile{a.base(), std::move(coeffs)};
}

Numeral reduce(const CoefficientProfile& profile) {
    const std::uint64_t base = profile.base;
    std::vector<digit_t> digits;
    digits.reserve(profile.coeffs.size() + 2);
    std::uint64_t carry = 0;
    for (std::uint64_t c : profile.coeffs) {
        const std::uint64_t s = c + carry;
        digits.push_back(static_cast<digit_t>(s % base));
        carry = s / base;
    }
    while (carry != 0) {
        digits.push_back(static_cast<digit_t>(carry % base));
        carry /= base;
    }
    return Numeral::from_digits(std::move(digits), profile.base);
}

Numeral multiply(const Numeral& a, const Numeral& b) { return reduce(convolve(a, b)); }

Numeral add(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "adding numerals in different bases");
    const std::uint64_t base = a.base();
    const auto& da = a.digits();
    const auto& db = b.digits();
    std::vector<digit_t> digits;
    digits.reserve(std::max(da.size(), db.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(da.size(), db.size()); ++i) {
        std::uint64_t s = carry;
        if (i < da.size()) s += da[i];
        if (i < db.size()) s += db[i];
        digits.push_back(static_cast<digit_t>(s % base));
        carry = s / base;
    }
    if (carry != 0) digits.push_back(static_cast<digit_t>(carry));
    return Numeral::from_digits(std::move(digits), a.base());
}

CarryTrace carry_trace(const Numeral& a, const Numeral& b) {
    CoefficientProfile profile = convolve(a, b);
    const std::uint64_t base = profile.base;
    CarryTrace trace;
    trace.gamma.push_back(0);
    for (std::size_t i = 0; i < profile.coeffs.size() || trace.gamma.back() != 0; ++i) {
        const std::uint64_t c = i < profile.coeffs.size() ? profile.coeffs[i] : 0;
        const std::uint64_t sigma = trace.gamma.back() + c;
        trace.sigma.push_back(sigma);
        trace.reduced.push_back(static_cast<digit_t>(sigma % base));
        trace.gamma.push_back(sigma / base);
    }
    return trace;
}

} // namespace palinpair
