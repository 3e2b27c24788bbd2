#include "palinpair/construct.hpp"

#include <algorithm>

#include "palinpair/predicates.hpp"

namespace palinpair {

namespace {

constexpr std::uint32_t max_split_n = 16;

Numeral from_msb_layout(const std::vector<digit_t>& msb_digits, std::uint32_t base) {
    std::vector<digit_t> digits(msb_digits.rbegin(), msb_digits.rend());
    return Numeral::from_digits(std::move(digits), base);
}

void append_zeros(std::vector<digit_t>& layout, std::uint64_t count) {
    layout.insert(layout.end(), count, 0);
}

} // namespace

Numeral repunit(std::uint32_t n, std::uint32_t base) {
    if (n < 1) fail(errc::invalid_argument, "repunit length must be >= 1");
    return Numeral::from_digits(std::vector<digit_t>(n, 1), base);
}

std::vector<Numeral> repunit_factorization(std::uint32_t n, std::uint32_t base) {
    if (n < 1) fail(errc::invalid_argument, "factor count must be >= 1");
    if (n > max_split_n) fail(errc::invalid_argument, "factor count too large");
    std::vector<Numeral> factors;
    factors.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        // base^(2^i) + 1: digit 1 at positions 0 and 2^i.
        std::vector<digit_t> digits(1u << i, 0);
        digits[0] = 1;
        digits.push_back(1);
        factors.push_back(Numeral::from_digits(std::move(digits), base));
    }
    return factors;
}

std::vector<RepunitSplit> enumerate_repunit_splits(std::uint32_t n, std::uint32_t base) {
    if (n < 2) fail(errc::invalid_argument, "splits need at least 2 factors");
    if (n > max_split_n) fail(errc::invalid_argument, "factor count too large");
    const std::vector<Numeral> factors = repunit_factorization(n, base);
    std::vector<RepunitSplit> splits;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        Numeral a = Numeral::from_value(1, base);
        Numeral b = Numeral::from_value(1, base);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i))
                a = multiply(a, factors[i]);
            else
                b = multiply(b, factors[i]);
        }
        if (compare_value(a, b) > 0) continue; // complementary mask covers it
        if (!is_polynomial_pair(a, b))
            fail(errc::verification_failed,
                 "repunit split is not a polynomial pair (mask " + std::to_string(mask) + ")");
        splits.push_back(RepunitSplit{n, mask, std::move(a), std::move(b)});
    }
    std::sort(splits.begin(), splits.end(), [](const RepunitSplit& x, const RepunitSplit& y) {
        auto cmp = compare_value(x.a, y.a);
        if (cmp != 0) return cmp < 0;
        return x.subset_mask < y.subset_mask;
    });
    return splits;
}

std::uint64_t split_count_formula(std::uint32_t n) {
    if (n < 2 || n > 63) fail(errc::invalid_argument, "n out of range for split count");
    const std::uint32_t k = n / 2;
    std::uint64_t total = 0;
    std::uint64_t binom = 1; // C(n, 0)
    for (std::uint32_t j = 1; j <= k; ++j) {
        binom = binom * (n - j + 1) / j;
        if (n % 2 == 0 && j == k)
            total += binom / 2;
        else
            total += binom;
    }
    return total;
}

FamilyMember family_generate(const FamilyParams& params) {
    std::uint32_t base = 0;
    std::vector<digit_t> layout; // most-significant first
    switch (params.family) {
        case Family::base2_eq3: {
            if (params.l < 2) fail(errc::invalid_argument, "base2-eq3 requires l >= 2");
            base = 2;
            const std::uint64_t run_high =
                params.variant == Eq3Variant::short_run ? 2 * params.l : 2 * params.l + 2;
            const std::uint64_t run_low =
                params.variant == Eq3Variant::short_run ? 2 * params.l - 1 : 2 * params.l + 1;
            layout = {1, 1};
            append_zeros(layout, run_high);
            layout.insert(layout.end(), {1, 0, 1, 0, 1});
            append_zeros(layout, run_low);
            layout.insert(layout.end(), {1, 1});
            break;
        }
        case Family::r_squared_minus_1: {
            if (params.r < 2) fail(errc::invalid_argument, "r-squared-minus-1 requires r >= 2");
            if (params.r > 256) fail(errc::invalid_argument, "r too large for base <= 65536");
            base = static_cast<std::uint32_t>(params.r * params.r - 1);
            const digit_t d = static_cast<digit_t>(params.r);
            layout = {d};
            append_zeros(layout, params.j + 1);
            layout.push_back(d);
            break;
        }
        case Family::four_k_minus_1: {
            if (params.k < 1) fail(errc::invalid_argument, "four-k-minus-1 requires k >= 1");
            if (params.k > 16384) fail(errc::invalid_argument, "k too large for base <= 65536");
            base = static_cast<std::uint32_t>(4 * params.k - 1);
            const digit_t d = static_cast<digit_t>(2 * params.k);
            layout = {d};
            append_zeros(layout, params.j + 1);
            layout.push_back(d);
            break;
        }
        case Family::four_k_plus_1: {
            if (params.k < 1) fail(errc::invalid_argument, "four-k-plus-1 requires k >= 1");
            if (params.k > 16383) fail(errc::invalid_argument, "k too large for base <= 65536");
            base = static_cast<std::uint32_t>(4 * params.k + 1);
            const digit_t lo = static_cast<digit_t>(2 * params.k);
            const digit_t hi = static_cast<digit_t>(2 * params.k + 1);
            layout = {lo, lo};
            append_zeros(layout, params.j + 2);
            layout.insert(layout.end(), {hi, hi});
            break;
        }
    }
    FamilyMember member{base, from_msb_layout(layout, base)};
    if (!reversal_product_is_palindrome(member.a))
        fail(errc::verification_failed,
             "family member " + member.a.render() + " does not yield a palindromic product");
    if (is_polynomial_pair(member.a, member.a.reversed()))
        fail(errc::verification_failed,
             "family member " + member.a.render() + " is unexpectedly a polynomial pair");
    return member;
}

const char* family_name(Family family) {
    switch (family) {
        case Family::base2_eq3: return "base2-eq3";
        case Family::r_squared_minus_1: return "r-squared-minus-1";
        case Family::four_k_minus_1: return "four-k-minus-1";
        case Family::four_k_plus_1: return "four-k-plus-1";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "base2-eq3") return Family::base2_eq3;
    if (name == "r-squared-minus-1") return Family::r_squared_minus_1;
    if (name == "four-k-minus-1") return Family::four_k_minus_1;
    if (name == "four-k-plus-1") return Family::four_k_plus_1;
    fail(errc::unknown_kind, "unknown family '" + name + "'");
}

bool base_condition_check(std::uint32_t base) {
    if (base < 2) fail(errc::invalid_argument, "base must be >= 2");
    if (base % 2 != 0) return false;
    std::uint32_t m = base + 1;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        std::uint32_t count = 0;
        while (m % p == 0) {
            m /= p;
            ++count;
        }
        if (count > 1) return false;
    }
    return true;
}

} // namespace palinpair
