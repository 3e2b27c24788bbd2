#include "palinpair/predicates.hpp"

#include <algorithm>

namespace palinpair {

PolynomialCheck polynomial_check(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    const std::uint64_t limit = a.base() - 1;
    const auto& da = a.digits();
    const auto& db = b.digits();
    const std::size_t n = da.size() + db.size() - 1;
    // Coefficients computed one position at a time so a carry at a low
    // position exits without forming the whole profile.
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t c = 0;
        const std::size_t lo = j >= db.size() ? j - db.size() + 1 : 0;
        const std::size_t hi = std::min(j, da.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) c += static_cast<std::uint64_t>(da[i]) * db[j - i];
        if (c > limit) return {false, j, c};
    }
    return {true, std::nullopt, std::nullopt};
}

bool is_polynomial_pair(const Numeral& a, const Numeral& b) {
    return polynomial_check(a, b).polynomial;
}

bool is_palindromic_pair(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    return multiply(a.reversed(), b.reversed()) == multiply(a, b).reversed();
}

bool is_additive_pair(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    const std::uint32_t limit = a.base() - 1;
    const auto& da = a.digits();
    const auto& db = b.digits();
    for (std::size_t i = 0; i < std::min(da.size(), db.size()); ++i)
        if (da[i] + db[i] > limit) return false;
    return true;
}

bool check_infinity_bound(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    return static_cast<std::uint64_t>(a.max_digit()) * b.max_digit() <= a.base() - 1;
}

bool sufficient_polynomial(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    return static_cast<std::uint64_t>(a.max_digit()) * b.digit_sum() <= a.base() - 1;
}

bool sufficient_additive(const Numeral& a, const Numeral& b) {
    if (a.base() != b.base()) fail(errc::base_mismatch, "pair members in different bases");
    return static_cast<std::uint64_t>(a.max_digit()) + b.max_digit() <= a.base() - 1;
}

bool reversal_product_is_palindrome(const Numeral& a) {
    return multiply(a, a.reversed()).is_palindrome();
}

bool square_reversal_identity(const Numeral& a) {
    if (!is_polynomial_pair(a, a))
        fail(errc::precondition, "(a,a) is not a polynomial pair");
    const Numeral r = a.reversed();
    return multiply(a, a).reversed() == multiply(r, r) && is_polynomial_pair(r, r);
}

Prop56Verdict prop56_check(const Numeral& a) {
    const Numeral product = multiply(a, a.reversed());
    Prop56Verdict v;
    v.applicable = product.digit_count() == 2 * a.digit_count() - 1 && product.is_palindrome();
    if (v.applicable) v.holds = is_polynomial_pair(a, a.reversed());
    return v;
}

PairVerdict check_pair(const Numeral& a, const Numeral& b) {
    PolynomialCheck poly = polynomial_check(a, b);
    PairVerdict v;
    v.polynomial = poly.polynomial;
    v.first_carry_position = poly.first_carry_position;
    v.witness_coefficient = poly.witness_coefficient;
    v.palindromic = is_palindromic_pair(a, b);
    v.additive = is_additive_pair(a, b);
    return v;
}

} // namespace palinpair
