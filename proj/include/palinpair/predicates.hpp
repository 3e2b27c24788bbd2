#pragma once

#include <cstdint>
#include <optional>

#include "palinpair/numeral.hpp"

namespace palinpair {

/// Result of the carry-freeness test for a product. When the pair is not
/// polynomial, first_carry_position is the least j with c_j > base-1 and
/// witness_coefficient is that c_j.
struct PolynomialCheck {
    bool polynomial = false;
    std::optional<std::size_t> first_carry_position;
    std::optional<std::uint64_t> witness_coefficient;
};

struct PairVerdict {
    bool polynomial = false;
    bool palindromic = false;
    bool additive = false;
    std::optional<std::size_t> first_carry_position;
    std::optional<std::uint64_t> witness_coefficient;
};

struct Prop56Verdict {
    bool applicable = false; // product has 2n-1 digits and is a palindrome
    bool holds = true;       // when applicable: the pair checked out polynomial
};

PolynomialCheck polynomial_check(const Numeral& a, const Numeral& b);
bool is_polynomial_pair(const Numeral& a, const Numeral& b);
bool is_palindromic_pair(const Numeral& a, const Numeral& b);
bool is_additive_pair(const Numeral& a, const Numeral& b);

/// Necessary condition for a polynomial pair: max_digit(a)*max_digit(b) <= base-1.
bool check_infinity_bound(const Numeral& a, const Numeral& b);
/// Sufficient condition for a polynomial pair: max_digit(a)*digit_sum(b) <= base-1.
bool sufficient_polynomial(const Numeral& a, const Numeral& b);
/// Sufficient condition for an additive pair: max_digit(a)+max_digit(b) <= base-1.
bool sufficient_additive(const Numeral& a, const Numeral& b);

bool reversal_product_is_palindrome(const Numeral& a);

/// Requires (a,a) polynomial; returns reverse(a*a) == reverse(a)*reverse(a)
/// together with (reverse(a),reverse(a)) being polynomial.
bool square_reversal_identity(const Numeral& a);

/// If a*reverse(a) has 2n-1 digits (n = digits of a) and is a palindrome,
/// the pair must be polynomial; a violation would be a counterexample to a
/// proved proposition and is reported, not thrown.
Prop56Verdict prop56_check(const Numeral& a);

PairVerdict check_pair(const Numeral& a, const Numeral& b);

} // namespace palinpair
