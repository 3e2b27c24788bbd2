#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palinpair/numeral.hpp"

namespace palinpair {

/// One way of writing R(2^n) as a product of two complementary factor
/// subsets; a holds the product over subset_mask, b over its complement,
/// with value(a) <= value(b).
struct RepunitSplit {
    std::uint32_t n = 0;
    std::uint64_t subset_mask = 0;
    Numeral a;
    Numeral b;
};

enum class Family {
    base2_eq3,          // base 2: 11 0^p 10101 0^q 11 with {p,q} from l
    r_squared_minus_1,  // base r^2-1: r 0^{j+1} r
    four_k_minus_1,     // base 4k-1: (2k) 0^{j+1} (2k)
    four_k_plus_1,      // base 4k+1: (2k)(2k) 0^{j+2} (2k+1)(2k+1)
};

enum class Eq3Variant {
    short_run, // zero runs (2l, 2l-1)
    long_run,  // zero runs (2l+2, 2l+1); the literal (2l, 2l+1) fails at l=2
};

struct FamilyParams {
    Family family = Family::base2_eq3;
    std::uint64_t l = 0; // base2_eq3, l >= 2
    std::uint64_t r = 0; // r_squared_minus_1, r >= 2
    std::uint64_t k = 0; // four_k_minus_1 / four_k_plus_1, k >= 1
    std::uint64_t j = 0; // zero-run padding, j >= 0
    Eq3Variant variant = Eq3Variant::short_run;
};

struct FamilyMember {
    std::uint32_t base = 0;
    Numeral a;
};

Numeral repunit(std::uint32_t n, std::uint32_t base);

/// The n factors base^(2^i)+1 for i = 0..n-1; their product is repunit(2^n).
std::vector<Numeral> repunit_factorization(std::uint32_t n, std::uint32_t base);

/// All canonical proper splits of the factor set, each verified to be a
/// polynomial pair; ordered by ascending value(a), mask as tiebreak.
std::vector<RepunitSplit> enumerate_repunit_splits(std::uint32_t n, std::uint32_t base);

/// The theorem's lower bound M; equals 2^(n-1)-1.
std::uint64_t split_count_formula(std::uint32_t n);

/// Builds the family member by digit layout and re-verifies that a*reverse(a)
/// is a palindrome while (a,reverse(a)) is not polynomial; a verification
/// failure throws rather than returning an unchecked value.
FamilyMember family_generate(const FamilyParams& params);

const char* family_name(Family family);
Family family_from_name(const std::string& name);

/// base even and base+1 square-free: necessary (not sufficient) for the
/// base-b reversal-multiplication conjecture to hold.
bool base_condition_check(std::uint32_t base);

} // namespace palinpair
