// Acceptance gate: one PASS/FAIL line per criterion.
//   argv[1] = path to the CLI binary, argv[2] = path to the data directory.
// Criteria 1-6 drive the CLI the way a user would; 7-10 exercise the core
// library directly.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "palinpair/construct.hpp"
#include "palinpair/numeral.hpp"
#include "palinpair/oeis.hpp"
#include "palinpair/predicates.hpp"
#include "palinpair/scan.hpp"

#ifdef PP_HAVE_GMP
#include <gmpxx.h>
#endif

using namespace palinpair;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++g_failures;
}

struct CliOutput {
    int exit_code = -1;
    std::string stdout_text;
};

CliOutput run_cli(const std::string& args) {
    CliOutput out;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
        out.stdout_text.append(buffer, n);
    int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// CSV rows are base,a,b,c,...; collect the (a,b) pairs.
std::set<Pair> csv_pairs(const std::string& csv) {
    std::set<Pair> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ','); // base
        std::uint64_t a, b;
        std::getline(row, field, ',');
        a = std::stoull(field);
        std::getline(row, field, ',');
        b = std::stoull(field);
        out.insert({a, b});
    }
    return out;
}

std::vector<std::string> csv_column(const std::string& csv, std::size_t index) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        for (std::size_t i = 0; i <= index; ++i) std::getline(row, field, ',');
        out.push_back(field);
    }
    return out;
}

std::uint64_t value_of(const Numeral& n) {
    std::uint64_t v = 0;
    for (std::size_t i = n.digit_count(); i-- > 0;) v = v * n.base() + n.digits()[i];
    return v;
}

Numeral random_numeral(std::mt19937_64& rng, std::uint32_t base, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<digit_t> digit_dist(0, base - 1);
    std::vector<digit_t> digits(len_dist(rng));
    for (auto& d : digits) d = digit_dist(rng);
    if (digits.back() == 0) digits.back() = 1;
    return Numeral::from_digits(std::move(digits), base);
}

// ---- criterion 1 --------------------------------------------------------

const std::set<Pair> kTable1 = {
    {7, 88},     {8, 77},     {55, 99},    {7, 858},     {77, 88},    {55, 999},
    {99, 555},   {77, 858},   {555, 979},  {55, 9999},   {99, 5555},  {707, 858},
    {7, 88088},  {8, 77077},  {77, 8008},  {88, 7007},   {737, 888},  {777, 858},
    {969, 5335}, {575, 9119}, {979, 5555}, {55, 99999},  {99, 55555}, {7, 858088},
    {707, 8558}, {7, 880088}, {8, 770077}, {77, 80008},  {88, 70007}, {77, 80088},
    {88, 70077}, {898, 7227},
};

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    auto out = run_cli("table1 --base 10 --bound 10000000 --workers 1");
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto pairs = csv_pairs(out.stdout_text);
    bool set_equal = pairs == kTable1;
    auto products = csv_column(out.stdout_text, 3);
    bool sorted = true;
    for (std::size_t i = 1; i < products.size(); ++i)
        if (std::stoull(products[i - 1]) > std::stoull(products[i])) sorted = false;
    bool anchors = out.stdout_text.find("10,7,88,616,") != std::string::npos &&
                   out.stdout_text.find("10,77,80088,6166776,") != std::string::npos &&
                   out.stdout_text.find("10,898,7227,6489846,") != std::string::npos;
    // the 6166776 row's product must not be a palindrome (last CSV field "false")
    bool c_flag = out.stdout_text.find("10,77,80088,6166776,77,88008,6776616,false,true,false") !=
                  std::string::npos;
    bool pass = out.exit_code == 0 && set_equal && sorted && anchors && c_flag && seconds < 300.0;
    std::ostringstream detail;
    detail << "table1 to 1e7 gives the 32 listed pairs, sorted, in " << static_cast<int>(seconds)
           << "s (" << pairs.size() << " pairs)";
    report(1, pass, detail.str());
}

// ---- criterion 2 --------------------------------------------------------

const std::set<Pair> kTable2 = {
    {12, 12},  {12, 13},  {12, 14},  {13, 13},  {12, 21},  {13, 21},  {12, 23},
    {12, 24},  {14, 21},  {13, 23},  {12, 32},  {12, 102}, {12, 103}, {12, 104},
    {13, 102}, {13, 103}, {12, 112}, {12, 113}, {12, 114}, {14, 102}, {13, 112},
    {12, 122}, {13, 113}, {12, 123}, {12, 124}, {14, 112}, {12, 132}, {13, 122},
    {12, 133}, {13, 123}, {21, 102}, {21, 103}, {21, 104}, {23, 102}, {21, 112},
    {23, 103}, {21, 113}, {21, 114}, {12, 203}, {12, 204}, {24, 102}, {12, 213},
    {21, 122}, {12, 214}, {23, 112}, {21, 123}, {23, 113}, {13, 201}, {13, 203},
    {12, 223}, {12, 224}, {24, 112}, {13, 211}, {13, 213}, {12, 231}, {21, 132},
    {21, 133}, {12, 233}, {14, 201}, {13, 221}, {12, 241}, {13, 223}, {14, 211},
    {31, 103}, {32, 102}, {32, 103}, {34, 102}, {32, 112}, {12, 302}, {12, 304},
    {12, 312}, {12, 314}, {12, 322}, {12, 324}, {13, 302}, {12, 332}, {21, 204},
    {42, 102}, {43, 102}, {21, 214}, {23, 203}, {12, 403}, {23, 213}, {12, 413},
    {32, 203},
};

void criterion2() {
    auto out = run_cli("table2 --base 10 --bound 10000");
    auto pairs = csv_pairs(out.stdout_text);
    auto products = csv_column(out.stdout_text, 3);
    bool anchors = !products.empty() && products.front() == "144" && products.back() == "6496";
    bool dup = out.stdout_text.find("10,12,204,2448,") != std::string::npos &&
               out.stdout_text.find("10,24,102,2448,") != std::string::npos;
    bool pass = out.exit_code == 0 && pairs == kTable2 && anchors && dup;
    std::ostringstream detail;
    detail << "table2 to 1e4 gives the 85 listed pairs with matching anchors (" << pairs.size()
           << " pairs)";
    report(2, pass, detail.str());
}

// ---- criteria 3 and 4 ---------------------------------------------------

void criterion3() {
    auto out = run_cli("conjecture-main --base 10 --bound 1000000");
    auto pairs = csv_pairs(out.stdout_text);
    report(3, out.exit_code == 0 && pairs.empty(),
           "conjecture-main to 1e6 emits zero records (" + std::to_string(pairs.size()) + ")");
}

void criterion4() {
    auto out = run_cli("reversal-mult --base 10 --bound 1000000");
    auto members = csv_column(out.stdout_text, 1);
    bool clean_exit = out.exit_code == 0; // exit 2 would flag a counterexample

    std::ifstream bfile(g_data + "/b062936.txt");
    bool diff_clean = bfile.good();
    std::uint64_t compared = 0;
    if (diff_clean) {
        auto table = parse_bfile(bfile, "a062936");
        std::vector<std::string> expected;
        for (const auto& [idx, value] : table.entries)
            if (value_of(value) <= 1000000) expected.push_back(value.render());
        diff_clean = members == expected;
        compared = expected.size();
    }
    std::ostringstream detail;
    detail << "reversal-mult to 1e6: zero counterexamples, " << members.size()
           << " members diff clean against the " << compared << "-entry b-file prefix";
    report(4, clean_exit && diff_clean, detail.str());
}

// ---- criteria 5 and 6 ---------------------------------------------------

void criterion5() {
    auto out = run_cli("reversal-mult --base 2 --bound 65536");
    auto members = csv_column(out.stdout_text, 1);
    std::set<std::string> carriers;
    auto flags = csv_column(out.stdout_text, 7); // polynomial column
    for (std::size_t i = 0; i < members.size(); ++i)
        if (flags[i] == "false") carriers.insert(members[i]);
    // 11, the l=2 member of the binary family, and that member's reversal
    std::set<std::string> expect = {"11", "1100001010100011", "1100010101000011"};
    bool pass = out.exit_code == 2 && carriers == expect;
    report(5, pass,
           "base-2 counterexamples to 2^16 are exactly 11 and the l=2 family member "
           "with its reversal (" +
               std::to_string(carriers.size()) + " found)");
}

void criterion6() {
    auto out = run_cli("check --base 4 --a 2232213 --b 3122322");
    bool pass = out.exit_code == 0 &&
                out.stdout_text.find("polynomial=false") != std::string::npos &&
                out.stdout_text.find("palindromic=true") != std::string::npos &&
                out.stdout_text.find("product=21111033011112") != std::string::npos;
    report(6, pass, "base-4 pair (2232213, 3122322) is palindromic, not polynomial, "
                    "with product 21111033011112");
}

// ---- criterion 7 --------------------------------------------------------

void criterion7() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    const std::array<std::uint64_t, 4> expected_counts = {1, 3, 7, 15};
    for (std::uint32_t n = 2; n <= 5; ++n) {
        auto splits = enumerate_repunit_splits(n, 10);
        pass = pass && splits.size() == expected_counts[n - 2] &&
               splits.size() == split_count_formula(n);
        const Numeral target = repunit(1u << n, 10);
        for (const auto& s : splits)
            pass = pass && is_polynomial_pair(s.a, s.b) && multiply(s.a, s.b) == target;
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && seconds < 1.0;
    report(7, pass, "repunit splits for n=2..5 count {1,3,7,15}, all polynomial, "
                    "folding back to R(2^n)");
}

// ---- criterion 8 --------------------------------------------------------

void criterion8() {
    bool pass = true;
    auto verify = [&](const FamilyParams& p) {
        try {
            auto m = family_generate(p);
            pass = pass && multiply(m.a, m.a.reversed()).is_palindrome() &&
                   !is_polynomial_pair(m.a, m.a.reversed());
            return m;
        } catch (const error&) {
            pass = false;
            return FamilyMember{};
        }
    };

    for (std::uint64_t l = 2; l <= 6; ++l)
        for (auto variant : {Eq3Variant::short_run, Eq3Variant::long_run})
            verify({.family = Family::base2_eq3, .l = l, .variant = variant});
    for (std::uint64_t r = 2; r <= 6; ++r)
        for (std::uint64_t j = 0; j <= 3; ++j)
            verify({.family = Family::r_squared_minus_1, .r = r, .j = j});
    for (std::uint64_t k = 1; k <= 5; ++k)
        for (std::uint64_t j = 0; j <= 3; ++j) {
            verify({.family = Family::four_k_minus_1, .k = k, .j = j});
            verify({.family = Family::four_k_plus_1, .k = k, .j = j});
        }

    // per base in {3,5,7,8,9,11}: a generated member listed verbatim, with its product
    struct Anchor {
        FamilyParams params;
        std::uint32_t base;
        const char* a;
        const char* product;
    } anchors[] = {
        {{.family = Family::four_k_minus_1, .k = 1, .j = 0}, 3, "202", "112211"},
        {{.family = Family::four_k_plus_1, .k = 1, .j = 0}, 5, "220033", "133133331331"},
        {{.family = Family::four_k_minus_1, .k = 2, .j = 0}, 7, "404", "224422"},
        {{.family = Family::r_squared_minus_1, .r = 3, .j = 0}, 8, "303", "112211"},
        {{.family = Family::four_k_plus_1, .k = 2, .j = 0}, 9, "440055", "266255552662"},
        {{.family = Family::four_k_minus_1, .k = 3, .j = 0}, 11, "606", "336633"},
    };
    for (const auto& anchor : anchors) {
        auto m = verify(anchor.params);
        pass = pass && m.base == anchor.base && m.a.render() == anchor.a &&
               multiply(m.a, m.a.reversed()).render() == anchor.product;
    }
    report(8, pass, "all family grid members verified; one member per base in "
                    "{3,5,7,8,9,11} matches the listed values verbatim");
}

// ---- criterion 9 --------------------------------------------------------

bool carry_free_by_trace(const Numeral& a, const Numeral& b) {
    for (auto g : carry_trace(a, b).gamma)
        if (g != 0) return false;
    return true;
}

bool property_checks(const Numeral& a, const Numeral& b, std::string& why) {
    const std::uint64_t cap = a.base() - 1;
    const bool poly = is_polynomial_pair(a, b);

    // three-way equivalence: predicate == carry-free trace == bounded coefficients
    if (poly != carry_free_by_trace(a, b)) { why = "equivalence(trace)"; return false; }
    if (poly != (convolve(a, b).max_coefficient() <= cap)) { why = "equivalence(coeff)"; return false; }
    // polynomial implies palindromic
    if (poly && !is_palindromic_pair(a, b)) { why = "poly->palin"; return false; }
    // infinity-norm bound, and the forced B_inf = 1 tail
    if (poly && std::uint64_t{a.max_digit()} * b.max_digit() > cap) { why = "inf-bound"; return false; }
    if (poly && 2 * std::uint64_t{a.max_digit()} > cap && b.max_digit() != 1) { why = "inf-tail"; return false; }
    // (AB)_inf <= A_inf * B_1, for every pair
    if (multiply(a, b).max_digit() > std::uint64_t{a.max_digit()} * b.digit_sum()) { why = "product-bound"; return false; }
    // A_inf * B_1 <= base-1 is sufficient
    if (std::uint64_t{a.max_digit()} * b.digit_sum() <= cap && !poly) { why = "sufficient"; return false; }

    // reversal-square properties need a unit digit that survives reversal
    if (a.units_digit() != 0) {
        const Numeral rev = a.reversed();
        const bool self_poly = is_polynomial_pair(a, rev);
        // norm identity: carry-free reversal product peaks at the digit square sum
        if (self_poly && multiply(a, rev).max_digit() != a.digit_square_sum()) { why = "norm-identity"; return false; }
        // digit-square-sum characterization, both directions
        if (self_poly != (a.digit_square_sum() <= cap)) { why = "square-sum-equiv"; return false; }
        if (self_poly && !multiply(a, rev).is_palindrome()) { why = "reversal-palindrome"; return false; }
        // full-length palindromic reversal products force a polynomial pair
        auto narrow = prop56_check(a);
        if (narrow.applicable && !narrow.holds) { why = "full-length"; return false; }
        // squares: (A,A) polynomial propagates to the reversal and commutes with it
        if (is_polynomial_pair(a, a) && !square_reversal_identity(a)) { why = "square-identity"; return false; }
    }

    // additive: equivalence, sufficiency, reversal-sum palindromes
    const bool additive = is_additive_pair(a, b);
    bool positionwise = true;
    for (std::size_t i = 0; i < std::max(a.digit_count(), b.digit_count()); ++i) {
        std::uint64_t da = i < a.digit_count() ? a.digits()[i] : 0;
        std::uint64_t db = i < b.digit_count() ? b.digits()[i] : 0;
        if (da + db > cap) positionwise = false;
    }
    if (additive != positionwise) { why = "additive-equiv"; return false; }
    if (std::uint64_t{a.max_digit()} + b.max_digit() <= cap && !additive) { why = "additive-sufficient"; return false; }
    if (a.units_digit() != 0 && is_additive_pair(a, a.reversed()) &&
        !add(a, a.reversed()).is_palindrome()) { why = "additive-palindrome"; return false; }
    return true;
}

void criterion9() {
    bool pass = true;
    std::string why, where;

    // exhaustive decimal sweep
    for (std::uint64_t x = 1; x <= 300 && pass; ++x)
        for (std::uint64_t y = x; y <= 300 && pass; ++y)
            if (!property_checks(Numeral::from_value(x, 10), Numeral::from_value(y, 10), why)) {
                pass = false;
                where = "decimal (" + std::to_string(x) + "," + std::to_string(y) + "): " + why;
            }

    // full-length reversal-product scan to 1e6, no violations
    for (std::uint64_t x = 1; x <= 1000000 && pass; ++x) {
        if (x % 10 == 0) continue;
        auto v = prop56_check(Numeral::from_value(x, 10));
        if (v.applicable && !v.holds) {
            pass = false;
            where = "full-length at " + std::to_string(x);
        }
    }

    // randomized cases per base
    std::mt19937_64 rng(20260826u);
    for (std::uint32_t base : {2u, 3u, 5u, 7u, 8u, 10u, 11u, 16u}) {
        for (int i = 0; i < 10000 && pass; ++i) {
            auto a = random_numeral(rng, base, 7);
            auto b = random_numeral(rng, base, 7);
            if (!property_checks(a, b, why)) {
                pass = false;
                where = "base " + std::to_string(base) + " random (" + a.render() + "," +
                        b.render() + "): " + why;
            }
        }
    }
    report(9, pass,
           pass ? "all stated properties hold exhaustively and on 1e4 random cases per base"
                : "property violation at " + where);
}

// ---- criterion 10 -------------------------------------------------------

#ifdef PP_HAVE_GMP
mpz_class to_mpz(const Numeral& n) {
    mpz_class v = 0;
    for (std::size_t i = n.digit_count(); i-- > 0;) v = v * n.base() + n.digits()[i];
    return v;
}
#endif

void criterion10() {
#ifdef PP_HAVE_GMP
    std::mt19937_64 rng(477101u);
    std::uint64_t mismatches = 0;
    for (std::uint32_t base : {2u, 3u, 5u, 7u, 8u, 10u, 11u, 16u}) {
        for (int i = 0; i < 100000; ++i) {
            auto a = random_numeral(rng, base, 24);
            auto b = random_numeral(rng, base, 24);
            if (to_mpz(multiply(a, b)) != to_mpz(a) * to_mpz(b)) ++mismatches;
            if (to_mpz(add(a, b)) != to_mpz(a) + to_mpz(b)) ++mismatches;
        }
    }
    report(10, mismatches == 0,
           "multiply/add agree with the arbitrary-precision oracle on 1e5 random pairs "
           "per base (" + std::to_string(mismatches) + " mismatches)");
#else
    report(10, false, "arbitrary-precision oracle unavailable (GMP not found)");
#endif
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <data-dir>\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    g_data = argv[2];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    if (g_failures == 0) {
        std::puts("all criteria passed");
        return 0;
    }
    std::printf("%d criterion/criteria failed\n", g_failures);
    return 1;
}
