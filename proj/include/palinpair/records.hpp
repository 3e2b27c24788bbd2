#pragma once

#include <cstdint>
#include <string>

#include "palinpair/numeral.hpp"

namespace palinpair {

enum class RecordFormat { csv, jsonl };

/// One finding: a pair, its product, their reversals and the predicate flags.
/// The row type shared by scans and family output (family tag optional).
struct PairRecord {
    std::uint32_t base = 0;
    Numeral a, b, c;
    Numeral a_rev, b_rev, c_rev;
    bool polynomial = false;
    bool palindromic = false;
    bool c_is_palindrome = false;
    std::string family; // empty outside family output

    static PairRecord from_pair(const Numeral& a, const Numeral& b);
};

std::string csv_header(bool with_family);
std::string to_csv_line(const PairRecord& record, bool with_family);
std::string to_jsonl_line(const PairRecord& record, bool with_family);
PairRecord record_from_jsonl(const std::string& line);

/// Full stream (header + rows for CSV, rows for JSONL).
std::string render_records(const std::vector<PairRecord>& records, RecordFormat format,
                           bool with_family = false);

} // namespace palinpair
