#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "palinpair/numeral.hpp"

namespace palinpair {

/// Parsed b-file: strictly increasing indices, arbitrary-precision values
/// (held as base-10 numerals).
struct SequenceTable {
    std::string sequence_id;
    std::vector<std::pair<std::int64_t, Numeral>> entries;
};

enum class SequenceKind { a062936, a002778, a002779, a156317 };

const char* sequence_kind_name(SequenceKind kind);
SequenceKind sequence_kind_from_name(const std::string& name);

SequenceTable parse_bfile(std::istream& in, const std::string& sequence_id = "");
SequenceTable parse_bfile_text(const std::string& content, const std::string& sequence_id = "");

/// Regenerates the sequence prefix (values <= bound, ascending) from the
/// pair predicates, in base 10.
std::vector<Numeral> regenerate_sequence(SequenceKind kind, std::uint64_t bound);

struct DiffEntry {
    std::int64_t index = -1;     // b-file index when known
    std::string expected;        // b-file value ("" for extra local entries)
    std::string actual;          // regenerated value ("" for missing entries)
    std::string status;          // "missing" or "extra"
};

struct DiffReport {
    std::uint64_t compared = 0;
    std::vector<DiffEntry> diffs;

    bool clean() const noexcept { return diffs.empty(); }
    std::string to_jsonl() const;
};

/// Compares the b-file's entries at values <= bound with the regenerated
/// prefix; "missing" = in the b-file but not regenerated, "extra" = the
/// reverse.
DiffReport crosscheck(const SequenceTable& table, SequenceKind kind, std::uint64_t bound);

} // namespace palinpair
