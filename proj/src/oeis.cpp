#include "palinpair/oeis.hpp"

#include <istream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "palinpair/predicates.hpp"

namespace palinpair {

const char* sequence_kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::a062936: return "a062936";
        case SequenceKind::a002778: return "a002778";
        case SequenceKind::a002779: return "a002779";
        case SequenceKind::a156317: return "a156317";
    }
    return "?";
}

SequenceKind sequence_kind_from_name(const std::string& name) {
    if (name == "a062936" || name == "A062936") return SequenceKind::a062936;
    if (name == "a002778" || name == "A002778") return SequenceKind::a002778;
    if (name == "a002779" || name == "A002779") return SequenceKind::a002779;
    if (name == "a156317" || name == "A156317") return SequenceKind::a156317;
    fail(errc::unknown_kind, "unknown sequence '" + name + "'");
}

SequenceTable parse_bfile(std::istream& in, const std::string& sequence_id) {
    SequenceTable table;
    table.sequence_id = sequence_id;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        std::istringstream fields(line);
        std::int64_t index = 0;
        std::string value;
        std::string rest;
        if (!(fields >> index >> value) || (fields >> rest))
            fail(errc::parse, "malformed b-file line " + std::to_string(line_no));
        Numeral v;
        try {
            if (!value.empty() && value.find_first_not_of("0123456789") != std::string::npos)
                fail(errc::invalid_digit, "non-decimal value");
            v = Numeral::parse(value, 10);
        } catch (const error&) {
            fail(errc::parse, "malformed b-file line " + std::to_string(line_no));
        }
        if (!table.entries.empty() && index <= table.entries.back().first)
            fail(errc::parse, "non-increasing index at line " + std::to_string(line_no));
        table.entries.emplace_back(index, std::move(v));
    }
    return table;
}

SequenceTable parse_bfile_text(const std::string& content, const std::string& sequence_id) {
    std::istringstream in(content);
    return parse_bfile(in, sequence_id);
}

std::vector<Numeral> regenerate_sequence(SequenceKind kind, std::uint64_t bound) {
    std::vector<Numeral> out;
    switch (kind) {
        case SequenceKind::a062936:
            // a not ending in 0 whose reversal multiplication gives a palindrome
            for (std::uint64_t v = 1; v <= bound; ++v) {
                if (v % 10 == 0) continue;
                Numeral a = Numeral::from_value(v, 10);
                if (multiply(a, a.reversed()).is_palindrome()) out.push_back(std::move(a));
            }
            break;
        case SequenceKind::a002778:
            for (std::uint64_t v = 0; v <= bound; ++v) {
                Numeral a = Numeral::from_value(v, 10);
                if (multiply(a, a).is_palindrome()) out.push_back(std::move(a));
            }
            break;
        case SequenceKind::a002779:
            for (std::uint64_t k = 0;; ++k) {
                Numeral sq = multiply(Numeral::from_value(k, 10), Numeral::from_value(k, 10));
                if (compare_value(sq, Numeral::from_value(bound, 10)) > 0) break;
                if (sq.is_palindrome()) out.push_back(std::move(sq));
            }
            break;
        case SequenceKind::a156317: {
            // squares <= bound whose reversal is an equal or larger square;
            // the reversal can exceed the bound, so collect squares one digit
            // length further out for the membership test.
            std::unordered_set<std::string> squares;
            const Numeral big = multiply(Numeral::from_value(bound, 10), Numeral::from_value(10, 10));
            for (std::uint64_t k = 0;; ++k) {
                Numeral sq = multiply(Numeral::from_value(k, 10), Numeral::from_value(k, 10));
                if (compare_value(sq, big) > 0) break;
                squares.insert(sq.render());
            }
            for (std::uint64_t k = 1;; ++k) {
                Numeral sq = multiply(Numeral::from_value(k, 10), Numeral::from_value(k, 10));
                if (compare_value(sq, Numeral::from_value(bound, 10)) > 0) break;
                Numeral rev = sq.reversed();
                if (compare_value(rev, sq) >= 0 && squares.count(rev.render()))
                    out.push_back(std::move(sq));
            }
            break;
        }
    }
    return out;
}

DiffReport crosscheck(const SequenceTable& table, SequenceKind kind, std::uint64_t bound) {
    const Numeral limit = Numeral::from_value(bound, 10);
    std::vector<std::pair<std::int64_t, Numeral>> expected;
    for (const auto& [index, value] : table.entries)
        if (compare_value(value, limit) <= 0) expected.emplace_back(index, value);

    const std::vector<Numeral> actual = regenerate_sequence(kind, bound);

    DiffReport report;
    std::size_t i = 0, j = 0;
    while (i < expected.size() || j < actual.size()) {
        if (i < expected.size() && j < actual.size()) {
            const auto cmp = compare_value(expected[i].second, actual[j]);
            if (cmp == 0) {
                ++report.compared;
                ++i;
                ++j;
                continue;
            }
            if (cmp < 0) {
                report.diffs.push_back(
                    {expected[i].first, expected[i].second.render(), "", "missing"});
                ++i;
            } else {
                report.diffs.push_back({-1, "", actual[j].render(), "extra"});
                ++j;
            }
        } else if (i < expected.size()) {
            report.diffs.push_back({expected[i].first, expected[i].second.render(), "", "missing"});
            ++i;
        } else {
            report.diffs.push_back({-1, "", actual[j].render(), "extra"});
            ++j;
        }
    }
    return report;
}

std::string DiffReport::to_jsonl() const {
    std::string out;
    for (const DiffEntry& d : diffs) {
        nlohmann::ordered_json j{
            {"index", d.index},
            {"expected", d.expected},
            {"actual", d.actual},
            {"status", d.status},
        };
        out += j.dump();
        out += '\n';
    }
    return out;
}

} // namespace palinpair
