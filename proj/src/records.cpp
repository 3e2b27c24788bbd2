#include "palinpair/records.hpp"

#include <json.hpp>

#include "palinpair/predicates.hpp"

namespace palinpair {

PairRecord PairRecord::from_pair(const Numeral& a, const Numeral& b) {
    PairRecord r;
    r.base = a.base();
    r.a = a;
    r.b = b;
    r.c = multiply(a, b);
    r.a_rev = a.reversed();
    r.b_rev = b.reversed();
    r.c_rev = r.c.reversed();
    r.polynomial = is_polynomial_pair(a, b);
    r.palindromic = multiply(r.a_rev, r.b_rev) == r.c_rev;
    r.c_is_palindrome = r.c.is_palindrome();
    return r;
}

std::string csv_header(bool with_family) {
    std::string h = "base,a,b,c,a_rev,b_rev,c_rev,polynomial,palindromic,c_is_palindrome";
    if (with_family) h += ",family";
    return h;
}

namespace {
const char* bool_str(bool v) { return v ? "true" : "false"; }
} // namespace

std::string to_csv_line(const PairRecord& r, bool with_family) {
    std::string line = std::to_string(r.base);
    for (const Numeral* n : {&r.a, &r.b, &r.c, &r.a_rev, &r.b_rev, &r.c_rev}) {
        line += ',';
        line += n->render();
    }
    line += ',';
    line += bool_str(r.polynomial);
    line += ',';
    line += bool_str(r.palindromic);
    line += ',';
    line += bool_str(r.c_is_palindrome);
    if (with_family) {
        line += ',';
        line += r.family;
    }
    return line;
}

std::string to_jsonl_line(const PairRecord& r, bool with_family) {
    nlohmann::ordered_json j{
        {"base", r.base},
        {"a", r.a.render()},
        {"b", r.b.render()},
        {"c", r.c.render()},
        {"a_rev", r.a_rev.render()},
        {"b_rev", r.b_rev.render()},
        {"c_rev", r.c_rev.render()},
        {"polynomial", r.polynomial},
        {"palindromic", r.palindromic},
        {"c_is_palindrome", r.c_is_palindrome},
    };
    if (with_family) j["family"] = r.family;
    return j.dump();
}

PairRecord record_from_jsonl(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad record line: ") + e.what());
    }
    PairRecord r;
    try {
        r.base = j.at("base").get<std::uint32_t>();
        r.a = Numeral::parse(j.at("a").get<std::string>(), r.base);
        r.b = Numeral::parse(j.at("b").get<std::string>(), r.base);
        r.c = Numeral::parse(j.at("c").get<std::string>(), r.base);
        r.a_rev = Numeral::parse(j.at("a_rev").get<std::string>(), r.base);
        r.b_rev = Numeral::parse(j.at("b_rev").get<std::string>(), r.base);
        r.c_rev = Numeral::parse(j.at("c_rev").get<std::string>(), r.base);
        r.polynomial = j.at("polynomial").get<bool>();
        r.palindromic = j.at("palindromic").get<bool>();
        r.c_is_palindrome = j.at("c_is_palindrome").get<bool>();
        if (j.contains("family")) r.family = j.at("family").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad record fields: ") + e.what());
    }
    return r;
}

std::string render_records(const std::vector<PairRecord>& records, RecordFormat format,
                           bool with_family) {
    std::string out;
    if (format == RecordFormat::csv) {
        out += csv_header(with_family);
        out += '\n';
    }
    for (const PairRecord& r : records) {
        out += format == RecordFormat::csv ? to_csv_line(r, with_family)
                                           : to_jsonl_line(r, with_family);
        out += '\n';
    }
    return out;
}

} // namespace palinpair
