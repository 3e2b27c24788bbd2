#include "palinpair.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "palinpair/construct.hpp"
#include "palinpair/oeis.hpp"
#include "palinpair/predicates.hpp"
#include "palinpair/scan.hpp"

using namespace palinpair;

struct pp_numeral {
    Numeral value;
};

namespace {

thread_local std::string g_last_error;

pp_status status_of(errc code) {
    switch (code) {
        case errc::invalid_argument: return PP_ERR_INVALID_ARGUMENT;
        case errc::invalid_digit: return PP_ERR_INVALID_DIGIT;
        case errc::empty_input: return PP_ERR_EMPTY_INPUT;
        case errc::base_mismatch: return PP_ERR_BASE_MISMATCH;
        case errc::precondition: return PP_ERR_PRECONDITION;
        case errc::verification_failed: return PP_ERR_VERIFICATION;
        case errc::io: return PP_ERR_IO;
        case errc::digest_mismatch: return PP_ERR_DIGEST_MISMATCH;
        case errc::parse: return PP_ERR_PARSE;
        case errc::unknown_kind: return PP_ERR_UNKNOWN_KIND;
    }
    return PP_ERR_INTERNAL;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
    try {
        fn();
        return PP_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PP_ERR_INTERNAL;
    }
}

pp_status require(bool ok, const char* message) {
    if (ok) return PP_OK;
    g_last_error = message;
    return PP_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

RecordFormat format_of(pp_format f) {
    return f == PP_FORMAT_JSONL ? RecordFormat::jsonl : RecordFormat::csv;
}

} // namespace

extern "C" {

const char* pp_status_name(pp_status status) {
    switch (status) {
        case PP_OK: return "ok";
        case PP_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case PP_ERR_INVALID_DIGIT: return "invalid-digit";
        case PP_ERR_EMPTY_INPUT: return "empty-input";
        case PP_ERR_BASE_MISMATCH: return "base-mismatch";
        case PP_ERR_PRECONDITION: return "precondition-violation";
        case PP_ERR_VERIFICATION: return "verification-failed";
        case PP_ERR_IO: return "io-error";
        case PP_ERR_DIGEST_MISMATCH: return "digest-mismatch";
        case PP_ERR_PARSE: return "parse-error";
        case PP_ERR_UNKNOWN_KIND: return "unknown-kind";
        case PP_ERR_INTERNAL: return "internal-error";
    }
    return "?";
}

const char* pp_last_error(void) { return g_last_error.c_str(); }

void pp_string_free(char* s) { delete[] s; }

pp_status pp_numeral_parse(const char* text, uint32_t base, pp_numeral** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new pp_numeral{Numeral::parse(text, base)}; });
}

pp_status pp_numeral_from_u64(uint64_t value, uint32_t base, pp_numeral** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new pp_numeral{Numeral::from_value(value, base)}; });
}

void pp_numeral_free(pp_numeral* n) { delete n; }

pp_status pp_numeral_render(const pp_numeral* n, char** out) {
    if (auto st = require(n && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(n->value.render()); });
}

pp_status pp_numeral_reverse(const pp_numeral* n, pp_numeral** out) {
    if (auto st = require(n && out, "null argument")) return st;
    return guarded([&] { *out = new pp_numeral{n->value.reversed()}; });
}

pp_status pp_numeral_multiply(const pp_numeral* a, const pp_numeral* b, pp_numeral** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new pp_numeral{multiply(a->value, b->value)}; });
}

pp_status pp_numeral_add(const pp_numeral* a, const pp_numeral* b, pp_numeral** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new pp_numeral{add(a->value, b->value)}; });
}

pp_status pp_numeral_is_palindrome(const pp_numeral* n, int* out) {
    if (auto st = require(n && out, "null argument")) return st;
    *out = n->value.is_palindrome() ? 1 : 0;
    return PP_OK;
}

pp_status pp_numeral_max_digit(const pp_numeral* n, uint32_t* out) {
    if (auto st = require(n && out, "null argument")) return st;
    *out = n->value.max_digit();
    return PP_OK;
}

pp_status pp_numeral_digit_sum(const pp_numeral* n, uint64_t* out) {
    if (auto st = require(n && out, "null argument")) return st;
    *out = n->value.digit_sum();
    return PP_OK;
}

pp_status pp_numeral_digit_square_sum(const pp_numeral* n, uint64_t* out) {
    if (auto st = require(n && out, "null argument")) return st;
    *out = n->value.digit_square_sum();
    return PP_OK;
}

pp_status pp_numeral_compare(const pp_numeral* a, const pp_numeral* b, int* out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        const auto cmp = compare_value(a->value, b->value);
        *out = cmp < 0 ? -1 : cmp > 0 ? 1 : 0;
    });
}

pp_status pp_pair_check(const pp_numeral* a, const pp_numeral* b, pp_pair_verdict* out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        const PairVerdict v = check_pair(a->value, b->value);
        out->polynomial = v.polynomial ? 1 : 0;
        out->palindromic = v.palindromic ? 1 : 0;
        out->additive = v.additive ? 1 : 0;
        out->first_carry_position = v.first_carry_position.value_or(0);
        out->witness_coefficient = v.witness_coefficient.value_or(0);
    });
}

pp_status pp_carry_trace_text(const pp_numeral* a, const pp_numeral* b, char** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        const CarryTrace trace = carry_trace(a->value, b->value);
        std::ostringstream text;
        text << "i,sigma,digit,carry_in\n";
        for (std::size_t i = 0; i < trace.sigma.size(); ++i)
            text << i << ',' << trace.sigma[i] << ',' << trace.reduced[i] << ','
                 << trace.gamma[i] << '\n';
        *out = dup_string(text.str());
    });
}

pp_status pp_scan_run(const pp_scan_config* config, char** records_out,
                      pp_scan_summary* summary_out) {
    if (auto st = require(config && records_out && summary_out, "null argument")) return st;
    return guarded([&] {
        ScanOptions opt;
        switch (config->kind) {
            case PP_SCAN_PALINDROMIC_NONPOLYNOMIAL:
                opt.kind = ScanKind::palindromic_nonpolynomial;
                break;
            case PP_SCAN_POLYNOMIAL_NONPALINDROME:
                opt.kind = ScanKind::polynomial_nonpalindrome;
                break;
            case PP_SCAN_CONJECTURE_MAIN: opt.kind = ScanKind::conjecture_main; break;
            case PP_SCAN_REVERSAL_MULT: opt.kind = ScanKind::reversal_mult; break;
            default: fail(errc::unknown_kind, "unknown scan kind");
        }
        opt.base = config->base;
        opt.bound = config->bound;
        opt.workers = config->workers;
        if (config->checkpoint_path) opt.checkpoint_path = config->checkpoint_path;
        opt.stop_after_cursor = config->stop_after_cursor;
        const ScanResult result = run_scan(opt);
        *records_out = result.completed
                           ? dup_string(render_records(result.records, format_of(config->format)))
                           : dup_string("");
        summary_out->record_count = result.records.size();
        summary_out->counterexample_count = result.counterexamples;
        summary_out->completed = result.completed ? 1 : 0;
        summary_out->cursor = result.cursor;
    });
}

pp_status pp_scan_resume(const char* checkpoint_path, int workers, pp_format format,
                         char** records_out, pp_scan_summary* summary_out) {
    if (auto st = require(checkpoint_path && records_out && summary_out, "null argument"))
        return st;
    return guarded([&] {
        const ScanResult result = resume_scan(checkpoint_path, workers);
        *records_out = result.completed
                           ? dup_string(render_records(result.records, format_of(format)))
                           : dup_string("");
        summary_out->record_count = result.records.size();
        summary_out->counterexample_count = result.counterexamples;
        summary_out->completed = result.completed ? 1 : 0;
        summary_out->cursor = result.cursor;
    });
}

pp_status pp_repunit_report(uint32_t n, uint32_t base, char** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        const std::vector<Numeral> factors = repunit_factorization(n, base);
        const Numeral unit = repunit(1u << n, base);
        const std::vector<RepunitSplit> splits = enumerate_repunit_splits(n, base);
        std::ostringstream text;
        text << "R(2^" << n << ") = " << unit.render() << '\n';
        text << "factors:";
        for (const Numeral& f : factors) text << ' ' << f.render();
        text << '\n';
        text << "M = " << split_count_formula(n) << '\n';
        text << "splits (" << splits.size() << "):\n";
        for (const RepunitSplit& s : splits)
            text << "  " << s.a.render() << " x " << s.b.render() << '\n';
        *out = dup_string(text.str());
    });
}

pp_status pp_family_generate(const char* family, uint64_t param, uint64_t j, const char* variant,
                             pp_format format, char** record_out) {
    if (auto st = require(family && record_out, "null argument")) return st;
    return guarded([&] {
        FamilyParams params;
        params.family = family_from_name(family);
        params.j = j;
        switch (params.family) {
            case Family::base2_eq3: params.l = param; break;
            case Family::r_squared_minus_1: params.r = param; break;
            default: params.k = param; break;
        }
        if (variant && *variant) {
            const std::string v = variant;
            if (v == "2l-1")
                params.variant = Eq3Variant::short_run;
            else if (v == "2l+1")
                params.variant = Eq3Variant::long_run;
            else
                fail(errc::unknown_kind, "unknown variant '" + v + "'");
        }
        const FamilyMember member = family_generate(params);
        PairRecord record = PairRecord::from_pair(member.a, member.a.reversed());
        std::ostringstream tag;
        tag << family_name(params.family) << "[param=" << param << ",j=" << j;
        if (params.family == Family::base2_eq3)
            tag << ",variant=" << (params.variant == Eq3Variant::short_run ? "2l-1" : "2l+1");
        tag << ']';
        record.family = tag.str();
        *record_out = dup_string(render_records({record}, format_of(format), true));
    });
}

pp_status pp_base_condition_check(uint32_t base, int* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = base_condition_check(base) ? 1 : 0; });
}

pp_status pp_oeis_crosscheck(const char* bfile_path, const char* kind, uint64_t bound,
                             char** diff_out, uint64_t* diff_count) {
    if (auto st = require(bfile_path && kind && diff_out && diff_count, "null argument")) return st;
    return guarded([&] {
        std::ifstream in(bfile_path);
        if (!in) fail(errc::io, std::string("cannot open b-file ") + bfile_path);
        const SequenceTable table = parse_bfile(in, kind);
        const DiffReport report = crosscheck(table, sequence_kind_from_name(kind), bound);
        *diff_out = dup_string(report.to_jsonl());
        *diff_count = report.diffs.size();
    });
}

} // extern "C"
