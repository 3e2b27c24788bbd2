// palinpair command-line tool. Talks to the library exclusively through the
// C API in palinpair.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "palinpair.h"

namespace {

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { pp_string_free(value); }
};

struct NumeralGuard {
    pp_numeral* value = nullptr;
    ~NumeralGuard() { pp_numeral_free(value); }
};

int fail_with(pp_status status) {
    std::cerr << "error: " << pp_status_name(status) << ": " << pp_last_error() << '\n';
    return 1;
}

int write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path, std::ios::trunc | std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << output_path << '\n';
        return 1;
    }
    out << text;
    return 0;
}

std::string resolve_checkpoint(const std::string& path) {
    if (path.empty()) return path;
    const char* dir = std::getenv("PALINPAIR_CHECKPOINT_DIR");
    if (dir && *dir && std::filesystem::path(path).is_relative())
        return (std::filesystem::path(dir) / path).string();
    return path;
}

struct ScanArgs {
    std::uint32_t base = 10;
    std::uint64_t bound = 0;
    std::string format = "csv";
    std::string output;
    std::string checkpoint;
    int workers = 1;
    std::uint64_t stop_after = 0;
};

void add_scan_options(CLI::App* cmd, ScanArgs& args) {
    cmd->add_option("--base", args.base, "numeral base")->capture_default_str();
    cmd->add_option("--bound", args.bound, "scan bound")->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    cmd->add_option("--output", args.output, "write records to this file instead of stdout");
    cmd->add_option("--checkpoint", args.checkpoint,
                    "checkpoint file; an existing one resumes the scan");
    cmd->add_option("--workers", args.workers, "worker threads")->capture_default_str();
    cmd->add_option("--stop-after", args.stop_after,
                    "interrupt once the outer cursor passes this value (testing)");
}

pp_format format_of(const std::string& name) {
    return name == "jsonl" ? PP_FORMAT_JSONL : PP_FORMAT_CSV;
}

int run_scan_command(pp_scan_kind kind, const ScanArgs& args) {
    const std::string checkpoint = resolve_checkpoint(args.checkpoint);
    pp_scan_config config{};
    config.kind = kind;
    config.base = args.base;
    config.bound = args.bound;
    config.workers = args.workers;
    config.format = format_of(args.format);
    config.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
    config.stop_after_cursor = args.stop_after;
    StringGuard records;
    pp_scan_summary summary{};
    if (pp_status st = pp_scan_run(&config, &records.value, &summary)) return fail_with(st);
    if (!summary.completed) {
        std::cerr << "interrupted at cursor " << summary.cursor << "; rerun with the same "
                  << "--checkpoint to resume\n";
        return 0;
    }
    if (int rc = write_output(records.value, args.output)) return rc;
    std::cerr << "records: " << summary.record_count
              << "  counterexamples: " << summary.counterexample_count << '\n';
    return summary.counterexample_count > 0 ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-arithmetic pair scans, constructions and OEIS cross-checks"};
    app.require_subcommand(1);

    ScanArgs table1_args, table2_args, conj_args, revmult_args;
    auto* table1 = app.add_subcommand(
        "table1", "palindromic but not polynomial pairs (one per reversal class)");
    add_scan_options(table1, table1_args);
    auto* table2 = app.add_subcommand(
        "table2", "polynomial pairs with neither member a palindrome, C <= C*");
    add_scan_options(table2, table2_args);
    auto* conj = app.add_subcommand(
        "conjecture-main",
        "hunt palindromic non-polynomial pairs with both members non-palindromic");
    add_scan_options(conj, conj_args);
    auto* revmult = app.add_subcommand(
        "reversal-mult", "operands whose reversal multiplication gives a palindrome");
    add_scan_options(revmult, revmult_args);

    struct {
        std::uint32_t base = 10;
        std::string a, b;
    } check_args;
    auto* check = app.add_subcommand("check", "all pair predicates plus the carry trace");
    check->add_option("--base", check_args.base, "numeral base")->capture_default_str();
    check->add_option("--a", check_args.a, "first operand")->required();
    check->add_option("--b", check_args.b, "second operand")->required();

    struct {
        std::uint32_t n = 2;
        std::uint32_t base = 10;
    } repunit_args;
    auto* repunit =
        app.add_subcommand("repunit", "factor R(2^n) and enumerate its polynomial-pair splits");
    repunit->add_option("--n", repunit_args.n, "factor count n (repunit R(2^n))")->required();
    repunit->add_option("--base", repunit_args.base, "numeral base")->capture_default_str();

    struct {
        std::string family;
        std::uint64_t param = 0;
        std::uint64_t j = 0;
        std::string variant;
        std::string format = "csv";
    } family_args;
    auto* families =
        app.add_subcommand("families", "generate a verified counterexample-family member");
    families->add_option("--family", family_args.family, "family tag")
        ->required()
        ->check(CLI::IsMember({"base2-eq3", "r-squared-minus-1", "four-k-minus-1",
                               "four-k-plus-1"}));
    families->add_option("--param", family_args.param, "l, r or k, by family")->required();
    families->add_option("--j", family_args.j, "zero-run padding")->capture_default_str();
    families->add_option("--variant", family_args.variant, "base2-eq3 zero-run variant")
        ->check(CLI::IsMember({"2l-1", "2l+1"}));
    families->add_option("--format", family_args.format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();

    struct {
        std::string seq;
        std::string bfile;
        std::uint64_t bound = 100000;
        int check_base = 0;
    } oeis_args;
    auto* oeis = app.add_subcommand("oeis", "cross-check a b-file against the regenerated prefix");
    oeis->add_option("--seq", oeis_args.seq, "sequence tag")
        ->required()
        ->check(CLI::IsMember({"a062936", "a002778", "a002779", "a156317"}));
    oeis->add_option("--bfile", oeis_args.bfile, "path to the b-file")->required();
    oeis->add_option("--bound", oeis_args.bound, "compare values up to this bound")
        ->capture_default_str();

    struct {
        std::uint32_t base = 10;
    } basecond_args;
    auto* basecond = app.add_subcommand(
        "base-condition", "is the base even with base+1 square-free (necessary condition)");
    basecond->add_option("--base", basecond_args.base, "numeral base")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (table1->parsed()) return run_scan_command(PP_SCAN_PALINDROMIC_NONPOLYNOMIAL, table1_args);
    if (table2->parsed()) return run_scan_command(PP_SCAN_POLYNOMIAL_NONPALINDROME, table2_args);
    if (conj->parsed()) return run_scan_command(PP_SCAN_CONJECTURE_MAIN, conj_args);
    if (revmult->parsed()) return run_scan_command(PP_SCAN_REVERSAL_MULT, revmult_args);

    if (check->parsed()) {
        NumeralGuard a, b;
        if (pp_status st = pp_numeral_parse(check_args.a.c_str(), check_args.base, &a.value))
            return fail_with(st);
        if (pp_status st = pp_numeral_parse(check_args.b.c_str(), check_args.base, &b.value))
            return fail_with(st);
        pp_pair_verdict verdict{};
        if (pp_status st = pp_pair_check(a.value, b.value, &verdict)) return fail_with(st);
        std::cout << "polynomial=" << (verdict.polynomial ? "true" : "false")
                  << " palindromic=" << (verdict.palindromic ? "true" : "false")
                  << " additive=" << (verdict.additive ? "true" : "false");
        if (!verdict.polynomial)
            std::cout << " first_carry_position=" << verdict.first_carry_position
                      << " witness_coefficient=" << verdict.witness_coefficient;
        std::cout << '\n';
        NumeralGuard c;
        StringGuard rendered, trace;
        if (pp_status st = pp_numeral_multiply(a.value, b.value, &c.value)) return fail_with(st);
        if (pp_status st = pp_numeral_render(c.value, &rendered.value)) return fail_with(st);
        std::cout << "product=" << rendered.value << '\n';
        if (pp_status st = pp_carry_trace_text(a.value, b.value, &trace.value))
            return fail_with(st);
        std::cout << trace.value;
        return 0;
    }

    if (repunit->parsed()) {
        StringGuard report;
        if (pp_status st = pp_repunit_report(repunit_args.n, repunit_args.base, &report.value))
            return fail_with(st);
        std::cout << report.value;
        return 0;
    }

    if (families->parsed()) {
        StringGuard record;
        if (pp_status st = pp_family_generate(
                family_args.family.c_str(), family_args.param, family_args.j,
                family_args.variant.empty() ? nullptr : family_args.variant.c_str(),
                format_of(family_args.format), &record.value))
            return fail_with(st);
        std::cout << record.value;
        return 0;
    }

    if (oeis->parsed()) {
        StringGuard diff;
        std::uint64_t diff_count = 0;
        if (pp_status st = pp_oeis_crosscheck(oeis_args.bfile.c_str(), oeis_args.seq.c_str(),
                                              oeis_args.bound, &diff.value, &diff_count))
            return fail_with(st);
        std::cout << diff.value;
        std::cerr << "diffs: " << diff_count << '\n';
        return 0;
    }

    if (basecond->parsed()) {
        int ok = 0;
        if (pp_status st = pp_base_condition_check(basecond_args.base, &ok)) return fail_with(st);
        std::cout << (ok ? "true" : "false") << '\n';
        return 0;
    }

    return 1;
}
