#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palinpair/records.hpp"

namespace palinpair {

enum class ScanKind {
    palindromic_nonpolynomial, // Table 1
    polynomial_nonpalindrome,  // Table 2
    conjecture_main,           // counterexample hunt, empty output = verified
    reversal_mult,             // a * reverse(a) palindromes
};

const char* scan_kind_name(ScanKind kind);
ScanKind scan_kind_from_name(const std::string& name);

struct ScanOptions {
    ScanKind kind = ScanKind::palindromic_nonpolynomial;
    std::uint32_t base = 10;
    std::uint64_t bound = 0;       // product bound; operand bound for reversal_mult
    int workers = 1;
    std::string checkpoint_path;   // empty: no checkpointing
    std::uint64_t stop_after_cursor = 0; // nonzero: interrupt once cursor passes this
};

struct ScanResult {
    std::vector<PairRecord> records;
    std::uint64_t counterexamples = 0;
    bool completed = true;
    std::uint64_t cursor = 0;
};

/// Runs (or, when the checkpoint file exists, resumes) the scan. The final
/// record list is deterministic: sorted by (value c, value a, value b) for
/// pair scans and by value a for reversal_mult, independent of worker count
/// and interruption history.
ScanResult run_scan(const ScanOptions& options);

/// Resumes from a checkpoint file alone; kind/base/bound come from the file.
ScanResult resume_scan(const std::string& checkpoint_path, int workers = 1);

} // namespace palinpair
