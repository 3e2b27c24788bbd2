#include "palinpair/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "palinpair/predicates.hpp"

namespace palinpair {

namespace {

constexpr std::uint64_t chunk_size = 4096;

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t fnv1a(std::uint64_t state, const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        state ^= static_cast<unsigned char>(data[i]);
        state *= 0x100000001b3ULL;
    }
    return state;
}
constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;

struct Finding {
    std::uint64_t a = 0; // discovery key, outer operand value
    PairRecord record;
};

/// Scans one outer index. Pair scans skip operands divisible by the base:
/// their reversal drops digits, which both breaks Table 1 reproduction and
/// manufactures sham conjecture counterexamples such as (550, 990).
void scan_outer(const ScanOptions& opt, std::uint64_t a_val, std::vector<Finding>& out) {
    const std::uint32_t base = opt.base;
    if (opt.kind == ScanKind::reversal_mult) {
        if (a_val % base == 0) return;
        const Numeral a = Numeral::from_value(a_val, base);
        const Numeral a_rev = a.reversed();
        const Numeral c = multiply(a, a_rev);
        if (!c.is_palindrome()) return;
        PairRecord r;
        r.base = base;
        r.a = a;
        r.b = a_rev;
        r.c = c;
        r.a_rev = a_rev;
        r.b_rev = a;
        r.c_rev = c.reversed();
        r.polynomial = is_polynomial_pair(a, a_rev);
        r.palindromic = true; // c palindrome and b = reverse(a) imply it
        r.c_is_palindrome = true;
        out.push_back({a_val, std::move(r)});
        return;
    }

    if (a_val % base == 0) return;
    const Numeral a = Numeral::from_value(a_val, base);
    const Numeral a_rev = a.reversed();
    const bool a_pal = a.is_palindrome();
    const digit_t a_max = a.max_digit();
    const bool polynomial_scan = opt.kind == ScanKind::polynomial_nonpalindrome;
    if (polynomial_scan && a_pal) return;

    for (std::uint64_t b_val = a_val; b_val <= opt.bound / a_val; ++b_val) {
        if (b_val % base == 0) continue;
        Numeral b = Numeral::from_value(b_val, base);
        // Necessary-condition pruning, polynomial scans only.
        if (polynomial_scan &&
            static_cast<std::uint64_t>(a_max) * b.max_digit() > base - 1)
            continue;
        const bool b_pal = b.is_palindrome();
        if (polynomial_scan && b_pal) continue;
        if (opt.kind == ScanKind::conjecture_main && (a_pal || b_pal)) continue;

        const Numeral c = multiply(a, b);
        const Numeral c_rev = c.reversed();
        if (opt.kind != ScanKind::conjecture_main && compare_value(c, c_rev) > 0)
            continue; // one representative per reversal class, C <= C*

        const bool polynomial = is_polynomial_pair(a, b);
        if (polynomial_scan) {
            if (!polynomial) continue;
        } else if (polynomial) {
            continue; // both remaining kinds want non-polynomial pairs
        }
        const Numeral b_rev = b.reversed();
        const bool palindromic = multiply(a_rev, b_rev) == c_rev;
        if (!palindromic) continue;

        PairRecord r;
        r.base = base;
        r.a = a;
        r.b = std::move(b);
        r.c = c;
        r.a_rev = a_rev;
        r.b_rev = b_rev;
        r.c_rev = c_rev;
        r.polynomial = polynomial;
        r.palindromic = true;
        r.c_is_palindrome = c.is_palindrome();
        out.push_back({a_val, std::move(r)});
    }
}

std::uint64_t outer_limit(const ScanOptions& opt) {
    return opt.kind == ScanKind::reversal_mult ? opt.bound : isqrt(opt.bound);
}

std::uint64_t count_counterexamples(const ScanOptions& opt,
                                    const std::vector<PairRecord>& records) {
    switch (opt.kind) {
        case ScanKind::conjecture_main:
            return records.size();
        case ScanKind::reversal_mult:
            return static_cast<std::uint64_t>(
                std::count_if(records.begin(), records.end(),
                              [](const PairRecord& r) { return !r.polynomial; }));
        default:
            return 0;
    }
}

void sort_records(ScanKind kind, std::vector<PairRecord>& records) {
    std::sort(records.begin(), records.end(), [kind](const PairRecord& x, const PairRecord& y) {
        if (kind == ScanKind::reversal_mult) return compare_value(x.a, y.a) < 0;
        if (auto c = compare_value(x.c, y.c); c != 0) return c < 0;
        if (auto c = compare_value(x.a, y.a); c != 0) return c < 0;
        return compare_value(x.b, y.b) < 0;
    });
}

struct CheckpointState {
    std::uint64_t cursor = 0;
    std::uint64_t records_emitted = 0;
    std::uint64_t digest = fnv_offset;
    std::vector<PairRecord> records;
};

std::string partial_path(const std::string& checkpoint_path) {
    return checkpoint_path + ".partial";
}

void write_checkpoint(const ScanOptions& opt, const CheckpointState& state) {
    nlohmann::ordered_json j{
        {"scan_kind", scan_kind_name(opt.kind)},
        {"base", opt.base},
        {"bound", opt.bound},
        {"cursor", state.cursor},
        {"records_emitted", state.records_emitted},
        {"content_digest", state.digest},
    };
    const std::string tmp = opt.checkpoint_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail(errc::io, "cannot write checkpoint " + opt.checkpoint_path);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, opt.checkpoint_path);
}

CheckpointState load_checkpoint(const ScanOptions& opt) {
    std::ifstream in(opt.checkpoint_path);
    if (!in) fail(errc::io, "cannot read checkpoint " + opt.checkpoint_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad checkpoint file: ") + e.what());
    }
    CheckpointState state;
    std::string kind;
    std::uint32_t base = 0;
    std::uint64_t bound = 0;
    try {
        kind = j.at("scan_kind").get<std::string>();
        base = j.at("base").get<std::uint32_t>();
        bound = j.at("bound").get<std::uint64_t>();
        state.cursor = j.at("cursor").get<std::uint64_t>();
        state.records_emitted = j.at("records_emitted").get<std::uint64_t>();
        state.digest = j.at("content_digest").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad checkpoint fields: ") + e.what());
    }
    if (scan_kind_from_name(kind) != opt.kind || base != opt.base || bound != opt.bound)
        fail(errc::invalid_argument, "checkpoint does not match this scan configuration");

    std::string content;
    {
        std::ifstream pin(partial_path(opt.checkpoint_path), std::ios::binary);
        if (pin) {
            std::ostringstream buf;
            buf << pin.rdbuf();
            content = buf.str();
        }
    }
    if (fnv1a(fnv_offset, content.data(), content.size()) != state.digest)
        fail(errc::digest_mismatch, "partial output does not match checkpoint digest");

    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) state.records.push_back(record_from_jsonl(line));
    if (state.records.size() != state.records_emitted)
        fail(errc::digest_mismatch, "partial output record count disagrees with checkpoint");
    return state;
}

} // namespace

const char* scan_kind_name(ScanKind kind) {
    switch (kind) {
        case ScanKind::palindromic_nonpolynomial: return "palindromic-nonpolynomial";
        case ScanKind::polynomial_nonpalindrome: return "polynomial-nonpalindrome";
        case ScanKind::conjecture_main: return "conjecture-main";
        case ScanKind::reversal_mult: return "reversal-mult";
    }
    return "?";
}

ScanKind scan_kind_from_name(const std::string& name) {
    if (name == "palindromic-nonpolynomial") return ScanKind::palindromic_nonpolynomial;
    if (name == "polynomial-nonpalindrome") return ScanKind::polynomial_nonpalindrome;
    if (name == "conjecture-main") return ScanKind::conjecture_main;
    if (name == "reversal-mult") return ScanKind::reversal_mult;
    fail(errc::unknown_kind, "unknown scan kind '" + name + "'");
}

ScanResult run_scan(const ScanOptions& opt) {
    if (opt.base < Numeral::min_base || opt.base > Numeral::max_base)
        fail(errc::invalid_argument, "base out of range");
    if (opt.bound < opt.base) fail(errc::invalid_argument, "bound must be >= base");
    if (opt.workers < 1) fail(errc::invalid_argument, "workers must be >= 1");

    const std::uint64_t limit = outer_limit(opt);
    const std::uint64_t start = opt.kind == ScanKind::reversal_mult ? 1 : 2;

    CheckpointState state;
    const bool checkpointed = !opt.checkpoint_path.empty();
    if (checkpointed && std::filesystem::exists(opt.checkpoint_path)) {
        state = load_checkpoint(opt);
    } else {
        state.cursor = start - 1;
        if (checkpointed) {
            std::ofstream(partial_path(opt.checkpoint_path), std::ios::trunc);
            write_checkpoint(opt, state);
        }
    }

    bool interrupted = false;
    while (state.cursor < limit) {
        const std::uint64_t lo = state.cursor + 1;
        std::uint64_t hi = std::min(limit, state.cursor + chunk_size);
        // land a chunk boundary exactly on the requested stop cursor so test
        // interruptions take effect even when the whole range fits one chunk
        if (opt.stop_after_cursor != 0 && opt.stop_after_cursor >= lo)
            hi = std::min(hi, opt.stop_after_cursor);
        const std::uint64_t span = hi - lo + 1;
        const int workers = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(opt.workers), span));
        std::vector<std::vector<Finding>> found(workers);
        if (workers == 1) {
            for (std::uint64_t a = lo; a <= hi; ++a) scan_outer(opt, a, found[0]);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                const std::uint64_t wlo = lo + span * w / workers;
                const std::uint64_t whi = lo + span * (w + 1) / workers - 1;
                pool.emplace_back([&, w, wlo, whi] {
                    for (std::uint64_t a = wlo; a <= whi; ++a) scan_outer(opt, a, found[w]);
                });
            }
            for (auto& t : pool) t.join();
        }
        std::string appended;
        for (auto& part : found) {
            for (Finding& f : part) {
                if (checkpointed) {
                    appended += to_jsonl_line(f.record, false);
                    appended += '\n';
                }
                state.records.push_back(std::move(f.record));
                ++state.records_emitted;
            }
        }
        state.cursor = hi;
        if (checkpointed) {
            if (!appended.empty()) {
                std::ofstream out(partial_path(opt.checkpoint_path),
                                  std::ios::app | std::ios::binary);
                if (!out) fail(errc::io, "cannot append partial output");
                out << appended;
                state.digest = fnv1a(state.digest, appended.data(), appended.size());
            }
            write_checkpoint(opt, state);
        }
        if (opt.stop_after_cursor != 0 && state.cursor >= opt.stop_after_cursor &&
            state.cursor < limit) {
            interrupted = true;
            break;
        }
    }

    ScanResult result;
    result.cursor = state.cursor;
    result.completed = !interrupted;
    result.records = std::move(state.records);
    if (result.completed) {
        sort_records(opt.kind, result.records);
        result.counterexamples = count_counterexamples(opt, result.records);
    }
    return result;
}

ScanResult resume_scan(const std::string& checkpoint_path, int workers) {
    std::ifstream in(checkpoint_path);
    if (!in) fail(errc::io, "cannot read checkpoint " + checkpoint_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad checkpoint file: ") + e.what());
    }
    ScanOptions opt;
    try {
        opt.kind = scan_kind_from_name(j.at("scan_kind").get<std::string>());
        opt.base = j.at("base").get<std::uint32_t>();
        opt.bound = j.at("bound").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("bad checkpoint fields: ") + e.what());
    }
    opt.workers = workers;
    opt.checkpoint_path = checkpoint_path;
    return run_scan(opt);
}

} // namespace palinpair
