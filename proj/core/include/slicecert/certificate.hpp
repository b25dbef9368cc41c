#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slicecert {

struct CheckResult {
    std::string name;
    std::string kind;  // "symbolic", "sampled", or "structural"
    bool pass = false;
    std::string witness;  // exact values, offending component, etc.
    std::optional<std::uint64_t> seed;
};

/// Machine-checkable verification record for one claim.  Certificates are
/// always written, pass or fail, so regressions diff cleanly.
struct Certificate {
    std::string case_label;
    std::string paper_ref;
    std::vector<CheckResult> checks;
    std::string convention_hash;
    std::vector<std::string> assumptions;
    std::uint64_t seed = 0;
    unsigned samples = 0;
    long runtime_ms = 0;

    bool passed() const;
    void add(std::string name, std::string kind, bool pass, std::string witness = "",
             std::optional<std::uint64_t> seed = std::nullopt);
    /// cert/v1 JSON; byte-stable for fixed inputs apart from runtime_ms.
    std::string to_json() const;
    void write(const std::string& path) const;
    /// One-line summary for the CLI report table.
    std::string summary_line() const;
};

}  // namespace slicecert
