#pragma once

#include "fusionlab/io.hpp"

namespace fusionlab {

inline constexpr const char* kToolName = "fusionlab";
inline constexpr const char* kToolVersion = "1.0.0";

/// One checked claim instance, attributed to the ring it ran on.
struct ReportEntry {
    std::string ring;
    TheoremReport report;
};

/// Aggregated run output. Content and field order are fully determined by
/// the inputs and the working precision: no timestamps, no paths, so a rerun
/// on identical input is byte-identical.
struct ReportDocument {
    std::string command;
    std::string input_digest;
    unsigned precision = 0;
    std::vector<ReportEntry> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t indeterminate = 0;
};

/// Appends an entry and updates the tallies.
void add_entry(ReportDocument& doc, std::string ring, TheoremReport report);

/// Refutations dominate: 1 when any check failed, else 2 when any check is
/// undecided, else 0.
int report_exit_code(const ReportDocument& doc);

/// FNV-1a 64-bit digest of a byte string, as 16 hex digits.
std::string digest_hex(const std::string& bytes);

/// Uppercase status labels used by both output formats.
std::string status_label(TheoremCheck::Status s);

Json report_json(const ReportDocument& doc);
std::string report_text(const ReportDocument& doc);

/// Renders in the requested format ("json" or "text") and writes to the
/// given path, or to the stream when the path is empty.
void write_report(const ReportDocument& doc, const std::string& format,
                  const std::string& out_path, std::ostream& fallback);

} // namespace fusionlab
