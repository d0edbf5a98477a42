#pragma once

#include "fusionlab/report.hpp"

namespace fusionlab {

/// Options shared by the check-style commands.
struct CheckOptions {
    BigRat s = BigRat(1);                 // exponent for the s-graded claims
    std::optional<std::size_t> generator; // restrict per-simple claims to one X
    std::string theorem = "all";          // claim id filter
    HypothesisFlags assume;               // document flags merged with --assume
};

/// Every claim id the checker can produce, in the order they are emitted
/// for a single ring (per-ring claims first, then the per-simple block).
const std::vector<std::string>& claim_catalog();

bool known_claim(const std::string& id);

/// Runs the selected claims over one ring document and appends one report
/// entry per claim instance. Per-ring claims: 5.1 (s-Isaacs at s), 7.1
/// (1-Isaacs), ft (Frobenius type at s = 1), and 1.5/1.6/1.7 at every prime
/// dividing an integral global dimension. Per-simple claims, for each X (or
/// the chosen generator): 1.1-1.4, 5.3, 5.3-sum, 5.4, 5.5, 6.1-6.6, 7.2, and
/// 1.2 when the document carries an S-matrix.
void run_checks(ReportDocument& doc, const RingDocument& input,
                const CheckOptions& opt);

} // namespace fusionlab
