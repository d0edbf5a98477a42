#include "fusionlab/report.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fusionlab {

namespace {

std::string render_rat_list(const std::vector<BigRat>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os.str();
}

bool has_verdict(const TheoremReport& r) {
    return r.verdict.tier != IntegralityVerdict::Tier::Indeterminate ||
           !r.verdict.witness.empty() || !r.verdict.detail.empty();
}

Json entry_json(const ReportEntry& e) {
    const TheoremReport& r = e.report;
    Json j = Json::object();
    j["ring"] = e.ring;
    j["claim"] = r.tag;
    j["statement"] = r.statement;
    j["status"] = status_label(r.status);
    j["verified"] = r.verified;
    j["asserted"] = r.asserted;
    Json q = Json::array();
    for (const auto& [name, value] : r.quantities) {
        q.push_back(Json::array({name, value}));
    }
    j["quantities"] = std::move(q);
    if (has_verdict(r)) {
        Json v = Json::object();
        v["tier"] = tier_name(r.verdict.tier);
        if (!r.verdict.witness.empty()) {
            v["witness"] = render_monic_poly(r.verdict.witness);
            Json coeffs = Json::array();
            for (const BigRat& c : r.verdict.witness) {
                std::ostringstream os;
                os << c;
                coeffs.push_back(os.str());
            }
            v["coefficients"] = std::move(coeffs);
        }
        if (!r.verdict.detail.empty()) {
            v["detail"] = r.verdict.detail;
        }
        j["verdict"] = std::move(v);
    }
    if (r.equality) {
        j["equality"] = eq_verdict_name(*r.equality);
    }
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

} // namespace

void add_entry(ReportDocument& doc, std::string ring, TheoremReport report) {
    switch (report.status) {
    case TheoremCheck::Status::Pass:
        ++doc.passed;
        break;
    case TheoremCheck::Status::Fail:
        ++doc.failed;
        break;
    case TheoremCheck::Status::Skipped:
        ++doc.skipped;
        break;
    case TheoremCheck::Status::Indeterminate:
        ++doc.indeterminate;
        break;
    }
    doc.entries.push_back({std::move(ring), std::move(report)});
}

int report_exit_code(const ReportDocument& doc) {
    if (doc.failed > 0) {
        return 1;
    }
    if (doc.indeterminate > 0) {
        return 2;
    }
    return 0;
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string status_label(TheoremCheck::Status s) {
    switch (s) {
    case TheoremCheck::Status::Pass:
        return "PASS";
    case TheoremCheck::Status::Fail:
        return "FAIL";
    case TheoremCheck::Status::Skipped:
        return "SKIPPED";
    case TheoremCheck::Status::Indeterminate:
        return "INDETERMINATE";
    }
    return "?";
}

Json report_json(const ReportDocument& doc) {
    Json j = Json::object();
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    j["command"] = doc.command;
    j["precision"] = doc.precision;
    j["input_digest"] = doc.input_digest;
    Json checks = Json::array();
    for (const ReportEntry& e : doc.entries) {
        checks.push_back(entry_json(e));
    }
    j["checks"] = std::move(checks);
    Json summary = Json::object();
    summary["passed"] = doc.passed;
    summary["failed"] = doc.failed;
    summary["skipped"] = doc.skipped;
    summary["indeterminate"] = doc.indeterminate;
    summary["total"] = doc.entries.size();
    j["summary"] = std::move(summary);
    return j;
}

std::string report_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << " — " << doc.command << "\n";
    os << "precision: " << doc.precision << " bits\n";
    os << "input digest: " << doc.input_digest << "\n";
    std::string current_ring;
    for (const ReportEntry& e : doc.entries) {
        if (e.ring != current_ring) {
            current_ring = e.ring;
            os << "\n== " << current_ring << " ==\n";
        }
        const TheoremReport& r = e.report;
        os << "[" << r.tag << "] " << status_label(r.status) << " — "
           << r.statement << "\n";
        if (!r.verified.empty()) {
            os << "    verified:";
            for (const std::string& v : r.verified) os << " " << v << ";";
            os << "\n";
        }
        if (!r.asserted.empty()) {
            os << "    asserted:";
            for (const std::string& v : r.asserted) os << " " << v << ";";
            os << "\n";
        }
        for (const auto& [name, value] : r.quantities) {
            os << "    " << name << " = " << value << "\n";
        }
        if (has_verdict(r)) {
            os << "    verdict: " << tier_name(r.verdict.tier);
            if (!r.verdict.witness.empty()) {
                os << ", witness " << render_monic_poly(r.verdict.witness)
                   << " [" << render_rat_list(r.verdict.witness) << "]";
            }
            if (!r.verdict.detail.empty()) {
                os << " (" << r.verdict.detail << ")";
            }
            os << "\n";
        }
        if (r.equality) {
            os << "    equality: " << eq_verdict_name(*r.equality) << "\n";
        }
        if (!r.detail.empty()) {
            os << "    note: " << r.detail << "\n";
        }
    }
    os << "\nsummary: " << doc.passed << " passed, " << doc.failed
       << " failed, " << doc.skipped << " skipped, " << doc.indeterminate
       << " indeterminate (" << doc.entries.size() << " checks)\n";
    return os.str();
}

void write_report(const ReportDocument& doc, const std::string& format,
                  const std::string& out_path, std::ostream& fallback) {
    std::string body = (format == "json") ? report_json(doc).dump(2) + "\n"
                                          : report_text(doc);
    if (out_path.empty()) {
        fallback << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + out_path);
    }
    out << body;
}

} // namespace fusionlab
