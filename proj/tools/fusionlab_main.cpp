// Command-line front end: loads ring documents, runs the requested
// verification commands, and emits deterministic JSON or text reports.

#include "fusionlab/checks.hpp"
#include "fusionlab/io.hpp"
#include "fusionlab/lattice.hpp"
#include "fusionlab/modular.hpp"
#include "fusionlab/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef FUSIONLAB_DATA_DIR
#define FUSIONLAB_DATA_DIR "data"
#endif

namespace {

using namespace fusionlab;

struct Options {
    std::string file;
    unsigned precision = 256;
    std::string s_text = "1";
    std::string generator;
    std::string subring_csv;
    std::string theorem = "all";
    std::string assume_csv;
    std::string format = "text";
    std::string out;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        parts.push_back(item.substr(a, b - a + 1));
    }
    return parts;
}

BigRat parse_exponent(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigRat s{BigInt(text)};
            rational_exponent(s);
            return s;
        }
        BigInt num{text.substr(0, slash)};
        BigInt den{text.substr(slash + 1)};
        if (den == 0) throw Error("zero denominator in exponent");
        BigRat s{num, den};
        rational_exponent(s);
        return s;
    } catch (const std::runtime_error& e) {
        throw Error("invalid exponent '" + text + "': " + e.what());
    }
}

std::size_t label_index(const FusionRing& ring, const std::string& label) {
    for (std::size_t i = 0; i < ring.rank; ++i) {
        if (ring.labels[i] == label) return i;
    }
    throw Error("unknown simple object label '" + label + "'");
}

HypothesisFlags parse_assumptions(const std::string& csv) {
    HypothesisFlags flags;
    for (const std::string& name : split_csv(csv)) {
        if (!set_hypothesis_flag(flags, name)) {
            throw Error("unknown hypothesis flag '" + name + "'");
        }
    }
    return flags;
}

std::string document_digest(const RingDocument& doc) {
    return digest_hex(ring_document_json(doc).dump());
}

void emit_payload(const Options& opt, const Json& payload, const std::string& text) {
    std::string body = opt.format == "json" ? payload.dump(2) + "\n" : text;
    if (!opt.out.empty()) {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw Error("cannot open output file " + opt.out);
        file << body;
    } else {
        std::cout << body;
    }
}

void emit_report(const Options& opt, const ReportDocument& doc) {
    write_report(doc, opt.format, opt.out, std::cout);
}

Subring selected_subring(const FusionRing& ring, const Options& opt) {
    if (!opt.generator.empty()) {
        return generated_subring(ring, {label_index(ring, opt.generator)});
    }
    if (!opt.subring_csv.empty()) {
        std::vector<std::size_t> members;
        for (const std::string& label : split_csv(opt.subring_csv)) {
            members.push_back(label_index(ring, label));
        }
        return subring_from_members(ring, members);
    }
    return adjoint_subring(ring);
}

std::string join_labels(const FusionRing& ring, const std::vector<std::size_t>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += ring.label(members[i]);
    }
    return out;
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    FPDimData fp = fp_dims(doc.ring);
    bool commutative = is_commutative(doc.ring);

    struct Expected {
        std::string key;
        std::string want;
        std::string got;
        bool ok = false;
    };
    std::vector<Expected> checks;
    if (doc.expected.is_object()) {
        if (doc.expected.contains("rank")) {
            Expected c;
            c.key = "rank";
            c.want = doc.expected.at("rank").dump();
            c.got = std::to_string(doc.ring.rank);
            c.ok = doc.expected.at("rank").is_number_unsigned() &&
                   doc.expected.at("rank").get<std::size_t>() == doc.ring.rank;
            checks.push_back(c);
        }
        if (doc.expected.contains("fpdim_total")) {
            Expected c;
            c.key = "fpdim_total";
            c.want = doc.expected.at("fpdim_total").get<std::string>();
            c.got = render_scalar(fp.total);
            EqVerdict v = scalar_eq(parse_scalar(c.want), fp.total);
            c.ok = v == EqVerdict::ExactEqual || v == EqVerdict::WithinRadius;
            checks.push_back(c);
        }
        if (doc.expected.contains("group_like_order") && commutative) {
            Expected c;
            c.key = "group_like_order";
            c.want = doc.expected.at("group_like_order").dump();
            CharacterTable table = character_table(doc.ring);
            GroupLikeData gl = group_likes(table, dual_constants(table));
            c.got = std::to_string(gl.order());
            c.ok = doc.expected.at("group_like_order").is_number_unsigned() &&
                   doc.expected.at("group_like_order").get<std::size_t>() == gl.order();
            checks.push_back(c);
        }
    }

    bool all_ok = true;
    for (const Expected& c : checks) all_ok = all_ok && c.ok;

    Json payload;
    payload["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    payload["ring"] = doc.name;
    payload["input_digest"] = document_digest(doc);
    payload["rank"] = doc.ring.rank;
    payload["commutative"] = commutative;
    payload["fpdim_total"] = render_scalar(fp.total);
    Json dims = Json::array();
    for (const Scalar& d : fp.dims) dims.push_back(render_scalar(d));
    payload["fpdims"] = dims;
    payload["has_smatrix"] = doc.modular.has_value();
    Json expected = Json::array();
    for (const Expected& c : checks) {
        expected.push_back(Json{{"key", c.key},
                                {"expected", c.want},
                                {"actual", c.got},
                                {"ok", c.ok}});
    }
    payload["expected_checks"] = expected;
    payload["valid"] = all_ok;

    std::ostringstream text;
    text << "ring " << doc.name << ": rank " << doc.ring.rank
         << ", fusion axioms hold, "
         << (commutative ? "commutative" : "non-commutative") << "\n";
    text << "  FPdim total: " << render_scalar(fp.total) << "\n";
    text << "  FPdims: ";
    for (std::size_t i = 0; i < fp.dims.size(); ++i) {
        if (i) text << ", ";
        text << doc.ring.label(i) << " = " << render_scalar(fp.dims[i]);
    }
    text << "\n";
    if (doc.modular) text << "  S-matrix: present (validated)\n";
    for (const Expected& c : checks) {
        text << "  expected " << c.key << ": " << c.want << " vs " << c.got
             << (c.ok ? "  [ok]" : "  [MISMATCH]") << "\n";
    }
    text << (all_ok ? "VALID" : "EXPECTED-VALUE MISMATCH") << "\n";
    emit_payload(opt, payload, text.str());
    return all_ok ? 0 : 1;
}

// --- chartable --------------------------------------------------------------

int cmd_chartable(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    CharacterTable table = character_table(doc.ring);
    SphericalData sph = spherical_data(table);
    OrthogonalityReport orth = verify_orthogonality(table, sph);

    Json payload;
    payload["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    payload["ring"] = doc.name;
    payload["input_digest"] = document_digest(doc);
    payload["precision"] = working_precision();
    Json rows = Json::array();
    for (std::size_t j = 0; j < table.rank(); ++j) {
        Json row;
        Json values = Json::array();
        for (std::size_t i = 0; i < table.rank(); ++i) {
            values.push_back(render_scalar(table.at(j, i)));
        }
        row["values"] = values;
        row["codegree"] = render_scalar(table.codegrees[j]);
        row["conjugate_row"] = table.involution[j];
        rows.push_back(row);
    }
    payload["characters"] = rows;
    payload["fp_row"] = table.fp_index;
    payload["orthogonality"] = Json{
        {"first", orth.first_ok},
        {"second", orth.second_ok},
        {"max_deviation", orth.max_deviation.str()}};

    std::ostringstream text;
    text << "character table of " << doc.name << " (" << table.rank()
         << " characters; row 0 is Frobenius-Perron)\n";
    for (std::size_t j = 0; j < table.rank(); ++j) {
        text << "  mu_" << j << ":";
        for (std::size_t i = 0; i < table.rank(); ++i) {
            text << "  " << render_scalar(table.at(j, i));
        }
        text << "   | codegree " << render_scalar(table.codegrees[j])
             << ", conjugate row " << table.involution[j] << "\n";
    }
    bool ok = orth.first_ok && orth.second_ok;
    text << "orthogonality: first " << (orth.first_ok ? "ok" : "FAILED")
         << ", second " << (orth.second_ok ? "ok" : "FAILED") << "\n";
    text << (ok ? "PASS" : "FAIL") << "\n";
    emit_payload(opt, payload, text.str());
    return ok ? 0 : 1;
}

// --- dual -------------------------------------------------------------------

int cmd_dual(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    CharacterTable table = character_table(doc.ring);
    DualHypergroup dual = dual_constants(table);
    RNReport rn = rn_check(dual);
    GroupLikeData gl = group_likes(table, dual);
    std::optional<std::size_t> simple;
    if (!opt.generator.empty()) simple = label_index(doc.ring, opt.generator);
    StarOrbits orbits = star_orbits(gl, dual, table, simple);

    Json payload;
    payload["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    payload["ring"] = doc.name;
    payload["input_digest"] = document_digest(doc);
    payload["rn_status"] = rn_status_name(rn.status);
    Json viol = Json::array();
    for (const auto& v : rn.violations) {
        viol.push_back(Json{{"i", v.i},
                            {"j", v.j},
                            {"k", v.k},
                            {"value", render_scalar(v.value)}});
    }
    payload["rn_violations"] = viol;
    payload["group_like_rows"] = gl.members;
    payload["group_like_order"] = gl.order();
    Json orbit_json = Json::array();
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        orbit_json.push_back(Json{
            {"rows", orbits.orbits[o]},
            {"representative", orbits.representatives[o]},
            {"non_vanishing",
             orbits.non_vanishing.empty()
                 ? Json(nullptr)
                 : Json(static_cast<bool>(orbits.non_vanishing[o]))}});
    }
    payload["star_orbits"] = orbit_json;
    payload["designated_simple"] = orbits.designated_simple
                                       ? Json(*orbits.designated_simple)
                                       : Json(nullptr);

    std::ostringstream text;
    text << "dual hypergroup of " << doc.name << "\n";
    text << "  rational/nonnegative structure constants: "
         << rn_status_name(rn.status);
    if (!rn.violations.empty()) {
        text << " (" << rn.violations.size() << " violation(s), first at ("
             << rn.violations[0].i << ", " << rn.violations[0].j << ", "
             << rn.violations[0].k << "))";
    }
    text << "\n";
    text << "  group-like characters: " << gl.order() << " (rows";
    for (std::size_t m : gl.members) text << " " << m;
    text << ")\n";
    text << "  star orbits on character rows";
    if (orbits.designated_simple) {
        text << " (designated simple: "
             << doc.ring.label(*orbits.designated_simple) << ")";
    }
    text << "\n";
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        text << "    orbit " << o << ": rows";
        for (std::size_t r : orbits.orbits[o]) text << " " << r;
        if (!orbits.non_vanishing.empty()) {
            text << (orbits.non_vanishing[o] ? "  [non-vanishing]"
                                             : "  [vanishing]");
        }
        text << "\n";
    }
    bool indeterminate = rn.status == DualHypergroup::RNStatus::Indeterminate;
    text << (indeterminate ? "INDETERMINATE" : "PASS") << "\n";
    emit_payload(opt, payload, text.str());
    return indeterminate ? 2 : (rn.status == DualHypergroup::RNStatus::No ? 1 : 0);
}

// --- subcat -----------------------------------------------------------------

int cmd_subcat(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    CharacterTable table = character_table(doc.ring);
    SphericalData sph = spherical_data(table);
    DualHypergroup dual = dual_constants(table);
    Subring d = selected_subring(doc.ring, opt);

    std::vector<TheoremCheck> checks;
    checks.push_back(biduality_check(table, dual, d));

    std::optional<SizeTheoremReport> size;
    if (!opt.generator.empty()) {
        std::size_t x = label_index(doc.ring, opt.generator);
        SizeTheoremReport st = size_theorem(table, sph, x);
        checks.push_back(st.union_of_classes);
        checks.push_back(st.generated_center_is_group);
        checks.push_back(st.dim_ratio);
        checks.push_back(st.fp_ratio);
        size = std::move(st);
    }

    bool failed = false;
    bool indeterminate = false;
    for (const TheoremCheck& c : checks) {
        if (c.status == TheoremCheck::Status::Fail) failed = true;
        if (c.status == TheoremCheck::Status::Indeterminate) indeterminate = true;
    }

    Json payload;
    payload["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    payload["ring"] = doc.name;
    payload["input_digest"] = document_digest(doc);
    payload["members"] = d.members;
    Json labels = Json::array();
    for (std::size_t m : d.members) labels.push_back(doc.ring.label(m));
    payload["labels"] = labels;
    payload["fpdim"] = render_scalar(subring_fpdim(fp_dims(doc.ring), d));
    payload["dim"] = render_scalar(subring_dim(sph, d));
    Json check_json = Json::array();
    for (const TheoremCheck& c : checks) {
        check_json.push_back(Json{{"name", c.name},
                                  {"status", check_status_name(c.status)},
                                  {"detail", c.detail}});
    }
    payload["checks"] = check_json;
    if (size) {
        payload["center_rows"] = size->center;
        payload["u_d_order"] = size->u_d_order;
    }

    std::ostringstream text;
    text << "fusion subring of " << doc.name << ": {"
         << join_labels(doc.ring, d.members) << "}\n";
    text << "  rank " << d.rank() << ", FPdim "
         << render_scalar(subring_fpdim(fp_dims(doc.ring), d)) << ", dim "
         << render_scalar(subring_dim(sph, d)) << "\n";
    if (size) {
        text << "  center Z(X): rows";
        for (std::size_t r : size->center) text << " " << r;
        text << "; |U(D)| = " << size->u_d_order << "\n";
    }
    for (const TheoremCheck& c : checks) {
        text << "  " << c.name << ": " << check_status_name(c.status);
        if (!c.detail.empty()) text << " (" << c.detail << ")";
        text << "\n";
    }
    text << (failed ? "FAIL" : (indeterminate ? "INDETERMINATE" : "PASS")) << "\n";
    emit_payload(opt, payload, text.str());
    return failed ? 1 : (indeterminate ? 2 : 0);
}

// --- classes ----------------------------------------------------------------

int cmd_classes(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    CharacterTable table = character_table(doc.ring);
    SphericalData sph = spherical_data(table);
    Subring d = selected_subring(doc.ring, opt);
    CharacterClassPartition part = character_classes(table, sph, d);

    bool ok = part.count_ok && part.restriction_ok && part.general_sizes_ok;

    Json payload;
    payload["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    payload["ring"] = doc.name;
    payload["input_digest"] = document_digest(doc);
    payload["subring"] = d.members;
    Json blocks = Json::array();
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        blocks.push_back(Json{
            {"rows", part.blocks[b]},
            {"n_dim", render_scalar(part.block_n_dim[b])},
            {"order", render_scalar(part.block_order[b])},
            {"induced_row", part.induced_row_of_block[b]}});
    }
    payload["blocks"] = blocks;
    payload["count_ok"] = part.count_ok;
    payload["restriction_ok"] = part.restriction_ok;
    payload["general_sizes_ok"] = part.general_sizes_ok;
    payload["pointed_sizes_ok"] = part.plain_sizes_ok;

    std::ostringstream text;
    text << "character classes of " << doc.name << " modulo {"
         << join_labels(doc.ring, d.members) << "}\n";
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        text << "  class " << b << ": rows";
        for (std::size_t r : part.blocks[b]) text << " " << r;
        text << "   n_dim " << render_scalar(part.block_n_dim[b]) << ", order "
             << render_scalar(part.block_order[b]) << "\n";
    }
    text << "  class count matches subring rank: "
         << (part.count_ok ? "ok" : "FAILED") << "\n";
    text << "  blocks refine restriction to the subring: "
         << (part.restriction_ok ? "ok" : "FAILED") << "\n";
    text << "  size identity sum(n_dim/n) = |class| * FP-share: "
         << (part.general_sizes_ok ? "ok" : "FAILED") << "\n";
    text << "  pointed size formula applies: "
         << (part.plain_sizes_ok ? "yes" : "no") << "\n";
    text << (ok ? "PASS" : "FAIL") << "\n";
    emit_payload(opt, payload, text.str());
    return ok ? 0 : 1;
}

// --- isaacs -----------------------------------------------------------------

int cmd_isaacs(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    BigRat s = parse_exponent(opt.s_text);
    CharacterTable table = character_table(doc.ring);
    SphericalData sph = spherical_data(table);
    SIsaacsReport rep = opt.generator.empty()
        ? is_s_isaacs(table, sph, s)
        : is_s_isaacs(table, sph, s,
                      generated_subring(doc.ring,
                                        {label_index(doc.ring, opt.generator)}));

    ReportDocument report;
    report.command = "isaacs";
    report.input_digest = document_digest(doc);
    report.precision = working_precision();
    add_entry(report, doc.name, rep.report);
    emit_report(opt, report);
    return report_exit_code(report);
}

// --- check ------------------------------------------------------------------

CheckOptions check_options(const RingDocument& doc, const Options& opt) {
    CheckOptions copt;
    copt.s = parse_exponent(opt.s_text);
    if (!opt.generator.empty()) {
        copt.generator = label_index(doc.ring, opt.generator);
    }
    copt.theorem = opt.theorem;
    copt.assume = parse_assumptions(opt.assume_csv);
    return copt;
}

int cmd_check(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    ReportDocument report;
    report.command = "check";
    report.input_digest = document_digest(doc);
    report.precision = working_precision();
    run_checks(report, doc, check_options(doc, opt));
    emit_report(opt, report);
    return report_exit_code(report);
}

// --- modular ----------------------------------------------------------------

int cmd_modular(const Options& opt) {
    RingDocument doc = load_ring_document(opt.file);
    if (!doc.modular) {
        throw Error(opt.file + ": the document carries no S-matrix");
    }
    const ModularData& data = *doc.modular;
    HypothesisFlags assume = parse_assumptions(opt.assume_csv);
    assume.spherical = assume.spherical || doc.flags.spherical;
    assume.pseudo_unitary = assume.pseudo_unitary || doc.flags.pseudo_unitary;
    assume.braided = assume.braided || doc.flags.braided;
    assume.ribbon = assume.ribbon || doc.flags.ribbon;
    assume.unitary = assume.unitary || doc.flags.unitary;
    assume.modular = assume.modular || doc.flags.modular;

    ReportDocument report;
    report.command = "modular";
    report.input_digest = document_digest(doc);
    report.precision = working_precision();

    TheoremReport chars;
    chars.tag = "s-characters";
    chars.statement =
        "the scaled S-matrix columns are exactly the characters of the ring";
    std::optional<ModularCharacters> mc;
    try {
        mc = characters_from_s(data, doc.ring);
        chars.status = TheoremCheck::Status::Pass;
        for (std::size_t r = 0; r < doc.ring.rank; ++r) {
            chars.quantities.emplace_back(
                "row " + std::to_string(r),
                doc.ring.label(mc->row_object[r]));
        }
    } catch (const IndeterminateError& e) {
        chars.status = TheoremCheck::Status::Indeterminate;
        chars.detail = e.what();
    } catch (const Error& e) {
        chars.status = TheoremCheck::Status::Fail;
        chars.detail = e.what();
    }
    add_entry(report, doc.name, chars);

    TheoremReport cls;
    cls.tag = "class-dims";
    cls.statement =
        "squared object dimensions equal dim C over the column codegrees";
    try {
        std::vector<Scalar> dims = class_dims_modular(data);
        cls.status = TheoremCheck::Status::Pass;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            cls.quantities.emplace_back("dim(C^" + doc.ring.label(i) + ")",
                                        render_scalar(dims[i]));
        }
    } catch (const IndeterminateError& e) {
        cls.status = TheoremCheck::Status::Indeterminate;
        cls.detail = e.what();
    } catch (const Error& e) {
        cls.status = TheoremCheck::Status::Fail;
        cls.detail = e.what();
    }
    add_entry(report, doc.name, cls);

    TheoremReport ver;
    ver.tag = "verlinde";
    ver.statement = "the fusion multiplicities are recovered from the S-matrix";
    try {
        VerlindeReport v = verlinde_cross_check(data, doc.ring);
        ver.status = v.consistent ? TheoremCheck::Status::Pass
                                  : TheoremCheck::Status::Fail;
        for (const VerlindeMismatch& m : v.mismatches) {
            ver.quantities.emplace_back(
                "N(" + std::to_string(m.i) + ", " + std::to_string(m.j) +
                    ", " + std::to_string(m.k) + ")",
                "expected " + std::to_string(m.expected) + ", reconstructed " +
                    render_scalar(m.reconstructed));
        }
        if (!v.consistent) {
            ver.detail = std::to_string(v.mismatches.size()) +
                         " multiplicity mismatch(es)";
        }
    } catch (const IndeterminateError& e) {
        ver.status = TheoremCheck::Status::Indeterminate;
        ver.detail = e.what();
    }
    add_entry(report, doc.name, ver);

    if (mc) {
        std::vector<std::size_t> objects;
        if (!opt.generator.empty()) {
            objects.push_back(label_index(doc.ring, opt.generator));
        } else {
            for (std::size_t x = 0; x < doc.ring.rank; ++x) objects.push_back(x);
        }
        for (std::size_t x : objects) {
            try {
                add_entry(report, doc.name, theorem_1_2(data, doc.ring, x, assume));
            } catch (const IndeterminateError& e) {
                TheoremReport aborted;
                aborted.tag = "1.2";
                aborted.statement = "claim evaluation aborted";
                aborted.status = TheoremCheck::Status::Indeterminate;
                aborted.detail = e.what();
                aborted.quantities.emplace_back("X", doc.ring.label(x));
                add_entry(report, doc.name, aborted);
            }
        }
    }

    emit_report(opt, report);
    return report_exit_code(report);
}

// --- corpus -----------------------------------------------------------------

int cmd_corpus(const Options& opt) {
    std::filesystem::path dir = FUSIONLAB_DATA_DIR;
    if (!std::filesystem::is_directory(dir)) {
        throw Error("bundled ring directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw Error("no ring documents in " + dir.string());
    }

    std::vector<RingDocument> docs;
    docs.reserve(files.size());
    for (const auto& path : files) {
        docs.push_back(load_ring_document(path.string()));
    }
    std::sort(docs.begin(), docs.end(),
              [](const RingDocument& a, const RingDocument& b) {
                  return a.name < b.name;
              });

    std::string combined;
    for (const RingDocument& d : docs) {
        combined += ring_document_json(d).dump();
        combined += '\n';
    }

    ReportDocument report;
    report.command = "corpus";
    report.input_digest = digest_hex(combined);
    report.precision = working_precision();
    for (const RingDocument& d : docs) {
        Options per = opt;
        per.generator.clear();  // corpus always sweeps every simple object
        run_checks(report, d, check_options(d, per));
    }
    emit_report(opt, report);
    return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env = std::getenv("FUSIONLAB_PRECISION")) {
        char* end = nullptr;
        unsigned long bits = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && bits >= 64 && bits <= 1u << 20) {
            opt.precision = static_cast<unsigned>(bits);
        }
    }

    CLI::App app{"verification tool for the character theory of commutative fusion rings"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&](CLI::App* sub, bool wants_file) {
        if (wants_file) {
            sub->add_option("file", opt.file, "ring document (JSON)")->required();
        }
        sub->add_option("--precision", opt.precision,
                        "working interval precision in bits");
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", opt.out, "write the report to this file");
        return sub;
    };

    CLI::App* validate = add_common(app.add_subcommand(
        "validate", "check the fusion ring axioms and expected values"), true);
    (void)validate;
    CLI::App* chartable = add_common(app.add_subcommand(
        "chartable", "print the character table and verify orthogonality"), true);
    (void)chartable;
    CLI::App* dual = add_common(app.add_subcommand(
        "dual", "dual hypergroup, group-likes, and star orbits"), true);
    dual->add_option("--generator", opt.generator,
                     "designated simple object for orbit vanishing");
    CLI::App* subcat = add_common(app.add_subcommand(
        "subcat", "fusion subring lattice checks"), true);
    subcat->add_option("--generator", opt.generator,
                       "simple object generating the subring");
    subcat->add_option("--subring", opt.subring_csv,
                       "comma-separated simple object labels");
    CLI::App* classes = add_common(app.add_subcommand(
        "classes", "character classes modulo a fusion subring"), true);
    classes->add_option("--generator", opt.generator,
                        "simple object generating the subring");
    classes->add_option("--subring", opt.subring_csv,
                        "comma-separated simple object labels");
    CLI::App* isaacs = add_common(app.add_subcommand(
        "isaacs", "s-Isaacs integrality sweep"), true);
    isaacs->add_option("--s", opt.s_text, "rational exponent p/q");
    isaacs->add_option("--generator", opt.generator,
                       "restrict the sweep to the subring it generates");
    CLI::App* check = add_common(app.add_subcommand(
        "check", "run the divisibility claims"), true);
    check->add_option("--s", opt.s_text, "rational exponent p/q");
    check->add_option("--generator", opt.generator,
                      "restrict per-object claims to this simple object");
    check->add_option("--theorem", opt.theorem, "claim id or 'all'");
    check->add_option("--assume", opt.assume_csv,
                      "comma-separated hypothesis flags to assume");
    CLI::App* modular = add_common(app.add_subcommand(
        "modular", "S-matrix checks and the modular divisibility claim"), true);
    modular->add_option("--generator", opt.generator,
                        "restrict the divisibility claim to this simple object");
    modular->add_option("--assume", opt.assume_csv,
                        "comma-separated hypothesis flags to assume");
    CLI::App* corpus = add_common(app.add_subcommand(
        "corpus", "run every claim over the bundled rings"), false);
    corpus->add_option("--s", opt.s_text, "rational exponent p/q");
    corpus->add_option("--theorem", opt.theorem, "claim id or 'all'");
    corpus->add_option("--assume", opt.assume_csv,
                       "comma-separated hypothesis flags to assume");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        set_working_precision(opt.precision);
        if (app.got_subcommand("validate")) return cmd_validate(opt);
        if (app.got_subcommand("chartable")) return cmd_chartable(opt);
        if (app.got_subcommand("dual")) return cmd_dual(opt);
        if (app.got_subcommand("subcat")) return cmd_subcat(opt);
        if (app.got_subcommand("classes")) return cmd_classes(opt);
        if (app.got_subcommand("isaacs")) return cmd_isaacs(opt);
        if (app.got_subcommand("check")) return cmd_check(opt);
        if (app.got_subcommand("modular")) return cmd_modular(opt);
        if (app.got_subcommand("corpus")) return cmd_corpus(opt);
        std::cerr << "fusionlab: no command selected\n";
        return 3;
    } catch (const IndeterminateError& e) {
        std::cerr << "fusionlab: indeterminate: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "fusionlab: error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "fusionlab: internal error: " << e.what() << "\n";
        return 3;
    }
}
