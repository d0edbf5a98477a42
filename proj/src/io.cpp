#include "fusionlab/io.hpp"

#include <fstream>
#include <sstream>

namespace fusionlab {

namespace {

[[noreturn]] void schema_error(const std::string& pointer,
                               const std::string& message) {
    throw Error(pointer + ": " + message);
}

void require_object(const Json& j, const std::string& pointer) {
    if (!j.is_object()) {
        schema_error(pointer.empty() ? "/" : pointer, "expected an object");
    }
}

const Json& require_field(const Json& j, const std::string& pointer,
                          const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        schema_error(pointer + "/" + key, "missing required field");
    }
    return *it;
}

std::string require_string(const Json& j, const std::string& pointer) {
    if (!j.is_string()) {
        schema_error(pointer, "expected a string");
    }
    return j.get<std::string>();
}

std::size_t require_index(const Json& j, const std::string& pointer,
                          std::size_t bound, const char* what) {
    if (!j.is_number_integer()) {
        schema_error(pointer, std::string("expected an integer ") + what);
    }
    long long v = j.get<long long>();
    if (v < 0) {
        schema_error(pointer, std::string("negative ") + what);
    }
    if (static_cast<std::size_t>(v) >= bound) {
        schema_error(pointer, std::string(what) + " " + std::to_string(v) +
                                  " out of range (rank " +
                                  std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(v);
}

const Json& require_array(const Json& j, const std::string& pointer,
                          std::size_t size, const char* what) {
    if (!j.is_array()) {
        schema_error(pointer, std::string("expected an array of ") + what);
    }
    if (j.size() != size) {
        schema_error(pointer, "expected " + std::to_string(size) + " " + what +
                                  ", found " + std::to_string(j.size()));
    }
    return j;
}

std::string axiom_failure_message(const std::string& name,
                                  const std::vector<AxiomViolation>& v) {
    std::ostringstream os;
    os << "ring '" << name << "' fails validation:";
    for (const AxiomViolation& a : v) {
        os << " [" << a.axiom << " at (";
        for (std::size_t i = 0; i < a.indices.size(); ++i) {
            if (i) os << ", ";
            os << a.indices[i];
        }
        os << ")";
        if (!a.detail.empty()) {
            os << ": " << a.detail;
        }
        os << "]";
    }
    return os.str();
}

} // namespace

bool set_hypothesis_flag(HypothesisFlags& flags, const std::string& name) {
    if (name == "spherical") {
        flags.spherical = true;
    } else if (name == "pseudo-unitary") {
        flags.pseudo_unitary = true;
    } else if (name == "braided") {
        flags.braided = true;
    } else if (name == "ribbon") {
        flags.ribbon = true;
    } else if (name == "unitary") {
        flags.unitary = true;
    } else if (name == "modular") {
        flags.modular = true;
    } else {
        return false;
    }
    return true;
}

RingDocument parse_ring_document(const Json& j) {
    require_object(j, "");
    static const char* known[] = {"name",    "labels", "dual",
                                  "fusion",  "smatrix", "flags",
                                  "expected"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) {
            if (it.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            schema_error("/" + it.key(), "unknown field");
        }
    }

    RingDocument doc;
    doc.name = require_string(require_field(j, "", "name"), "/name");
    if (doc.name.empty()) {
        schema_error("/name", "must not be empty");
    }

    const Json& labels = require_field(j, "", "labels");
    if (!labels.is_array() || labels.empty()) {
        schema_error("/labels", "expected a nonempty array of strings");
    }
    const std::size_t rank = labels.size();
    doc.ring = FusionRing::zeros(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        std::string pointer = "/labels/" + std::to_string(i);
        std::string label = require_string(labels[i], pointer);
        if (label.empty()) {
            schema_error(pointer, "must not be empty");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (doc.ring.labels[k] == label) {
                schema_error(pointer, "duplicate label '" + label + "'");
            }
        }
        doc.ring.labels[i] = std::move(label);
    }

    const Json& dual =
        require_array(require_field(j, "", "dual"), "/dual", rank, "indices");
    for (std::size_t i = 0; i < rank; ++i) {
        doc.ring.dual[i] = require_index(dual[i], "/dual/" + std::to_string(i),
                                         rank, "index");
    }

    const Json& fusion = require_array(require_field(j, "", "fusion"),
                                       "/fusion", rank, "rows");
    for (std::size_t i = 0; i < rank; ++i) {
        std::string pi = "/fusion/" + std::to_string(i);
        const Json& row = require_array(fusion[i], pi, rank, "rows");
        for (std::size_t k2 = 0; k2 < rank; ++k2) {
            std::string pij = pi + "/" + std::to_string(k2);
            const Json& cell = require_array(row[k2], pij, rank, "entries");
            for (std::size_t k = 0; k < rank; ++k) {
                std::string pijk = pij + "/" + std::to_string(k);
                const Json& v = cell[k];
                if (!v.is_number_integer()) {
                    schema_error(pijk, "expected an integer multiplicity");
                }
                long long m = v.get<long long>();
                if (m < 0) {
                    schema_error(pijk, "negative multiplicity");
                }
                if (m > static_cast<long long>(kMultiplicityCap)) {
                    schema_error(pijk, "multiplicity exceeds the cap " +
                                           std::to_string(kMultiplicityCap));
                }
                doc.ring.set_n(i, k2, k, static_cast<unsigned>(m));
            }
        }
    }

    std::vector<AxiomViolation> violations = validate(doc.ring);
    if (!violations.empty()) {
        throw Error(axiom_failure_message(doc.name, violations));
    }

    if (auto it = j.find("flags"); it != j.end()) {
        if (!it->is_array()) {
            schema_error("/flags", "expected an array of flag names");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string pointer = "/flags/" + std::to_string(i);
            std::string name = require_string((*it)[i], pointer);
            if (!set_hypothesis_flag(doc.flags, name)) {
                schema_error(pointer, "unknown hypothesis flag '" + name + "'");
            }
        }
    }

    if (auto it = j.find("smatrix"); it != j.end()) {
        const Json& sm = require_array(*it, "/smatrix", rank, "rows");
        std::vector<std::vector<Scalar>> cells(rank);
        doc.smatrix_text.assign(rank, {});
        for (std::size_t i = 0; i < rank; ++i) {
            std::string pi = "/smatrix/" + std::to_string(i);
            const Json& row = require_array(sm[i], pi, rank, "entries");
            for (std::size_t k = 0; k < rank; ++k) {
                std::string pik = pi + "/" + std::to_string(k);
                std::string text = require_string(row[k], pik);
                Scalar value;
                try {
                    value = parse_scalar(text);
                } catch (const Error& e) {
                    schema_error(pik, std::string("bad scalar expression: ") +
                                          e.what());
                }
                doc.smatrix_text[i].push_back(
                    value.is_exact() ? render_scalar(value) : text);
                cells[i].push_back(std::move(value));
            }
        }
        doc.modular = modular_data(std::move(cells));
    }

    if (auto it = j.find("expected"); it != j.end()) {
        if (!it->is_object()) {
            schema_error("/expected", "expected an object");
        }
        doc.expected = *it;
    }

    return doc;
}

RingDocument load_ring_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
    try {
        return parse_ring_document(j);
    } catch (const IndeterminateError&) {
        throw;
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

Json ring_document_json(const RingDocument& doc) {
    Json j = Json::object();
    j["name"] = doc.name;
    j["labels"] = doc.ring.labels;
    j["dual"] = doc.ring.dual;
    Json fusion = Json::array();
    for (std::size_t i = 0; i < doc.ring.rank; ++i) {
        Json row = Json::array();
        for (std::size_t k2 = 0; k2 < doc.ring.rank; ++k2) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < doc.ring.rank; ++k) {
                cell.push_back(doc.ring.n(i, k2, k));
            }
            row.push_back(std::move(cell));
        }
        fusion.push_back(std::move(row));
    }
    j["fusion"] = std::move(fusion);
    if (doc.modular) {
        j["smatrix"] = doc.smatrix_text;
    }
    std::vector<std::string> names = hypothesis_names(doc.flags);
    if (!names.empty()) {
        j["flags"] = names;
    }
    if (doc.expected.is_object()) {
        j["expected"] = doc.expected;
    }
    return j;
}

} // namespace fusionlab
