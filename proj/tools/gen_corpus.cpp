// Regenerates the bundled ring documents under data/ from the canonical
// in-code constructions shared with the test suite. Deterministic: the same
// sources always produce byte-identical files.

#include "fusionlab/io.hpp"
#include "fusionlab/report.hpp"

#include <fixtures.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

namespace {

using namespace fusionlab;
using fixtures::SMatrix;

HypothesisFlags standard_flags(bool modular) {
    HypothesisFlags f;
    f.spherical = true;
    f.pseudo_unitary = true;
    f.unitary = true;
    f.braided = true;
    f.ribbon = true;
    f.modular = modular;
    return f;
}

RingDocument make_document(std::string name, FusionRing ring,
                           const SMatrix* smatrix) {
    RingDocument doc;
    doc.name = std::move(name);
    doc.ring = std::move(ring);
    doc.flags = standard_flags(smatrix != nullptr);
    if (smatrix) {
        doc.smatrix_text.resize(smatrix->size());
        for (std::size_t i = 0; i < smatrix->size(); ++i) {
            doc.smatrix_text[i].resize((*smatrix)[i].size());
            for (std::size_t j = 0; j < (*smatrix)[i].size(); ++j) {
                doc.smatrix_text[i][j] = render_scalar((*smatrix)[i][j]);
            }
        }
        doc.modular = modular_data(*smatrix);
    }

    FPDimData fp = fp_dims(doc.ring);
    CharacterTable table = character_table(doc.ring);
    GroupLikeData gl = group_likes(table, dual_constants(table));
    doc.expected = Json{{"rank", doc.ring.rank},
                        {"fpdim_total", render_scalar(fp.total)},
                        {"group_like_order", gl.order()}};
    return doc;
}

} // namespace

int main() {
    try {
        std::filesystem::path dir = FUSIONLAB_DATA_DIR;
        std::filesystem::create_directories(dir);

        SMatrix fib_s = fixtures::fibonacci_smatrix();
        SMatrix ising_s = fixtures::ising_smatrix();
        SMatrix toric_s = fixtures::toric_smatrix();

        std::vector<RingDocument> docs;
        for (std::size_t n = 1; n <= 6; ++n) {
            docs.push_back(make_document("z" + std::to_string(n),
                                         fixtures::pointed_cyclic(n), nullptr));
        }
        docs.push_back(make_document("rep_s3", fixtures::rep_s3(), nullptr));
        docs.push_back(make_document("rep_d4", fixtures::rep_d4(), nullptr));
        docs.push_back(make_document("rep_q8", fixtures::rep_q8(), nullptr));
        docs.push_back(make_document("rep_a4", fixtures::rep_a4(), nullptr));
        docs.push_back(make_document("fibonacci", fixtures::fibonacci(), &fib_s));
        docs.push_back(make_document("ising", fixtures::ising(), &ising_s));
        docs.push_back(
            make_document("toric_code", fixtures::toric_code(), &toric_s));
        docs.push_back(
            make_document("ising_x_z2", fixtures::ising_x_z2(), nullptr));

        for (const RingDocument& doc : docs) {
            std::filesystem::path path = dir / (doc.name + ".json");
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << path << "\n";
                return 1;
            }
            out << ring_document_json(doc).dump(2) << "\n";
            std::cout << path.string() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "gen_corpus: " << e.what() << "\n";
        return 1;
    }
}
