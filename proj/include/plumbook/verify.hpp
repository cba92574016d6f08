#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "mcg.hpp"
#include "open_book.hpp"
#include "plumbing_tree.hpp"
#include "rollup.hpp"
#include "snf.hpp"

namespace plumbook {

struct Pipeline {
    PlumbingTree tree;
    GenusResult genus;
    Decomposition decomposition;  // the one actually used
    RolledUpDiagram diagram;
    AbstractOpenBook book;
    BuildRecord record;
};

/// parse → genus → rollup → open book. `stages` overrides the witness.
inline Pipeline run_pipeline(const PlumbingTree& t, bool greedy = false,
                             std::optional<std::vector<LinearSubtree>> stages = std::nullopt) {
    Pipeline p{t, greedy ? greedy_genus(t) : genus(t), {}, {}, {}, {}};
    p.decomposition = stages ? make_decomposition(t, *stages) : p.genus.witness;
    p.diagram = assemble_diagram(t, p.decomposition);
    p.book = build_open_book(t, p.decomposition, p.diagram, &p.record);
    return p;
}

struct CongruenceCheck {
    bool identity = false;  // linking = Eᵀ A E
    Integer det_e;
    [[nodiscard]] bool ok() const { return identity && (det_e == 1 || det_e == -1); }
};

inline CongruenceCheck check_congruence(const PlumbingTree& t, const RolledUpDiagram& d) {
    IntMatrix A = t.intersection_matrix();
    return {d.slide_log.transpose() * A * d.slide_log == d.linking_matrix, determinant(d.slide_log)};
}

struct Certificate {
    AbelianGroup plumbing;
    AbelianGroup linking;
    AbelianGroup open_book;
    CongruenceCheck congruence;
    PageCensus census;
    std::size_t genus = 0;              // of the tree
    std::size_t stages = 0;             // in the decomposition used
    std::size_t bad_stages = 0;
    bool positive = true;               // every monodromy letter right-handed
    bool curve_classes = true;          // handle words sum to the recorded classes

    [[nodiscard]] bool h1_agree() const { return plumbing == linking && linking == open_book; }
    [[nodiscard]] bool genus_law() const { return census.genus == bad_stages; }
    [[nodiscard]] bool ok() const { return h1_agree() && congruence.ok() && genus_law() && positive && curve_classes; }
};

inline Certificate certify(const Pipeline& p) {
    Certificate c;
    c.plumbing = cokernel(p.tree.intersection_matrix());
    c.linking = cokernel(p.diagram.linking_matrix);
    c.open_book = variation_h1(p.book).cokernel();
    c.congruence = check_congruence(p.tree, p.diagram);
    c.census = page_census(p.book);
    c.genus = p.genus.genus;
    c.stages = p.decomposition.stages.size();
    for (const auto& s : p.decomposition.stages)
        for (std::size_t v : s.path)
            if (p.tree.is_bad(v)) {
                ++c.bad_stages;
                break;
            }
    for (const auto& l : p.book.monodromy) c.positive = c.positive && l.sign == 1;
    for (const auto& cv : p.book.curves) {
        ClassVector sum(p.book.dim(), 0);
        for (auto [b, s] : cv.handle_word) sum.at(b) += s;
        c.curve_classes = c.curve_classes && sum == p.book.class_of(cv.name);
    }
    return c;
}

}  // namespace plumbook
