#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinor/orth_rep.hpp"
#include "spinor/verdict.hpp"

namespace spinor {

/// A named small-group representation with both decision routes attached:
/// the brute-force oracle runs on build(), the closed-form side reads the
/// relevant character values off the built representation.
struct CuratedRep {
    std::string name;
    std::string description;
    std::string group_tag;
    std::string family;
    std::function<OrthRep()> build;
    std::function<Verdict(const OrthRep&)> rule;
};

const std::vector<CuratedRep>& curated_reps();
const CuratedRep* find_curated(const std::string& name);

/// GL_2(F_2) ≅ S_3 from its matrix generators; elements[unipotent_id] is
/// [[1,1],[0,1]].
struct Gl2F2Model {
    GeneratedGroup<FpMat> g;
    unsigned unipotent_id;
};
const Gl2F2Model& gl2f2_model();

/// GL_2(F_3) from matrix generators, with the two decisive involutions
/// located: a1 = diag(-1,1) and -I.
struct Gl2F3Model {
    GeneratedGroup<FpMat> g;
    unsigned a1_id;
    unsigned minus_one_id;
    std::vector<unsigned> borel;  // upper triangular subgroup elements
};
const Gl2F3Model& gl2f3_model();

/// The permutation action of GL_2(F_3) on the 8 nonzero vectors of F_3^2.
OrthRep gl2f3_vector_rep();

/// Closed-form verdicts reading character values off a representation.
Verdict cyclic_rule_verdict(const OrthRep& rep, unsigned n);
Verdict elementary_rule_verdict(const OrthRep& rep, unsigned rank);
Verdict gl2f2_rule_verdict(const OrthRep& rep);
Verdict gl2f3_rule_verdict(const OrthRep& rep);

}  // namespace spinor
