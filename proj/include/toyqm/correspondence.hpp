#pragma once

#include <span>
#include <string>
#include <vector>

#include "toyqm/f5qm.hpp"
#include "toyqm/projective.hpp"
#include "toyqm/spekkens.hpp"

namespace toyqm::correspondence {

/// Dictionary between single-system epistemic states and named kets:
///   1v2 <-> a   3v4 <-> b   1v3 <-> c   2v4 <-> d   2v3 <-> e   1v4 <-> f
char letter_of(const spekkens::EpistemicState& e);
const Ket& ket_of(const spekkens::EpistemicState& e);
ProjectiveState state_of(const spekkens::EpistemicState& e);
spekkens::EpistemicState epistemic_of(const ProjectiveState& s);

/// Pairs map factor-wise through the dictionary.
Ket ket_of(const spekkens::ProductPair& p);
ProjectiveState state_of(const spekkens::ProductPair& p);

/// Inverse of the pair dictionary; only product two-system states have one.
spekkens::ProductPair epistemic_pair_of(const ProjectiveState& s);

/// Coefficient attached to each sum variant: +1, -1, +2, -2.
F5 variant_coefficient(int variant);

/// Sum induced through the dictionary: map both states to kets, form
/// u + coeff(variant)*v, map the result back.  Defined for any two
/// epistemic states, disjoint or not; the only undefined case is equal
/// states with variant 2 (the terms cancel).
spekkens::EpistemicState extended_sum(const spekkens::EpistemicState& e1,
                                      int variant,
                                      const spekkens::EpistemicState& e2);

struct SumComparisonRow {
    spekkens::EpistemicState lhs;
    spekkens::EpistemicState rhs;
    int variant;
    spekkens::EpistemicState disjoint_sum;
    spekkens::EpistemicState induced_sum;
    bool agree;
};

/// Both sum definitions side by side on every ordered pair of disjoint
/// states, four variants each: 24 rows.
std::vector<SumComparisonRow> compare_sum_definitions();

/// Stable text rendering of the comparison (also the golden-file format).
std::string render_compare_sums(const std::vector<SumComparisonRow>& rows);

/// Collapse behaviour of an entangled pair state, translated to the field
/// side: probabilities kept, post pair states mapped through the
/// dictionary.  Keyed like collapse_profile so the two are comparable.
CollapseProfile spekkens_profile(const spekkens::Perm4& perm);

/// All entangled two-system field states whose collapse profile equals
/// the translated profile of the given correlation.
std::vector<ProjectiveState> find_f5_analogs(const spekkens::Perm4& perm);

/// Same search over an explicit candidate list (profiles computed on the
/// fly); the result is independent of candidate order up to reordering.
std::vector<ProjectiveState> find_f5_analogs(const spekkens::Perm4& perm,
                                             std::span<const ProjectiveState> candidates);

struct ClassificationRecord {
    spekkens::Perm4 perm;
    bool matched;
    std::vector<ProjectiveState> analogs;
    CollapseProfile profile;
};

struct ClassificationReport {
    std::vector<ClassificationRecord> records;
    int matched_count = 0;
    int distinct_analog_count = 0;
    bool matched_exactly_odd = true;  // matched set == odd permutations
    bool analog_lists_disjoint = true;
};

/// Runs the analog search for all 24 correlations.
ClassificationReport classify_all();

} // namespace toyqm::correspondence
