#include "toyqm/correspondence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toyqm::correspondence {

using spekkens::EpistemicState;
using spekkens::PairState;
using spekkens::Perm4;
using spekkens::ProductPair;

char letter_of(const EpistemicState& e) {
    const auto& order = spekkens::epistemic_states();
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == e) return char('a' + i);
    throw std::logic_error("unreachable: all epistemic states are listed");
}

const Ket& ket_of(const EpistemicState& e) { return basis::ket(letter_of(e)); }

ProjectiveState state_of(const EpistemicState& e) {
    return ProjectiveState(ket_of(e));
}

EpistemicState epistemic_of(const ProjectiveState& s) {
    return spekkens::epistemic_states()[basis::name_of(s) - 'a'];
}

Ket ket_of(const ProductPair& p) {
    return tensor(ket_of(p.first), ket_of(p.second));
}

ProjectiveState state_of(const ProductPair& p) {
    return ProjectiveState(ket_of(p));
}

ProductPair epistemic_pair_of(const ProjectiveState& s) {
    auto factors = factor_product(s);
    if (!factors)
        throw std::domain_error("no product-state image");
    return {epistemic_of(factors->first), epistemic_of(factors->second)};
}

F5 variant_coefficient(int variant) {
    switch (variant) {
        case 1: return F5(1);
        case 2: return F5(-1);
        case 3: return F5(2);
        case 4: return F5(-2);
        default: throw std::invalid_argument("variant must be in 1..4");
    }
}

EpistemicState extended_sum(const EpistemicState& e1, int variant,
                            const EpistemicState& e2) {
    return epistemic_of(
        superpose(state_of(e1), variant_coefficient(variant), state_of(e2)));
}

std::vector<SumComparisonRow> compare_sum_definitions() {
    static const std::array<std::pair<EpistemicState, EpistemicState>, 6> pairs = {{
        {{1, 2}, {3, 4}}, {{3, 4}, {1, 2}},
        {{1, 3}, {2, 4}}, {{2, 4}, {1, 3}},
        {{2, 3}, {1, 4}}, {{1, 4}, {2, 3}},
    }};
    std::vector<SumComparisonRow> rows;
    for (const auto& [lhs, rhs] : pairs)
        for (int variant = 1; variant <= 4; ++variant) {
            EpistemicState d = spekkens::sum_disjoint(lhs, rhs, variant);
            EpistemicState i = extended_sum(lhs, variant, rhs);
            rows.push_back({lhs, rhs, variant, d, i, d == i});
        }
    return rows;
}

namespace {

std::string pad(const std::string& s, size_t width) {
    std::string out = s;
    while (out.size() < width) out += ' ';
    return out;
}

} // namespace

std::string render_compare_sums(const std::vector<SumComparisonRow>& rows) {
    std::string out;
    out += pad("lhs", 6) + pad("rhs", 6) + pad("variant", 9) +
           pad("disjoint", 10) + pad("induced", 9) + "status\n";
    int agreements = 0;
    for (const auto& r : rows) {
        out += pad(r.lhs.to_string(), 6) + pad(r.rhs.to_string(), 6) +
               pad(std::to_string(r.variant), 9) +
               pad(r.disjoint_sum.to_string(), 10) +
               pad(r.induced_sum.to_string(), 9) +
               (r.agree ? "agree" : "DIFFER") + "\n";
        if (r.agree) ++agreements;
    }
    out += "agreements: " + std::to_string(agreements) + " of " +
           std::to_string(rows.size()) + "\n";
    return out;
}

CollapseProfile spekkens_profile(const Perm4& perm) {
    CollapseProfile profile;
    PairState state = PairState::entangled(perm);
    for (int sub : {1, 2})
        for (char name : {'X', 'Y', 'Z'}) {
            auto results = measure_pair(state, sub, spekkens::Observable::by_name(name));
            for (const auto& r : results)
                profile.entries.emplace(Setting{sub, name, r.outcome},
                                        Collapse{r.probability, state_of(r.post)});
        }
    return profile;
}

namespace {

const std::vector<std::pair<ProjectiveState, CollapseProfile>>& entangled_profiles() {
    static const auto cache = [] {
        std::vector<std::pair<ProjectiveState, CollapseProfile>> out;
        for (const auto& s : enumerate_states(4))
            if (!is_product(s)) out.emplace_back(s, collapse_profile(s));
        return out;
    }();
    return cache;
}

} // namespace

std::vector<ProjectiveState> find_f5_analogs(const Perm4& perm) {
    CollapseProfile target = spekkens_profile(perm);
    std::vector<ProjectiveState> analogs;
    for (const auto& [state, profile] : entangled_profiles())
        if (profile == target) analogs.push_back(state);
    return analogs;
}

std::vector<ProjectiveState> find_f5_analogs(const Perm4& perm,
                                             std::span<const ProjectiveState> candidates) {
    CollapseProfile target = spekkens_profile(perm);
    std::vector<ProjectiveState> analogs;
    for (const auto& state : candidates)
        if (collapse_profile(state) == target) analogs.push_back(state);
    return analogs;
}

ClassificationReport classify_all() {
    ClassificationReport report;
    std::set<ProjectiveState> seen;
    size_t total_analogs = 0;
    for (const Perm4& perm : Perm4::all()) {
        ClassificationRecord rec{perm, false, find_f5_analogs(perm),
                                 spekkens_profile(perm)};
        rec.matched = !rec.analogs.empty();
        if (rec.matched) ++report.matched_count;
        if (rec.matched != !perm.is_even()) report.matched_exactly_odd = false;
        for (const auto& a : rec.analogs) {
            seen.insert(a);
            ++total_analogs;
        }
        report.records.push_back(std::move(rec));
    }
    report.distinct_analog_count = int(seen.size());
    report.analog_lists_disjoint = seen.size() == total_analogs;
    return report;
}

} // namespace toyqm::correspondence
