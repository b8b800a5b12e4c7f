#pragma once

#include <map>
#include <string>
#include <utility>

#include "toyqm/prob.hpp"
#include "toyqm/projective.hpp"

namespace toyqm {

/// A two-outcome single-system observable.  Each outcome is read off with
/// a fixed bra: X uses <c|/<d|, Y uses <e|/<f|, Z uses <a|/<b| for the
/// +1/-1 outcomes respectively.
class Observable {
public:
    static Observable X() { return Observable('X', 'c', 'd'); }
    static Observable Y() { return Observable('Y', 'e', 'f'); }
    static Observable Z() { return Observable('Z', 'a', 'b'); }
    static std::array<Observable, 3> all() { return {X(), Y(), Z()}; }
    static Observable by_name(char name);

    char name() const { return name_; }
    char outcome_state(Outcome o) const { return o == Outcome::plus ? plus_ : minus_; }
    const Bra& bra(Outcome o) const { return basis::bra(outcome_state(o)); }

    bool operator==(const Observable&) const = default;

private:
    Observable(char name, char plus, char minus)
        : name_(name), plus_(plus), minus_(minus) {}

    char name_;
    char plus_;
    char minus_;
};

/// The state a measurement leaves behind for a given outcome.
ProjectiveState eigenket(const Observable& o, Outcome out);

/// Single-system outcome probabilities:
///   P(o) = |<bra_o|psi>| / (|<bra_+|psi>| + |<bra_-|psi>|)
/// where |.| is 0 on the zero scalar and 1 otherwise.  Values are always
/// 0, 1/2 or 1.
OutcomeDistribution measure_prob(const Observable& o, const ProjectiveState& s);

/// Projective class of u + coeff*v, computed on the canonical
/// representatives.  The coefficient must be nonzero; the sum vanishes
/// exactly when u = v and the coefficient is -1.
ProjectiveState superpose(const ProjectiveState& u, F5 coeff, const ProjectiveState& v);

/// Joint outcome probabilities for simultaneous single-system
/// measurements on a two-system state, via product bras:
///   P(s,t) = |<x_s (x) y_t|psi>| / sum over all four outcome pairs.
std::map<std::pair<Outcome, Outcome>, Rational>
joint_prob(const Observable& on_first, const Observable& on_second,
           const ProjectiveState& s);

/// Single-system residual of a two-system vector after applying a bra on
/// one side: contracting subsystem 1 with x gives r_j = sum_i x_i v[2i+j],
/// contracting subsystem 2 with y gives r_i = sum_j y_j v[2i+j].
Ket residual(const Ket& v, int subsystem, const Bra& b);

struct Collapse {
    Rational probability;
    ProjectiveState post;
    bool operator==(const Collapse&) const = default;
};

/// Measures one side of a two-system state.  The outcome probability
/// counts which of the two residuals are nonzero; the post state is the
/// outcome's eigenket on the measured side tensored with the residual on
/// the other.  A zero residual means the outcome cannot occur.
Collapse subsystem_collapse(const ProjectiveState& s, int subsystem,
                            const Observable& o, Outcome out);

/// One measurement configuration on a pair: which side, which observable,
/// which outcome.
struct Setting {
    int subsystem;
    char observable;
    Outcome outcome;

    auto operator<=>(const Setting&) const = default;
    std::string key() const {
        return "sys" + std::to_string(subsystem) + "." +
               std::string(1, observable) + "." + outcome_label(outcome);
    }
};

/// All possible collapses of a two-system state, keyed by setting.
/// Impossible outcomes are omitted.
struct CollapseProfile {
    std::map<Setting, Collapse> entries;
    bool operator==(const CollapseProfile&) const = default;
};

CollapseProfile collapse_profile(const ProjectiveState& s);

} // namespace toyqm
