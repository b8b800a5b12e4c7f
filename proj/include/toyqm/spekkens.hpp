#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toyqm/prob.hpp"

namespace toyqm::spekkens {

using Rng = std::mt19937_64;

/// A state of maximal allowed knowledge about one system: the real
/// configuration is one of two ontic states (numbered 1..4), and nothing
/// more is known.
class EpistemicState {
public:
    EpistemicState(int a, int b);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::array<int, 2> support() const { return {lo_, hi_}; }

    bool contains(int ontic) const { return ontic == lo_ || ontic == hi_; }
    bool disjoint_with(const EpistemicState& o) const {
        return !o.contains(lo_) && !o.contains(hi_);
    }

    auto operator<=>(const EpistemicState&) const = default;

    std::string to_string() const;

    /// Parses "1v2"; order of the two digits does not matter.
    static EpistemicState parse(std::string_view text);

private:
    int lo_;
    int hi_;
};

/// The six epistemic states, ordered 1v2, 3v4, 1v3, 2v4, 2v3, 1v4.
const std::vector<EpistemicState>& epistemic_states();

/// A two-outcome question that splits the four ontic states into two
/// pairs:  X = (1,3 | 2,4),  Y = (2,3 | 1,4),  Z = (1,2 | 3,4),
/// with the first pair answering +1.
class Observable {
public:
    Observable(EpistemicState plus, EpistemicState minus);

    static Observable X() { return {{1, 3}, {2, 4}}; }
    static Observable Y() { return {{2, 3}, {1, 4}}; }
    static Observable Z() { return {{1, 2}, {3, 4}}; }
    static std::array<Observable, 3> all() { return {X(), Y(), Z()}; }
    static Observable by_name(char name);

    const EpistemicState& eigenstate(Outcome o) const {
        return o == Outcome::plus ? plus_ : minus_;
    }

    /// Which of the three two-pair partitions this is, as a letter;
    /// insensitive to which block answers +1.
    char partition_name() const;

    bool operator==(const Observable&) const = default;

private:
    EpistemicState plus_;
    EpistemicState minus_;
};

/// Outcome statistics an agent in the given epistemic state predicts:
/// the fraction of the state's support lying in each block.
OutcomeDistribution measure_epistemic(const Observable& o, const EpistemicState& e);

/// The outcome the ontic state actually produces.
Outcome ontic_outcome(const Observable& o, int ontic);

/// Measurement disturbance: the ontic state is resampled uniformly over
/// the observed outcome's block.
int ontic_update(const Observable& o, Outcome out, Rng& rng);

/// What the agent knows right after seeing an outcome: the outcome's
/// eigenstate, whatever was known before.
EpistemicState collapse_epistemic(const Observable& o, Outcome out);

struct StepStats {
    char observable;
    std::int64_t plus_count = 0;
    std::int64_t minus_count = 0;
    std::int64_t same_as_previous = 0; // outcome equal to preceding step's
    Rational exact_p_plus;             // Markov prediction for this step
};

struct SequenceReport {
    EpistemicState initial;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<StepStats> steps;
    std::int64_t containment_checks = 0;
    bool knowledge_balance = true; // ontic stayed inside tracked epistemic state
};

/// Samples `trials` runs of a measurement sequence, starting from an
/// ontic state drawn uniformly from `initial`.  Alongside the sampled
/// ontic state the agent's epistemic state is tracked, and every step
/// checks that the former lies in the latter's support.  Exact per-step
/// outcome probabilities are computed by evolving the ontic distribution.
SequenceReport simulate_sequence(const EpistemicState& initial,
                                 std::span<const Observable> sequence,
                                 std::int64_t trials, std::uint64_t seed);

/// A permutation of the four ontic states.
class Perm4 {
public:
    static Perm4 identity() { return Perm4({1, 2, 3, 4}); }
    static Perm4 from_images(std::array<int, 4> images);

    /// Parses "2134" or "perm:2134" (image of 1, image of 2, ...).
    static Perm4 parse(std::string_view text);

    /// All 24 permutations in lexicographic order of their image tuples.
    static const std::vector<Perm4>& all();

    int apply(int ontic) const { return images_[ontic - 1]; }
    EpistemicState image(const EpistemicState& e) const {
        return {apply(e.lo()), apply(e.hi())};
    }

    Perm4 inverse() const;
    friend Perm4 operator*(const Perm4& p, const Perm4& q); // (p*q)(x) = p(q(x))

    bool is_even() const;

    auto operator<=>(const Perm4&) const = default;

    std::string to_string() const;

private:
    explicit Perm4(std::array<int, 4> images) : images_(images) {}

    std::array<int, 4> images_;
};

struct ProductPair {
    EpistemicState first;
    EpistemicState second;

    auto operator<=>(const ProductPair&) const = default;
    std::string to_string() const { return first.to_string() + "|" + second.to_string(); }
};

/// A two-system epistemic state of maximal knowledge: either independent
/// single-system states, or perfect correlation through a permutation
/// (system 2's ontic state is sigma of system 1's).
class PairState {
public:
    static PairState product(EpistemicState first, EpistemicState second) {
        return PairState(ProductPair{first, second});
    }
    static PairState entangled(Perm4 sigma) { return PairState(sigma); }

    bool is_product() const { return std::holds_alternative<ProductPair>(v_); }
    bool is_entangled() const { return !is_product(); }
    const ProductPair& product_parts() const { return std::get<ProductPair>(v_); }
    const Perm4& perm() const { return std::get<Perm4>(v_); }

    /// The four ontic cells (system1, system2) compatible with the state.
    std::vector<std::pair<int, int>> ontic_support() const;

    bool operator==(const PairState&) const = default;

    std::string to_string() const;

    /// Parses "1v2|1v3" or "perm:2134".
    static PairState parse(std::string_view text);

private:
    explicit PairState(std::variant<ProductPair, Perm4> v) : v_(std::move(v)) {}

    std::variant<ProductPair, Perm4> v_;
};

struct PairCensus {
    std::vector<PairState> products;  // 36, epistemic_states() order, first factor major
    std::vector<PairState> entangled; // 24, Perm4::all() order
};

PairCensus pair_states();

struct PairMeasurement {
    Outcome outcome;
    Rational probability;
    ProductPair post;
};

/// Measures one side of a pair state with a single-system observable.
/// Outcomes with probability zero are omitted.  Measuring an entangled
/// state gives each outcome probability 1/2 and leaves the measured side
/// in the outcome's eigenstate S, the other side in sigma(S) (system 1
/// measured) or sigma^-1(S) (system 2 measured).
std::vector<PairMeasurement> measure_pair(const PairState& state, int subsystem,
                                          const Observable& o);

/// Coherent combination of two disjoint epistemic states.  Writing the
/// operands as a v b (a<b) and c v d (c<d), the four variants give
/// a v c, b v d, b v c, a v d.
EpistemicState sum_disjoint(const EpistemicState& e1, const EpistemicState& e2,
                            int variant);

EpistemicState relabel(const Perm4& p, const EpistemicState& e);
Observable relabel(const Perm4& p, const Observable& o);

/// Products relabel factor-wise; a correlation sigma becomes the
/// conjugate p o sigma o p^-1.
PairState relabel(const Perm4& p, const PairState& s);

} // namespace toyqm::spekkens
