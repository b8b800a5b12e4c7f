#include "toyqm/spekkens.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace toyqm::spekkens {

EpistemicState::EpistemicState(int a, int b) {
    if (a < 1 || a > 4 || b < 1 || b > 4 || a == b)
        throw std::invalid_argument("epistemic state needs two distinct ontic states in 1..4");
    lo_ = std::min(a, b);
    hi_ = std::max(a, b);
}

std::string EpistemicState::to_string() const {
    return std::to_string(lo_) + "v" + std::to_string(hi_);
}

EpistemicState EpistemicState::parse(std::string_view text) {
    if (text.size() != 3 || text[1] != 'v' ||
        text[0] < '1' || text[0] > '4' || text[2] < '1' || text[2] > '4')
        throw std::invalid_argument("epistemic state text must look like 1v2");
    return {text[0] - '0', text[2] - '0'};
}

const std::vector<EpistemicState>& epistemic_states() {
    static const std::vector<EpistemicState> states = {
        {1, 2}, {3, 4}, {1, 3}, {2, 4}, {2, 3}, {1, 4}};
    return states;
}

Observable::Observable(EpistemicState plus, EpistemicState minus)
    : plus_(plus), minus_(minus) {
    if (!plus_.disjoint_with(minus_))
        throw std::invalid_argument("observable blocks must partition the ontic states");
}

Observable Observable::by_name(char name) {
    switch (name) {
        case 'X': return X();
        case 'Y': return Y();
        case 'Z': return Z();
        default: throw std::invalid_argument("observable must be X, Y or Z");
    }
}

char Observable::partition_name() const {
    // The partner of ontic state 1 pins down the two-pair partition.
    const EpistemicState& with_one = plus_.contains(1) ? plus_ : minus_;
    int partner = with_one.lo() == 1 ? with_one.hi() : with_one.lo();
    switch (partner) {
        case 3: return 'X';
        case 2: return 'Z';
        default: return 'Y';
    }
}

OutcomeDistribution measure_epistemic(const Observable& o, const EpistemicState& e) {
    const EpistemicState& plus = o.eigenstate(Outcome::plus);
    long hits = (plus.contains(e.lo()) ? 1 : 0) + (plus.contains(e.hi()) ? 1 : 0);
    return {Rational(hits, 2), Rational(2 - hits, 2)};
}

Outcome ontic_outcome(const Observable& o, int ontic) {
    if (ontic < 1 || ontic > 4)
        throw std::invalid_argument("ontic state must be in 1..4");
    return o.eigenstate(Outcome::plus).contains(ontic) ? Outcome::plus : Outcome::minus;
}

int ontic_update(const Observable& o, Outcome out, Rng& rng) {
    return o.eigenstate(out).support()[rng() & 1];
}

EpistemicState collapse_epistemic(const Observable& o, Outcome out) {
    return o.eigenstate(out);
}

SequenceReport simulate_sequence(const EpistemicState& initial,
                                 std::span<const Observable> sequence,
                                 std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    SequenceReport report{initial, trials, seed, {}, 0, true};
    report.steps.reserve(sequence.size());

    // Exact predictions: evolve the ontic distribution.  Measurement
    // sends weight p(out) to a uniform spread over out's block.
    std::array<Rational, 5> mu{};
    mu[initial.lo()] = Rational(1, 2);
    mu[initial.hi()] = Rational(1, 2);
    for (const Observable& o : sequence) {
        StepStats st;
        st.observable = o.partition_name();
        const EpistemicState& plus = o.eigenstate(Outcome::plus);
        const EpistemicState& minus = o.eigenstate(Outcome::minus);
        Rational p_plus = mu[plus.lo()] + mu[plus.hi()];
        st.exact_p_plus = p_plus;
        report.steps.push_back(st);
        std::array<Rational, 5> next{};
        next[plus.lo()] = next[plus.hi()] = p_plus / 2;
        Rational p_minus = Rational(1) - p_plus;
        next[minus.lo()] += p_minus / 2;
        next[minus.hi()] += p_minus / 2;
        mu = next;
    }

    Rng rng(seed);
    for (std::int64_t t = 0; t < trials; ++t) {
        int ontic = initial.support()[rng() & 1];
        EpistemicState known = initial;
        std::optional<Outcome> prev;
        for (size_t i = 0; i < sequence.size(); ++i) {
            const Observable& o = sequence[i];
            Outcome out = ontic_outcome(o, ontic);
            StepStats& st = report.steps[i];
            (out == Outcome::plus ? st.plus_count : st.minus_count)++;
            if (prev && *prev == out) st.same_as_previous++;
            prev = out;
            ontic = ontic_update(o, out, rng);
            known = o.eigenstate(out);
            report.containment_checks++;
            if (!known.contains(ontic)) report.knowledge_balance = false;
        }
    }
    return report;
}

Perm4 Perm4::from_images(std::array<int, 4> images) {
    std::array<bool, 4> seen{};
    for (int v : images) {
        if (v < 1 || v > 4 || seen[v - 1])
            throw std::invalid_argument("images must be a permutation of 1..4");
        seen[v - 1] = true;
    }
    return Perm4(images);
}

Perm4 Perm4::parse(std::string_view text) {
    constexpr std::string_view prefix = "perm:";
    if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
    if (text.size() != 4)
        throw std::invalid_argument("permutation text must be four digits, e.g. 2134");
    std::array<int, 4> images{};
    for (int i = 0; i < 4; ++i) {
        if (text[i] < '1' || text[i] > '4')
            throw std::invalid_argument("permutation digits must be in 1..4");
        images[i] = text[i] - '0';
    }
    return from_images(images);
}

const std::vector<Perm4>& Perm4::all() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> out;
        std::array<int, 4> images = {1, 2, 3, 4};
        do {
            out.push_back(Perm4(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return perms;
}

Perm4 Perm4::inverse() const {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[images_[i] - 1] = i + 1;
    return Perm4(inv);
}

Perm4 operator*(const Perm4& p, const Perm4& q) {
    std::array<int, 4> images{};
    for (int i = 0; i < 4; ++i) images[i] = p.apply(q.apply(i + 1));
    return Perm4(images);
}

bool Perm4::is_even() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0;
}

std::string Perm4::to_string() const {
    std::string s;
    for (int v : images_) s += char('0' + v);
    return s;
}

std::vector<std::pair<int, int>> PairState::ontic_support() const {
    std::vector<std::pair<int, int>> cells;
    if (is_product()) {
        const auto& [first, second] = product_parts();
        for (int s : first.support())
            for (int t : second.support()) cells.emplace_back(s, t);
    } else {
        for (int s = 1; s <= 4; ++s) cells.emplace_back(s, perm().apply(s));
    }
    return cells;
}

std::string PairState::to_string() const {
    if (is_product()) return product_parts().to_string();
    return "perm:" + perm().to_string();
}

PairState PairState::parse(std::string_view text) {
    constexpr std::string_view prefix = "perm:";
    if (text.substr(0, prefix.size()) == prefix)
        return entangled(Perm4::parse(text));
    size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("pair state text must look like 1v2|1v3 or perm:2134");
    return product(EpistemicState::parse(text.substr(0, bar)),
                   EpistemicState::parse(text.substr(bar + 1)));
}

PairCensus pair_states() {
    PairCensus census;
    for (const auto& first : epistemic_states())
        for (const auto& second : epistemic_states())
            census.products.push_back(PairState::product(first, second));
    for (const auto& p : Perm4::all())
        census.entangled.push_back(PairState::entangled(p));
    return census;
}

std::vector<PairMeasurement> measure_pair(const PairState& state, int subsystem,
                                          const Observable& o) {
    if (subsystem != 1 && subsystem != 2)
        throw std::invalid_argument("subsystem must be 1 or 2");
    auto support = state.ontic_support();
    std::vector<PairMeasurement> results;
    for (Outcome out : {Outcome::plus, Outcome::minus}) {
        const EpistemicState& eigen = o.eigenstate(out);
        long hits = 0;
        for (const auto& [s1, s2] : support)
            if (eigen.contains(subsystem == 1 ? s1 : s2)) ++hits;
        if (hits == 0) continue;
        ProductPair post = [&] {
            if (state.is_product()) {
                const auto& [first, second] = state.product_parts();
                return subsystem == 1 ? ProductPair{eigen, second}
                                      : ProductPair{first, eigen};
            }
            const Perm4& sigma = state.perm();
            return subsystem == 1
                       ? ProductPair{eigen, sigma.image(eigen)}
                       : ProductPair{sigma.inverse().image(eigen), eigen};
        }();
        results.push_back({out, Rational(hits, long(support.size())), post});
    }
    return results;
}

EpistemicState sum_disjoint(const EpistemicState& e1, const EpistemicState& e2,
                            int variant) {
    if (variant < 1 || variant > 4)
        throw std::invalid_argument("variant must be in 1..4");
    if (!e1.disjoint_with(e2))
        throw std::domain_error("sum undefined for non-disjoint states");
    switch (variant) {
        case 1: return {e1.lo(), e2.lo()};
        case 2: return {e1.hi(), e2.hi()};
        case 3: return {e1.hi(), e2.lo()};
        default: return {e1.lo(), e2.hi()};
    }
}

EpistemicState relabel(const Perm4& p, const EpistemicState& e) {
    return p.image(e);
}

Observable relabel(const Perm4& p, const Observable& o) {
    return {p.image(o.eigenstate(Outcome::plus)), p.image(o.eigenstate(Outcome::minus))};
}

PairState relabel(const Perm4& p, const PairState& s) {
    if (s.is_product()) {
        const auto& [first, second] = s.product_parts();
        return PairState::product(p.image(first), p.image(second));
    }
    return PairState::entangled(p * s.perm() * p.inverse());
}

} // namespace toyqm::spekkens
