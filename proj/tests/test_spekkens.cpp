#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toyqm/spekkens.hpp"

using namespace toyqm;
using namespace toyqm::spekkens;

TEST_CASE("epistemic state basics") {
    EpistemicState e(4, 2);
    CHECK(e.lo() == 2);
    CHECK(e.hi() == 4);
    CHECK(e.to_string() == "2v4");
    CHECK(e == EpistemicState(2, 4));
    CHECK(e.contains(2));
    CHECK_FALSE(e.contains(1));
    CHECK(e.disjoint_with({1, 3}));
    CHECK_FALSE(e.disjoint_with({1, 2}));
    CHECK_THROWS_AS(EpistemicState(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(EpistemicState(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(EpistemicState(1, 5), std::invalid_argument);
}

TEST_CASE("epistemic state parsing") {
    CHECK(EpistemicState::parse("1v2") == EpistemicState(1, 2));
    CHECK(EpistemicState::parse("4v2") == EpistemicState(2, 4));
    CHECK_THROWS_AS(EpistemicState::parse("12"), std::invalid_argument);
    CHECK_THROWS_AS(EpistemicState::parse("1v1"), std::invalid_argument);
    CHECK_THROWS_AS(EpistemicState::parse("av2"), std::invalid_argument);
    CHECK_THROWS_AS(EpistemicState::parse(""), std::invalid_argument);
}

TEST_CASE("the six states in listing order") {
    const auto& states = epistemic_states();
    REQUIRE(states.size() == 6);
    CHECK(states[0] == EpistemicState(1, 2));
    CHECK(states[1] == EpistemicState(3, 4));
    CHECK(states[2] == EpistemicState(1, 3));
    CHECK(states[3] == EpistemicState(2, 4));
    CHECK(states[4] == EpistemicState(2, 3));
    CHECK(states[5] == EpistemicState(1, 4));
}

TEST_CASE("observables partition the ontic states") {
    CHECK(Observable::X().eigenstate(Outcome::plus) == EpistemicState(1, 3));
    CHECK(Observable::Y().eigenstate(Outcome::minus) == EpistemicState(1, 4));
    CHECK(Observable::Z().eigenstate(Outcome::plus) == EpistemicState(1, 2));
    CHECK(Observable::X().partition_name() == 'X');
    CHECK(Observable::Y().partition_name() == 'Y');
    CHECK(Observable::Z().partition_name() == 'Z');
    // A flipped sign convention still names the same partition.
    CHECK(Observable({2, 4}, {1, 3}).partition_name() == 'X');
    CHECK(Observable::by_name('Z') == Observable::Z());
    CHECK_THROWS_AS(Observable::by_name('Q'), std::invalid_argument);
    CHECK_THROWS_AS(Observable({1, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("measurement statistics from support overlap") {
    CHECK(measure_epistemic(Observable::Z(), {1, 2}).p_plus == Rational(1));
    CHECK(measure_epistemic(Observable::Z(), {3, 4}).p_plus == Rational(0));
    CHECK(measure_epistemic(Observable::X(), {1, 2}).p_plus == Rational(1, 2));
    CHECK(measure_epistemic(Observable::Y(), {2, 4}).p_plus == Rational(1, 2));
}

TEST_CASE("outcomes of individual ontic states") {
    CHECK(ontic_outcome(Observable::X(), 1) == Outcome::plus);
    CHECK(ontic_outcome(Observable::X(), 2) == Outcome::minus);
    CHECK(ontic_outcome(Observable::Y(), 1) == Outcome::minus);
    CHECK(ontic_outcome(Observable::Y(), 3) == Outcome::plus);
    CHECK(ontic_outcome(Observable::Z(), 2) == Outcome::plus);
    CHECK(ontic_outcome(Observable::Z(), 4) == Outcome::minus);
    CHECK_THROWS_AS(ontic_outcome(Observable::X(), 0), std::invalid_argument);
}

TEST_CASE("measurement disturbs the ontic state uniformly") {
    Rng rng(11);
    std::set<int> seen;
    for (int i = 0; i < 64; ++i) {
        int v = ontic_update(Observable::Z(), Outcome::minus, rng);
        CHECK(Observable::Z().eigenstate(Outcome::minus).contains(v));
        seen.insert(v);
    }
    CHECK(seen == std::set<int>{3, 4});
    CHECK(collapse_epistemic(Observable::Z(), Outcome::minus) ==
          EpistemicState(3, 4));
}

TEST_CASE("sequence simulation") {
    std::array<Observable, 2> seq = {Observable::X(), Observable::Z()};
    auto rep = simulate_sequence({1, 2}, seq, 5000, 13);
    CHECK(rep.trials == 5000);
    CHECK(rep.steps.size() == 2);
    CHECK(rep.steps[0].observable == 'X');
    CHECK(rep.steps[0].exact_p_plus == Rational(1, 2));
    CHECK(rep.steps[1].exact_p_plus == Rational(1, 2));
    CHECK(rep.steps[0].plus_count + rep.steps[0].minus_count == 5000);
    CHECK(rep.knowledge_balance);
    CHECK(rep.containment_checks == 10000);

    auto rep2 = simulate_sequence({1, 2}, seq, 5000, 13);
    CHECK(rep2.steps[0].plus_count == rep.steps[0].plus_count);
    CHECK(rep2.steps[1].plus_count == rep.steps[1].plus_count);

    std::array<Observable, 2> repeat = {Observable::Y(), Observable::Y()};
    auto rep3 = simulate_sequence({2, 3}, repeat, 2000, 99);
    CHECK(rep3.steps[1].same_as_previous == 2000);
    CHECK(rep3.steps[1].exact_p_plus == rep3.steps[0].exact_p_plus);

    std::array<Observable, 1> certain = {Observable::Z()};
    auto rep4 = simulate_sequence({1, 2}, certain, 100, 5);
    CHECK(rep4.steps[0].plus_count == 100);
    CHECK(rep4.steps[0].exact_p_plus == Rational(1));

    CHECK_THROWS_AS(simulate_sequence({1, 2}, seq, 0, 1), std::invalid_argument);
}

TEST_CASE("permutations") {
    Perm4 p = Perm4::parse("2134");
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(2) == 1);
    CHECK(p.apply(3) == 3);
    CHECK(p.to_string() == "2134");
    CHECK(Perm4::parse("perm:2134") == p);
    CHECK_FALSE(p.is_even());
    CHECK(Perm4::identity().is_even());
    CHECK(p.inverse() == p);
    Perm4 cyc = Perm4::parse("2341");
    CHECK(cyc.inverse() == Perm4::parse("4123"));
    CHECK((cyc * cyc.inverse()) == Perm4::identity());
    CHECK((p * cyc).apply(1) == p.apply(cyc.apply(1)));
    CHECK(p.image(EpistemicState(1, 3)) == EpistemicState(2, 3));
    CHECK_THROWS_AS(Perm4::parse("1123"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::parse("123"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::parse("1235"), std::invalid_argument);
    const auto& all = Perm4::all();
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == Perm4::identity());
    CHECK(all.back() == Perm4::parse("4321"));
    int even = 0;
    for (const auto& q : all) even += q.is_even();
    CHECK(even == 12);
}

TEST_CASE("pair states") {
    PairState prod = PairState::product({1, 2}, {1, 3});
    CHECK(prod.is_product());
    CHECK(prod.to_string() == "1v2|1v3");
    CHECK(PairState::parse("1v2|1v3") == prod);
    auto cells = prod.ontic_support();
    CHECK(cells.size() == 4);
    CHECK(std::count(cells.begin(), cells.end(), std::pair{1, 1}) == 1);
    CHECK(std::count(cells.begin(), cells.end(), std::pair{2, 3}) == 1);

    PairState ent = PairState::entangled(Perm4::parse("2134"));
    CHECK(ent.is_entangled());
    CHECK(ent.to_string() == "perm:2134");
    CHECK(PairState::parse("perm:2134") == ent);
    auto diag = ent.ontic_support();
    CHECK(std::count(diag.begin(), diag.end(), std::pair{1, 2}) == 1);
    CHECK(std::count(diag.begin(), diag.end(), std::pair{2, 1}) == 1);
    CHECK_THROWS_AS(PairState::parse("junk"), std::invalid_argument);

    auto census = pair_states();
    CHECK(census.products.size() == 36);
    CHECK(census.entangled.size() == 24);
}

TEST_CASE("measuring one side of a pair") {
    PairState ident = PairState::entangled(Perm4::identity());
    auto r = measure_pair(ident, 1, Observable::Z());
    REQUIRE(r.size() == 2);
    CHECK(r[0].outcome == Outcome::plus);
    CHECK(r[0].probability == Rational(1, 2));
    CHECK(r[0].post == ProductPair{{1, 2}, {1, 2}});
    CHECK(r[1].post == ProductPair{{3, 4}, {3, 4}});

    PairState swapped = PairState::entangled(Perm4::parse("2134"));
    auto rs = measure_pair(swapped, 1, Observable::Z());
    CHECK(rs[0].post == ProductPair{{1, 2}, {1, 2}});
    auto rx = measure_pair(swapped, 1, Observable::X());
    CHECK(rx[0].post == ProductPair{{1, 3}, {2, 3}});
    auto r2 = measure_pair(swapped, 2, Observable::X());
    CHECK(r2[0].post == ProductPair{{2, 3}, {1, 3}});

    PairState prod = PairState::product({1, 2}, {1, 3});
    auto rp = measure_pair(prod, 1, Observable::Z());
    REQUIRE(rp.size() == 1);
    CHECK(rp[0].outcome == Outcome::plus);
    CHECK(rp[0].probability == Rational(1));
    CHECK(rp[0].post == ProductPair{{1, 2}, {1, 3}});
    auto rq = measure_pair(prod, 2, Observable::Z());
    REQUIRE(rq.size() == 2);
    CHECK(rq[0].probability == Rational(1, 2));
    CHECK(rq[0].post == ProductPair{{1, 2}, {1, 2}});
    CHECK_THROWS_AS(measure_pair(prod, 3, Observable::Z()),
                    std::invalid_argument);
}

TEST_CASE("sums of disjoint states") {
    CHECK(sum_disjoint({1, 2}, {3, 4}, 1) == EpistemicState(1, 3));
    CHECK(sum_disjoint({1, 2}, {3, 4}, 2) == EpistemicState(2, 4));
    CHECK(sum_disjoint({1, 2}, {3, 4}, 3) == EpistemicState(2, 3));
    CHECK(sum_disjoint({1, 2}, {3, 4}, 4) == EpistemicState(1, 4));
    CHECK(sum_disjoint({2, 3}, {1, 4}, 1) == EpistemicState(1, 2));
    CHECK(sum_disjoint({1, 4}, {2, 3}, 4) == EpistemicState(1, 3));
    CHECK_THROWS_AS(sum_disjoint({1, 2}, {1, 3}, 1), std::domain_error);
    CHECK_THROWS_AS(sum_disjoint({1, 2}, {3, 4}, 0), std::invalid_argument);
    CHECK_THROWS_AS(sum_disjoint({1, 2}, {3, 4}, 5), std::invalid_argument);
}

TEST_CASE("relabelling ontic states") {
    Perm4 p = Perm4::parse("2314");
    CHECK(relabel(p, EpistemicState(1, 2)) == EpistemicState(2, 3));
    Observable moved = relabel(p, Observable::Z());
    CHECK(moved.eigenstate(Outcome::plus) == EpistemicState(2, 3));
    CHECK(moved.eigenstate(Outcome::minus) == EpistemicState(1, 4));
    PairState prod = PairState::product({1, 2}, {3, 4});
    PairState moved_prod = relabel(p, prod);
    CHECK(moved_prod.product_parts().first == EpistemicState(2, 3));
    CHECK(moved_prod.product_parts().second == EpistemicState(1, 4));
    PairState ent = PairState::entangled(Perm4::identity());
    CHECK(relabel(p, ent) == ent); // conjugating the identity
    for (const auto& e : epistemic_states())
        CHECK(relabel(Perm4::identity(), e) == e);
}
