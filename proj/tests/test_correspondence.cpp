#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toyqm/correspondence.hpp"

using namespace toyqm;
using namespace toyqm::correspondence;
namespace sp = toyqm::spekkens;

TEST_CASE("dictionary between epistemic states and rays") {
    CHECK(letter_of({1, 2}) == 'a');
    CHECK(letter_of({3, 4}) == 'b');
    CHECK(letter_of({1, 3}) == 'c');
    CHECK(letter_of({2, 4}) == 'd');
    CHECK(letter_of({2, 3}) == 'e');
    CHECK(letter_of({1, 4}) == 'f');
    CHECK(state_of(sp::EpistemicState{1, 3}) == ProjectiveState(basis::ket('c')));
    CHECK(ket_of(sp::EpistemicState{1, 4}) == basis::ket('f'));
    for (const auto& e : sp::epistemic_states())
        CHECK(epistemic_of(state_of(e)) == e);
}

TEST_CASE("dictionary on product pairs") {
    sp::ProductPair pair{{1, 2}, {2, 3}};
    CHECK(ket_of(pair) == tensor(basis::ket('a'), basis::ket('e')));
    CHECK(epistemic_pair_of(state_of(pair)) == pair);
    CHECK_THROWS_AS(epistemic_pair_of(ProjectiveState(Ket::dim4(1, 0, 0, 2))),
                    std::domain_error);
}

TEST_CASE("variant coefficients") {
    CHECK(variant_coefficient(1) == F5(1));
    CHECK(variant_coefficient(2) == F5(-1));
    CHECK(variant_coefficient(3) == F5(2));
    CHECK(variant_coefficient(4) == F5(-2));
    CHECK_THROWS_AS(variant_coefficient(0), std::invalid_argument);
    CHECK_THROWS_AS(variant_coefficient(5), std::invalid_argument);
}

TEST_CASE("sums carried through the dictionary") {
    CHECK(extended_sum({1, 2}, 1, {1, 3}) == sp::EpistemicState(1, 4));
    CHECK(extended_sum({1, 2}, 2, {1, 3}) == sp::EpistemicState(3, 4));
    CHECK(extended_sum({1, 2}, 3, {1, 3}) == sp::EpistemicState(2, 4));
    CHECK(extended_sum({1, 2}, 4, {1, 3}) == sp::EpistemicState(2, 3));
    CHECK(extended_sum({1, 2}, 1, {1, 2}) == sp::EpistemicState(1, 2));
    CHECK_THROWS_AS(extended_sum({1, 2}, 2, {1, 2}), std::domain_error);
}

TEST_CASE("the two sum definitions compared") {
    auto rows = compare_sum_definitions();
    REQUIRE(rows.size() == 24);
    int agreements = 0;
    for (const auto& r : rows) agreements += r.agree;
    CHECK(agreements == 20);
    // Fully disjoint operand pair: always agree.
    for (const auto& r : rows)
        if (r.lhs == sp::EpistemicState(1, 2)) CHECK(r.agree);
    // The X partition pair disagrees on the scaled variants.
    int differ = 0;
    for (const auto& r : rows)
        if (r.lhs == sp::EpistemicState(1, 3) && !r.agree) {
            ++differ;
            CHECK(r.variant >= 3);
        }
    CHECK(differ == 2);
    auto again = compare_sum_definitions();
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].disjoint_sum == again[i].disjoint_sum);
        CHECK(rows[i].induced_sum == again[i].induced_sum);
    }
}

TEST_CASE("comparison table matches the recorded golden file") {
    std::ifstream golden(std::string(TOYQM_GOLDEN_DIR) + "/compare_sums.txt");
    REQUIRE(golden.is_open());
    std::stringstream want;
    want << golden.rdbuf();
    CHECK(render_compare_sums(compare_sum_definitions()) == want.str());
}

TEST_CASE("profile of a correlated pair state") {
    auto profile = spekkens_profile(sp::Perm4::identity());
    CHECK(profile.entries.size() == 12);
    Setting key{1, 'Z', Outcome::plus};
    REQUIRE(profile.entries.count(key) == 1);
    const Collapse& c = profile.entries.at(key);
    CHECK(c.probability == Rational(1, 2));
    CHECK(c.post == ProjectiveState(tensor(basis::ket('a'), basis::ket('a'))));

    auto product = [](char l, char r) {
        return ProjectiveState(tensor(basis::ket(l), basis::ket(r)));
    };
    const Collapse& y_plus = profile.entries.at({2, 'Y', Outcome::plus});
    const Collapse& y_minus = profile.entries.at({2, 'Y', Outcome::minus});
    CHECK(y_plus.probability == Rational(1, 2));
    CHECK(y_plus.post == product('e', 'e'));
    CHECK(y_minus.post == product('f', 'f'));

    auto swapped = spekkens_profile(sp::Perm4::parse("2134"));
    CHECK(swapped.entries.at({1, 'X', Outcome::plus}).post == product('c', 'e'));
    CHECK(swapped.entries.at({1, 'X', Outcome::minus}).post == product('d', 'f'));
}

TEST_CASE("analog search") {
    CHECK(find_f5_analogs(sp::Perm4::identity()).empty());
    auto analogs = find_f5_analogs(sp::Perm4::parse("2134"));
    REQUIRE(analogs.size() == 1);
    CHECK(analogs[0] == ProjectiveState(Ket::dim4(1, 0, 0, 2)));
    auto flipped = find_f5_analogs(sp::Perm4::parse("1243"));
    REQUIRE(flipped.size() == 1);
    CHECK(flipped[0] == ProjectiveState(Ket::dim4(1, 0, 0, -2)));
}

TEST_CASE("analog search does not depend on candidate order") {
    std::vector<ProjectiveState> entangled;
    for (const auto& s : enumerate_states(4))
        if (!is_product(s)) entangled.push_back(s);
    REQUIRE(entangled.size() == 120);
    std::mt19937_64 rng(17);
    std::shuffle(entangled.begin(), entangled.end(), rng);
    for (const char* text : {"2134", "1243", "1234", "4321"}) {
        sp::Perm4 p = sp::Perm4::parse(text);
        auto base = find_f5_analogs(p);
        auto shuffled = find_f5_analogs(p, entangled);
        CHECK(std::set<ProjectiveState>(base.begin(), base.end()) ==
              std::set<ProjectiveState>(shuffled.begin(), shuffled.end()));
    }
}

TEST_CASE("classification of all 24 correlations") {
    auto report = classify_all();
    REQUIRE(report.records.size() == 24);
    CHECK(report.matched_count == 12);
    CHECK(report.matched_exactly_odd);
    CHECK(report.analog_lists_disjoint);
    CHECK(report.distinct_analog_count == 12);
    for (const auto& rec : report.records) {
        CHECK(rec.matched == !rec.analogs.empty());
        CHECK(rec.matched == !rec.perm.is_even());
        for (const auto& a : rec.analogs) CHECK_FALSE(is_product(a));
        if (rec.perm == sp::Perm4::identity()) CHECK_FALSE(rec.matched);
        if (rec.perm == sp::Perm4::parse("2134")) {
            REQUIRE(rec.analogs.size() == 1);
            CHECK(rec.analogs[0] == ProjectiveState(Ket::dim4(1, 0, 0, 2)));
        }
    }
}
