#pragma once

#include <boost/rational.hpp>
#include <string>

namespace toyqm {

/// Exact probability type.  All probabilities in this library are small
/// rationals (denominators never exceed the number of enumerated branches),
/// so long is ample.
using Rational = boost::rational<long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class Outcome { plus, minus };

inline constexpr Outcome other(Outcome o) {
    return o == Outcome::plus ? Outcome::minus : Outcome::plus;
}

inline const char* outcome_label(Outcome o) {
    return o == Outcome::plus ? "+1" : "-1";
}

struct OutcomeDistribution {
    Rational p_plus;
    Rational p_minus;

    Rational prob(Outcome o) const { return o == Outcome::plus ? p_plus : p_minus; }
    bool operator==(const OutcomeDistribution&) const = default;
};

} // namespace toyqm
