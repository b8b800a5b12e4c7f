#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toyqm {

/// Element of the five-element field, stored in balanced form:
/// one of -2, -1, 0, 1, 2.  Arithmetic wraps mod 5 and renormalizes,
/// so e.g. 2*2 == -1 and -2 + -2 == 1.
class F5 {
public:
    constexpr F5() : v_(0) {}
    constexpr explicit F5(int n) : v_(balance(n)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr F5 operator+(F5 a, F5 b) { return F5(a.v_ + b.v_); }
    friend constexpr F5 operator-(F5 a, F5 b) { return F5(a.v_ - b.v_); }
    friend constexpr F5 operator*(F5 a, F5 b) { return F5(a.v_ * b.v_); }
    constexpr F5 operator-() const { return F5(-v_); }

    constexpr F5& operator+=(F5 o) { v_ = balance(v_ + o.v_); return *this; }
    constexpr F5& operator-=(F5 o) { v_ = balance(v_ - o.v_); return *this; }
    constexpr F5& operator*=(F5 o) { v_ = balance(v_ * o.v_); return *this; }

    /// Multiplicative inverse; the zero element has none.
    constexpr F5 inv() const {
        switch (v_) {
            case 1:  return F5(1);
            case 2:  return F5(-2);
            case -2: return F5(2);
            case -1: return F5(-1);
            default: throw std::domain_error("no inverse of zero");
        }
    }

    friend constexpr F5 operator/(F5 a, F5 b) { return a * b.inv(); }

    constexpr auto operator<=>(const F5&) const = default;

    /// Both square roots of -1: the elements 2 and -2.
    static constexpr std::array<F5, 2> sqrt_minus_one() { return {F5(2), F5(-2)}; }

    /// All five elements in balanced order -2, -1, 0, 1, 2.
    static constexpr std::array<F5, 5> all() {
        return {F5(-2), F5(-1), F5(0), F5(1), F5(2)};
    }

    std::string to_string() const;

    /// Accepts any integer text; "3" and "-2" name the same element.
    static F5 parse(std::string_view text);

private:
    static constexpr int balance(int n) {
        int r = ((n % 5) + 5) % 5;
        return r > 2 ? r - 5 : r;
    }

    int v_;
};

/// The norm used by the probability rule: 0 for the zero element, 1 otherwise.
constexpr int abs_norm(F5 x) { return x.is_zero() ? 0 : 1; }

} // namespace toyqm
