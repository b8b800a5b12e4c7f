#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toyqm/field.hpp"

namespace toyqm {

/// Column vector over F5 of dimension 2 (single system) or 4 (pair of
/// systems).  Unused trailing components stay zero so defaulted
/// comparison orders first by dimension, then lexicographically.
class Ket {
public:
    static Ket dim2(F5 x0, F5 x1) { return Ket(2, {x0, x1, F5(0), F5(0)}); }
    static Ket dim2(int x0, int x1) { return dim2(F5(x0), F5(x1)); }
    static Ket dim4(F5 x0, F5 x1, F5 x2, F5 x3) { return Ket(4, {x0, x1, x2, x3}); }
    static Ket dim4(int x0, int x1, int x2, int x3) {
        return dim4(F5(x0), F5(x1), F5(x2), F5(x3));
    }

    int dim() const { return dim_; }
    F5 operator[](int i) const { return v_[i]; }

    bool is_zero() const {
        for (int i = 0; i < dim_; ++i)
            if (!v_[i].is_zero()) return false;
        return true;
    }

    friend Ket operator+(const Ket& a, const Ket& b);
    friend Ket operator-(const Ket& a, const Ket& b);
    friend Ket operator*(F5 c, const Ket& k);

    auto operator<=>(const Ket&) const = default;

    std::string to_string() const;

    /// Parses "[1,0]" or "[1,0,0,2]"; elements may use any integer text.
    static Ket parse(std::string_view text);

private:
    Ket(int dim, std::array<F5, 4> v) : dim_(dim), v_(v) {}

    int dim_;
    std::array<F5, 4> v_;
};

/// Row covector; pairs with a Ket of the same dimension to give a scalar.
class Bra {
public:
    static Bra dim2(F5 x0, F5 x1) { return Bra(2, {x0, x1, F5(0), F5(0)}); }
    static Bra dim2(int x0, int x1) { return dim2(F5(x0), F5(x1)); }
    static Bra dim4(F5 x0, F5 x1, F5 x2, F5 x3) { return Bra(4, {x0, x1, x2, x3}); }
    static Bra dim4(int x0, int x1, int x2, int x3) {
        return dim4(F5(x0), F5(x1), F5(x2), F5(x3));
    }

    int dim() const { return dim_; }
    F5 operator[](int i) const { return v_[i]; }

    bool is_zero() const {
        for (int i = 0; i < dim_; ++i)
            if (!v_[i].is_zero()) return false;
        return true;
    }

    friend Bra operator+(const Bra& a, const Bra& b);
    friend Bra operator-(const Bra& a, const Bra& b);
    friend Bra operator*(F5 c, const Bra& b);

    auto operator<=>(const Bra&) const = default;

    std::string to_string() const;
    static Bra parse(std::string_view text);

private:
    Bra(int dim, std::array<F5, 4> v) : dim_(dim), v_(v) {}

    int dim_;
    std::array<F5, 4> v_;
};

/// <bra|ket>; both sides must have the same dimension.
F5 pairing(const Bra& b, const Ket& k);

/// Composite of two single-system vectors; component 2*i+j carries
/// factor-1 index i and factor-2 index j.
Ket tensor(const Ket& u, const Ket& v);
Bra tensor(const Bra& x, const Bra& y);

/// A projective point: a nonzero Ket up to scalar multiple, stored with
/// the representative whose first nonzero component is 1.
class ProjectiveState {
public:
    explicit ProjectiveState(const Ket& k);

    const Ket& rep() const { return rep_; }
    int dim() const { return rep_.dim(); }

    auto operator<=>(const ProjectiveState&) const = default;

    std::string to_string() const { return rep_.to_string(); }

    /// Accepts "[1,0]" component form or an elementary-state letter a..f.
    static ProjectiveState parse(std::string_view text);

private:
    Ket rep_;
};

/// The projective class of a nonzero vector.
inline ProjectiveState canonicalize(const Ket& k) { return ProjectiveState(k); }

/// All projective states of the given dimension (2 or 4) in lexicographic
/// order of their canonical representatives, with components ordered
/// -2 < -1 < 0 < 1 < 2.  Sizes: 6 for dimension 2, 156 for dimension 4.
std::vector<ProjectiveState> enumerate_states(int dim);

/// The unique bra (up to nothing -- the scaling is fixed) that annihilates
/// `partner` and pairs to 1 with `s`.  Defined for distinct
/// single-system states only.
Bra dual(const ProjectiveState& s, const ProjectiveState& partner);

struct ProductFactors {
    ProjectiveState first;
    ProjectiveState second;
    bool operator==(const ProductFactors&) const = default;
};

/// Splits a two-system state into single-system factors if it is a
/// product; a state is a product exactly when its 2x2 reshape is singular.
std::optional<ProductFactors> factor_product(const ProjectiveState& s);

inline bool is_product(const ProjectiveState& s) {
    return factor_product(s).has_value();
}

/// Writes the representative of a two-system state as p + q with both p
/// and q nonzero product vectors sharing no tensor factor on either side,
/// if possible.
std::optional<std::pair<Ket, Ket>> decompose_into_products(const ProjectiveState& s);

/// The six named single-system states and their measurement duals.
namespace basis {

/// Kets a..f:  a=[1,0]  b=[0,1]  c=[1,1]  d=[1,-1]  e=[1,2]  f=[1,-2].
const Ket& ket(char name);

/// Bras a..f, scaled so <x|x> = 1 and <x| annihilates x's partner
/// (partners: a/b, c/d, e/f).
const Bra& bra(char name);

constexpr std::array<char, 6> names() { return {'a', 'b', 'c', 'd', 'e', 'f'}; }

/// Letter of a single-system state.
char name_of(const ProjectiveState& s);

/// Partner letter under the pairing above: a<->b, c<->d, e<->f.
char partner_of(char name);

} // namespace basis

} // namespace toyqm
