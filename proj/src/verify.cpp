#include "toyqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "toyqm/correspondence.hpp"
#include "toyqm/f5qm.hpp"
#include "toyqm/field.hpp"
#include "toyqm/projective.hpp"
#include "toyqm/spekkens.hpp"

namespace toyqm::verify {

namespace {

namespace sp = toyqm::spekkens;
namespace corr = toyqm::correspondence;

class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::string& label,
               const std::string& expected = "holds",
               const std::string& actual = "violated") {
        ++r_.checks;
        if (!ok) r_.failures.push_back({label, expected, actual});
    }

    template <typename T>
    void check_eq(const T& got, const T& want, const std::string& label,
                  std::string (*show)(const T&)) {
        ++r_.checks;
        if (!(got == want)) r_.failures.push_back({label, show(want), show(got)});
    }

    void note(std::string line) { r_.info.push_back(std::move(line)); }

    SuiteResult done() { return std::move(r_); }

private:
    SuiteResult r_;
};

std::string show_f5(const F5& x) { return x.to_string(); }
std::string show_ket(const Ket& k) { return k.to_string(); }
std::string show_rational(const Rational& r) { return toyqm::to_string(r); }
std::string show_epi(const sp::EpistemicState& e) { return e.to_string(); }

template <typename Ex, typename Fn>
bool throws_with(Fn&& fn, const std::string& message) {
    try {
        fn();
    } catch (const Ex& e) {
        return message == e.what();
    } catch (...) {
        return false;
    }
    return false;
}

const std::vector<Ket>& all_dim2_vectors() {
    static const std::vector<Ket> vecs = [] {
        std::vector<Ket> out;
        for (F5 x0 : F5::all())
            for (F5 x1 : F5::all()) out.push_back(Ket::dim2(x0, x1));
        return out;
    }();
    return vecs;
}

constexpr std::array<int, 4> nonzero_values = {1, 2, -1, -2};

SuiteResult field_axioms() {
    Suite s("field-axioms");
    const auto elems = F5::all();
    for (F5 a : elems) {
        s.check(F5(a.value()) == a && a.value() >= -2 && a.value() <= 2,
                "balanced value for " + a.to_string());
        s.check(a + F5(0) == a, "additive identity for " + a.to_string());
        s.check(a * F5(1) == a, "multiplicative identity for " + a.to_string());
        s.check((a + (-a)).is_zero(), "additive inverse for " + a.to_string());
        F5 five_a(0);
        for (int i = 0; i < 5; ++i) five_a += a;
        s.check(five_a.is_zero(), "characteristic 5 at " + a.to_string());
        for (F5 b : elems) {
            s.check(a + b == b + a, "commutative add");
            s.check(a * b == b * a, "commutative mul");
            s.check(a - b == a + (-b), "subtraction is inverse add");
            s.check(abs_norm(a * b) == abs_norm(a) * abs_norm(b),
                    "norm multiplicative");
            s.check(abs_norm(a + b) <= abs_norm(a) + abs_norm(b),
                    "norm subadditive");
            for (F5 c : elems) {
                s.check((a + b) + c == a + (b + c), "associative add");
                s.check((a * b) * c == a * (b * c), "associative mul");
                s.check(a * (b + c) == a * b + a * c, "distributive");
            }
        }
    }
    for (int v : nonzero_values) {
        F5 a(v);
        s.check_eq(a * a.inv(), F5(1), "inverse of " + a.to_string(), show_f5);
        int partners = 0;
        for (F5 b : elems)
            if (a * b == F5(1)) ++partners;
        s.check(partners == 1, "unique inverse of " + a.to_string());
        s.check(a / a == F5(1), "division by self");
    }
    s.check(throws_with<std::domain_error>([] { F5(0).inv(); }, "no inverse of zero"),
            "inverting zero reports the right error");
    auto roots = F5::sqrt_minus_one();
    s.check_eq(roots[0], F5(2), "first square root of -1", show_f5);
    s.check_eq(roots[1], F5(-2), "second square root of -1", show_f5);
    int root_count = 0;
    for (F5 a : elems)
        if (a * a == F5(-1)) ++root_count;
    s.check(root_count == 2, "exactly two square roots of -1");
    s.check(F5(3) == F5(-2) && F5(7) == F5(2) && F5(-3) == F5(2),
            "wraparound representatives");
    s.check(F5::parse("3") == F5(-2) && F5::parse("-2") == F5(-2),
            "parse accepts both residue spellings");
    for (F5 a : elems)
        s.check(F5::parse(a.to_string()) == a, "text round trip");
    s.check(abs_norm(F5(0)) == 0 && abs_norm(F5(2)) == 1, "norm values");
    return s.done();
}

SuiteResult named_basis() {
    Suite s("named-basis");
    const std::array<Ket, 6> want_kets = {Ket::dim2(1, 0),  Ket::dim2(0, 1),
                                          Ket::dim2(1, 1),  Ket::dim2(1, -1),
                                          Ket::dim2(1, 2),  Ket::dim2(1, -2)};
    const std::array<Bra, 6> want_bras = {Bra::dim2(1, 0),   Bra::dim2(0, 1),
                                          Bra::dim2(-2, -2), Bra::dim2(-2, 2),
                                          Bra::dim2(-2, -1), Bra::dim2(-2, 1)};
    for (int i = 0; i < 6; ++i) {
        char n = char('a' + i);
        s.check(basis::ket(n) == want_kets[i], std::string("ket ") + n,
                want_kets[i].to_string(), basis::ket(n).to_string());
        s.check(basis::bra(n) == want_bras[i], std::string("bra ") + n,
                want_bras[i].to_string(), basis::bra(n).to_string());
    }
    // The bras are re-derivable from the kets alone: annihilate the
    // partner, pair to 1 with the ket itself.
    for (char n : basis::names()) {
        char p = basis::partner_of(n);
        Bra derived = dual(ProjectiveState(basis::ket(n)),
                           ProjectiveState(basis::ket(p)));
        s.check(derived == basis::bra(n),
                std::string("derived dual of ") + n, basis::bra(n).to_string(),
                derived.to_string());
        s.check_eq(pairing(basis::bra(n), basis::ket(n)), F5(1),
                   std::string("<x|x> for ") + n, show_f5);
        s.check_eq(pairing(basis::bra(n), basis::ket(p)), F5(0),
                   std::string("<x|partner> for ") + n, show_f5);
        s.check(basis::partner_of(basis::partner_of(n)) == n, "partner involution");
        s.check(basis::name_of(ProjectiveState(basis::ket(n))) == n,
                "name round trip");
    }
    s.check(throws_with<std::domain_error>(
                [] {
                    dual(ProjectiveState(basis::ket('a')),
                         ProjectiveState(Ket::dim2(2, 0)));
                },
                "dual requires two distinct states"),
            "dual of a state with itself reports the right error");
    return s.done();
}

SuiteResult pairing_table(const Options& options) {
    Suite s("pairing-table");
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            F5 got = pairing(basis::bra(char('a' + r)), basis::ket(char('a' + c)));
            F5 want(options.pairing_golden[r][c]);
            s.check(got == want,
                    std::string("<") + char('a' + r) + "|" + char('a' + c) + ">",
                    want.to_string(), got.to_string());
        }
    return s.done();
}

SuiteResult pairing_bilinearity() {
    Suite s("pairing-bilinearity");
    std::vector<Bra> bras;
    for (F5 x0 : F5::all())
        for (F5 x1 : F5::all()) bras.push_back(Bra::dim2(x0, x1));
    const auto& kets = all_dim2_vectors();
    for (const Bra& x : bras)
        for (const Ket& u : kets) {
            for (const Ket& v : kets)
                s.check(pairing(x, u + v) == pairing(x, u) + pairing(x, v),
                        "additive in the ket");
            for (const Bra& y : bras)
                s.check(pairing(x + y, u) == pairing(x, u) + pairing(y, u),
                        "additive in the bra");
            for (int lambda : nonzero_values) {
                s.check(pairing(x, F5(lambda) * u) == F5(lambda) * pairing(x, u),
                        "homogeneous in the ket");
                s.check(pairing(F5(lambda) * x, u) == F5(lambda) * pairing(x, u),
                        "homogeneous in the bra");
            }
        }
    return s.done();
}

SuiteResult projective_canonical() {
    Suite s("projective-canonical");
    for (const Ket& v : all_dim2_vectors()) {
        if (v.is_zero()) continue;
        ProjectiveState p(v);
        int lead = -1;
        for (int i = 0; i < 2 && lead < 0; ++i)
            if (!p.rep()[i].is_zero()) lead = i;
        s.check(lead >= 0 && p.rep()[lead] == F5(1),
                "leading one in " + p.to_string());
        s.check(ProjectiveState(p.rep()) == p, "idempotent canonicalization");
        for (int lambda : nonzero_values)
            s.check(ProjectiveState(F5(lambda) * v) == p,
                    "scale invariance of " + v.to_string());
    }
    // Large-space spot check: random nonzero 4-vectors, fixed seed.
    sp::Rng rng(1234);
    auto rand_f5 = [&rng] { return F5(int(rng() % 5) - 2); };
    for (int i = 0; i < 10000; ++i) {
        Ket v = Ket::dim4(rand_f5(), rand_f5(), rand_f5(), rand_f5());
        if (v.is_zero()) continue;
        ProjectiveState p(v);
        s.check(ProjectiveState(p.rep()) == p, "idempotent (dim 4)");
        for (int lambda : nonzero_values)
            s.check(ProjectiveState(F5(lambda) * v) == p, "scale invariance (dim 4)");
    }
    s.check(throws_with<std::domain_error>([] { ProjectiveState(Ket::dim2(0, 0)); },
                                           "zero vector has no projective class"),
            "zero vector reports the right error");
    s.check(canonicalize(Ket::dim2(2, 2)) == ProjectiveState(basis::ket('c')),
            "[2,2] canonicalizes to c");
    s.check(canonicalize(Ket::dim2(2, -1)) == ProjectiveState(basis::ket('e')),
            "[2,-1] canonicalizes to e");
    s.check(canonicalize(Ket::dim2(0, -2)) == ProjectiveState(basis::ket('b')),
            "[0,-2] canonicalizes to b");
    s.check(ProjectiveState::parse("e") == ProjectiveState(basis::ket('e')),
            "letter parse");
    s.check(ProjectiveState::parse("[1,-2]").to_string() == "[1,-2]",
            "text round trip");
    return s.done();
}

SuiteResult state_census() {
    Suite s("state-census");
    auto p1 = enumerate_states(2);
    s.check(p1.size() == 6, "single-system state count", "6",
            std::to_string(p1.size()));
    s.check(std::is_sorted(p1.begin(), p1.end()), "dim-2 enumeration sorted");
    std::set<ProjectiveState> named;
    for (char n : basis::names()) named.insert(ProjectiveState(basis::ket(n)));
    s.check(std::set<ProjectiveState>(p1.begin(), p1.end()) == named,
            "dim-2 states are exactly the named six");
    auto p3 = enumerate_states(4);
    s.check(p3.size() == 156, "two-system state count", "156",
            std::to_string(p3.size()));
    s.check(std::is_sorted(p3.begin(), p3.end()), "dim-4 enumeration sorted");
    s.check(std::set<ProjectiveState>(p3.begin(), p3.end()).size() == 156,
            "dim-4 enumeration duplicate-free");
    long products = 0;
    for (const auto& st : p3)
        if (is_product(st)) ++products;
    s.check(products == 36, "product state count", "36", std::to_string(products));
    s.check(long(p3.size()) - products == 120, "entangled state count", "120",
            std::to_string(long(p3.size()) - products));
    s.check(throws_with<std::invalid_argument>([] { enumerate_states(3); },
                                               "dimension must be 2 or 4"),
            "unsupported dimension rejected");
    return s.done();
}

SuiteResult tensor_rules() {
    Suite s("tensor-rules");
    const auto& vecs = all_dim2_vectors();
    for (const Ket& u : vecs)
        for (const Ket& v : vecs) {
            Ket t = tensor(u, v);
            bool componentwise = true;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    componentwise &= t[2 * i + j] == u[i] * v[j];
            s.check(componentwise, "component convention");
            for (const Ket& w : vecs)
                s.check(tensor(u + w, v) == tensor(u, v) + tensor(w, v) &&
                            tensor(u, v + w) == tensor(u, v) + tensor(u, w),
                        "bilinearity");
            if (!u.is_zero() && !v.is_zero())
                s.check(ProjectiveState(tensor(F5(2) * u, v)) ==
                            ProjectiveState(tensor(u, v)),
                        "projective compatibility");
        }
    for (char bx : basis::names())
        for (char by : basis::names())
            for (char kx : basis::names())
                for (char ky : basis::names()) {
                    F5 joint = pairing(tensor(basis::bra(bx), basis::bra(by)),
                                       tensor(basis::ket(kx), basis::ket(ky)));
                    F5 split = pairing(basis::bra(bx), basis::ket(kx)) *
                               pairing(basis::bra(by), basis::ket(ky));
                    s.check(joint == split, "pairing factorizes over tensor");
                }
    s.check_eq(tensor(basis::ket('a'), basis::ket('b')), Ket::dim4(0, 1, 0, 0),
               "a tensor b", show_ket);
    s.check_eq(tensor(basis::ket('c'), basis::ket('e')), Ket::dim4(1, 2, 1, 2),
               "c tensor e", show_ket);
    return s.done();
}

SuiteResult product_factoring() {
    Suite s("product-factoring");
    long products = 0;
    for (const auto& st : enumerate_states(4)) {
        const Ket& v = st.rep();
        bool singular = (v[0] * v[3] - v[1] * v[2]).is_zero();
        auto f = factor_product(st);
        s.check(f.has_value() == singular,
                "determinant criterion for " + st.to_string());
        if (f) {
            ++products;
            s.check(ProjectiveState(tensor(f->first.rep(), f->second.rep())) == st,
                    "factors rebuild " + st.to_string());
        }
    }
    s.check(products == 36, "factorable count", "36", std::to_string(products));
    for (char x : basis::names())
        for (char y : basis::names()) {
            auto f = factor_product(
                ProjectiveState(tensor(basis::ket(x), basis::ket(y))));
            s.check(f && basis::name_of(f->first) == x &&
                        basis::name_of(f->second) == y,
                    std::string("named factors of ") + x + "*" + y);
        }
    s.check(is_product(ProjectiveState(Ket::dim4(1, 0, 0, 0))), "a*a is a product");
    s.check(!is_product(ProjectiveState(Ket::dim4(1, 0, 0, 2))),
            "[1,0,0,2] is entangled");
    return s.done();
}

SuiteResult product_sum_decomposition() {
    Suite s("product-sum-decomposition");
    long decomposed = 0;
    for (const auto& st : enumerate_states(4)) {
        if (is_product(st)) continue;
        auto parts = decompose_into_products(st);
        s.check(parts.has_value(), "decomposition exists for " + st.to_string());
        if (!parts) continue;
        ++decomposed;
        const auto& [p, q] = *parts;
        s.check(p + q == st.rep(), "parts sum to " + st.to_string());
        auto pf = factor_product(ProjectiveState(p));
        auto qf = factor_product(ProjectiveState(q));
        s.check(pf.has_value() && qf.has_value(), "parts are products");
        if (pf && qf)
            s.check(pf->first != qf->first && pf->second != qf->second,
                    "no common tensor factor in " + st.to_string());
    }
    s.check(decomposed == 120, "all entangled states decomposed", "120",
            std::to_string(decomposed));
    return s.done();
}

SuiteResult single_system_rule() {
    Suite s("single-system-rule");
    const Rational zero(0), half(1, 2), one(1);
    for (const auto& st : enumerate_states(2))
        for (const Observable& o : Observable::all()) {
            auto d = measure_prob(o, st);
            s.check(d.p_plus + d.p_minus == one, "probabilities sum to 1");
            s.check(d.p_plus == zero || d.p_plus == half || d.p_plus == one,
                    "probability quantized");
        }
    for (const Observable& o : Observable::all())
        for (Outcome out : {Outcome::plus, Outcome::minus})
            s.check(measure_prob(o, eigenket(o, out)).prob(out) == one,
                    std::string("eigenstate certainty ") + o.name() +
                        outcome_label(out));
    s.check(eigenket(Observable::X(), Outcome::plus) ==
                ProjectiveState(basis::ket('c')),
            "X plus eigenket is c");
    s.check(eigenket(Observable::Z(), Outcome::minus) ==
                ProjectiveState(basis::ket('b')),
            "Z minus eigenket is b");
    s.check(eigenket(Observable::Y(), Outcome::plus) ==
                ProjectiveState(basis::ket('e')),
            "Y plus eigenket is e");
    auto za = measure_prob(Observable::Z(), ProjectiveState(basis::ket('a')));
    s.check_eq(za.p_plus, one, "Z on a, plus", show_rational);
    auto xa = measure_prob(Observable::X(), ProjectiveState(basis::ket('a')));
    s.check_eq(xa.p_plus, half, "X on a, plus", show_rational);
    auto yc = measure_prob(Observable::Y(), ProjectiveState(basis::ket('c')));
    s.check_eq(yc.p_plus, half, "Y on c, plus", show_rational);
    for (const Ket& v : all_dim2_vectors()) {
        if (v.is_zero()) continue;
        for (int lambda : nonzero_values)
            for (const Observable& o : Observable::all())
                s.check(measure_prob(o, ProjectiveState(v)) ==
                            measure_prob(o, ProjectiveState(F5(lambda) * v)),
                        "projective well-definedness");
    }
    return s.done();
}

SuiteResult superposition_rules() {
    Suite s("superposition-rules");
    auto state = [](char n) { return ProjectiveState(basis::ket(n)); };
    s.check(throws_with<std::invalid_argument>(
                [&] { superpose(state('a'), F5(0), state('b')); },
                "superposition coefficient must be nonzero"),
            "zero coefficient rejected");
    s.check(throws_with<std::domain_error>(
                [&] { superpose(state('a'), F5(-1), state('a')); },
                "zero superposition"),
            "cancelling superposition reports the right error");
    auto p1 = enumerate_states(2);
    for (const auto& u : p1)
        for (const auto& v : p1)
            for (int lambda : nonzero_values) {
                if (u == v && lambda == -1) continue;
                ProjectiveState r = superpose(u, F5(lambda), v);
                s.check(basis::name_of(r) >= 'a' && basis::name_of(r) <= 'f',
                        "superposition closed over the six states");
            }
    s.check(superpose(state('a'), F5(2), state('b')) == state('e'),
            "a + 2b is e");
    s.check(superpose(state('a'), F5(1), state('c')) == state('f'),
            "a + c is f (projectively)");
    s.check(superpose(state('a'), F5(-1), state('c')) == state('b'),
            "a - c is b (projectively)");
    return s.done();
}

SuiteResult single_system_identities() {
    Suite s("single-system-identities");
    const Ket a = basis::ket('a'), b = basis::ket('b'), c = basis::ket('c');
    s.check_eq(a + b, basis::ket('c'), "c = a + b", show_ket);
    s.check_eq(a - b, basis::ket('d'), "d = a - b", show_ket);
    s.check_eq(a + F5(2) * b, basis::ket('e'), "e = a + 2b", show_ket);
    s.check_eq(a - F5(2) * b, basis::ket('f'), "f = a - 2b", show_ket);
    s.check_eq(a + c, F5(2) * basis::ket('f'), "a + c = 2f", show_ket);
    s.check_eq(a - c, -F5(1) * basis::ket('b'), "a - c = -b", show_ket);
    s.check_eq(a + F5(2) * c, F5(-2) * basis::ket('d'), "a + 2c = -2d", show_ket);
    s.check_eq(a - F5(2) * c, -F5(1) * basis::ket('e'), "a - 2c = -e", show_ket);
    return s.done();
}

SuiteResult two_system_identities() {
    Suite s("two-system-identities");
    auto T = [](char x, char y) { return tensor(basis::ket(x), basis::ket(y)); };
    const F5 m2(-2);
    struct Row {
        Ket lhs;
        Ket rhs;
        const char* label;
    };
    const std::array<Row, 8> rows = {{
        {T('a', 'a') + T('b', 'b'), m2 * (T('c', 'c') + T('d', 'd')),
         "aa + bb = -2(cc + dd)"},
        {T('a', 'a') + T('b', 'b'), m2 * (T('e', 'f') + T('f', 'e')),
         "aa + bb = -2(ef + fe)"},
        {T('a', 'a') - T('b', 'b'), m2 * (T('c', 'd') + T('d', 'c')),
         "aa - bb = -2(cd + dc)"},
        {T('a', 'a') - T('b', 'b'), m2 * (T('e', 'e') + T('f', 'f')),
         "aa - bb = -2(ee + ff)"},
        {T('a', 'a') + F5(2) * T('b', 'b'), m2 * (T('c', 'e') + T('d', 'f')),
         "aa + 2bb = -2(ce + df)"},
        {T('a', 'a') + F5(2) * T('b', 'b'), m2 * (T('e', 'c') + T('f', 'd')),
         "aa + 2bb = -2(ec + fd)"},
        {T('a', 'a') - F5(2) * T('b', 'b'), m2 * (T('c', 'f') + T('d', 'e')),
         "aa - 2bb = -2(cf + de)"},
        {T('a', 'a') - F5(2) * T('b', 'b'), m2 * (T('f', 'c') + T('e', 'd')),
         "aa - 2bb = -2(fc + ed)"},
    }};
    for (const auto& row : rows) {
        s.check_eq(row.lhs, row.rhs, row.label, show_ket);
        s.check(ProjectiveState(row.lhs) == ProjectiveState(row.rhs),
                std::string(row.label) + " (projective)");
    }
    return s.done();
}

SuiteResult joint_rule() {
    Suite s("joint-rule");
    const auto p3 = enumerate_states(4);
    const auto obs = Observable::all();
    for (const auto& st : p3)
        for (const Observable& o1 : obs)
            for (const Observable& o2 : obs) {
                auto d = joint_prob(o1, o2, st);
                Rational total(0);
                bool in_range = true;
                for (const auto& [k, p] : d) {
                    total += p;
                    in_range &= p >= Rational(0) && p <= Rational(1);
                }
                s.check(d.size() == 4 && total == Rational(1) && in_range,
                        "joint distribution well-formed");
            }
    auto diag = joint_prob(Observable::Z(), Observable::Z(),
                           ProjectiveState(Ket::dim4(1, 0, 0, 2)));
    s.check_eq(diag[{Outcome::plus, Outcome::plus}], Rational(1, 2),
               "Z,Z on [1,0,0,2]: ++", show_rational);
    s.check_eq(diag[{Outcome::plus, Outcome::minus}], Rational(0),
               "Z,Z on [1,0,0,2]: +-", show_rational);
    s.check_eq(diag[{Outcome::minus, Outcome::minus}], Rational(1, 2),
               "Z,Z on [1,0,0,2]: --", show_rational);
    auto ac = joint_prob(Observable::Z(), Observable::X(),
                         ProjectiveState(tensor(basis::ket('a'), basis::ket('c'))));
    s.check_eq(ac[{Outcome::plus, Outcome::plus}], Rational(1),
               "Z,X on a*c: ++", show_rational);
    // On product states the joint rule factorizes whenever both
    // single-system distributions are degenerate.
    for (char x : basis::names())
        for (char y : basis::names()) {
            ProjectiveState st(tensor(basis::ket(x), basis::ket(y)));
            ProjectiveState s1(basis::ket(x)), s2(basis::ket(y));
            for (const Observable& o1 : obs)
                for (const Observable& o2 : obs) {
                    auto d1 = measure_prob(o1, s1);
                    auto d2 = measure_prob(o2, s2);
                    auto degenerate = [](const OutcomeDistribution& d) {
                        return d.p_plus == Rational(0) || d.p_plus == Rational(1);
                    };
                    if (!degenerate(d1) || !degenerate(d2)) continue;
                    auto d = joint_prob(o1, o2, st);
                    bool factorizes = true;
                    for (Outcome s1o : {Outcome::plus, Outcome::minus})
                        for (Outcome s2o : {Outcome::plus, Outcome::minus})
                            factorizes &= d[{s1o, s2o}] ==
                                          d1.prob(s1o) * d2.prob(s2o);
                    s.check(factorizes, "degenerate product factorizes");
                }
        }
    return s.done();
}

SuiteResult joint_vs_collapse() {
    Suite s("joint-vs-collapse");
    const auto obs = Observable::all();
    long mismatched_tuples = 0;
    std::set<std::string> mismatched_states;
    long marginal_checks = 0;
    for (const auto& st : enumerate_states(4)) {
        if (is_product(st)) continue;
        for (int sub : {1, 2})
            for (const Observable& measured : obs) {
                Rational collapse_p =
                    subsystem_collapse(st, sub, measured, Outcome::plus).probability;
                for (const Observable& other : obs) {
                    auto d = sub == 1 ? joint_prob(measured, other, st)
                                      : joint_prob(other, measured, st);
                    Rational marginal(0);
                    for (Outcome o2 : {Outcome::plus, Outcome::minus})
                        marginal += sub == 1 ? d[{Outcome::plus, o2}]
                                             : d[{o2, Outcome::plus}];
                    ++marginal_checks;
                    s.check(marginal >= Rational(0) && marginal <= Rational(1),
                            "marginal well-formed");
                    if (marginal != collapse_p) {
                        ++mismatched_tuples;
                        mismatched_states.insert(st.to_string());
                    }
                }
            }
    }
    s.note("joint-rule marginals compared with the collapse rule over entangled "
           "states: " +
           std::to_string(mismatched_tuples) + " of " +
           std::to_string(marginal_checks) + " (subsystem, observable, partner) "
           "combinations disagree, on " +
           std::to_string(mismatched_states.size()) +
           " of 120 states; the two rules are intentionally independent");
    return s.done();
}

SuiteResult collapse_rules() {
    Suite s("collapse-rules");
    const auto obs = Observable::all();
    for (const auto& st : enumerate_states(4)) {
        bool entangled = !is_product(st);
        auto factors = factor_product(st);
        for (int sub : {1, 2})
            for (const Observable& o : obs) {
                Rational total(0);
                int possible = 0;
                for (Outcome out : {Outcome::plus, Outcome::minus}) {
                    if (residual(st.rep(), sub, o.bra(out)).is_zero()) {
                        s.check(throws_with<std::domain_error>(
                                    [&] { subsystem_collapse(st, sub, o, out); },
                                    "impossible outcome"),
                                "impossible outcome reported");
                        continue;
                    }
                    ++possible;
                    Collapse c = subsystem_collapse(st, sub, o, out);
                    total += c.probability;
                    auto pf = factor_product(c.post);
                    s.check(pf.has_value(), "post state is a product");
                    if (!pf) continue;
                    const ProjectiveState& measured =
                        sub == 1 ? pf->first : pf->second;
                    const ProjectiveState& untouched =
                        sub == 1 ? pf->second : pf->first;
                    s.check(measured == eigenket(o, out),
                            "measured factor is the outcome eigenket");
                    if (entangled) {
                        s.check(c.probability == Rational(1, 2),
                                "entangled collapse probability is 1/2");
                    } else if (factors) {
                        s.check(untouched == (sub == 1 ? factors->second
                                                       : factors->first),
                                "unmeasured factor unchanged");
                    }
                }
                s.check(possible >= 1 && total == Rational(1),
                        "collapse probabilities sum to 1");
                if (entangled)
                    s.check(possible == 2, "entangled states allow both outcomes");
            }
        CollapseProfile profile = collapse_profile(st);
        size_t possible_count = 0;
        for (int sub : {1, 2})
            for (const Observable& o : obs)
                for (Outcome out : {Outcome::plus, Outcome::minus})
                    if (!residual(st.rep(), sub, o.bra(out)).is_zero())
                        ++possible_count;
        s.check(profile.entries.size() == possible_count,
                "profile lists exactly the possible outcomes");
    }
    ProjectiveState two(Ket::dim4(1, 0, 0, 2));
    Collapse cx = subsystem_collapse(two, 1, Observable::X(), Outcome::plus);
    s.check(cx.probability == Rational(1, 2) &&
                cx.post == ProjectiveState(tensor(basis::ket('c'), basis::ket('e'))),
            "X on system 1 of [1,0,0,2] gives (1/2, c*e)");
    Collapse cz = subsystem_collapse(two, 1, Observable::Z(), Outcome::plus);
    s.check(cz.post == ProjectiveState(Ket::dim4(1, 0, 0, 0)),
            "Z on system 1 of [1,0,0,2] collapses to a*a");
    Collapse cy = subsystem_collapse(two, 1, Observable::Y(), Outcome::plus);
    s.check(cy.post == ProjectiveState(tensor(basis::ket('e'), basis::ket('c'))),
            "Y on system 1 of [1,0,0,2] collapses to e*c");
    ProjectiveState prod(tensor(basis::ket('a'), basis::ket('c')));
    Collapse pc = subsystem_collapse(prod, 2, Observable::X(), Outcome::plus);
    s.check(pc.probability == Rational(1) && pc.post == prod,
            "eigenstate factor is left alone with probability 1");
    s.check(throws_with<std::domain_error>(
                [&] { subsystem_collapse(prod, 2, Observable::X(), Outcome::minus); },
                "impossible outcome"),
            "impossible product outcome reported");
    return s.done();
}

SuiteResult epistemic_states_suite() {
    Suite s("epistemic-states");
    const auto& states = sp::epistemic_states();
    s.check(states.size() == 6, "state count", "6", std::to_string(states.size()));
    const std::array<const char*, 6> want = {"1v2", "3v4", "1v3",
                                             "2v4", "2v3", "1v4"};
    for (size_t i = 0; i < want.size(); ++i)
        s.check(states[i].to_string() == want[i],
                "listing order slot " + std::to_string(i), want[i],
                states[i].to_string());
    for (const auto& e : states) {
        s.check(e.support()[0] < e.support()[1], "support stored ordered");
        int partners = 0;
        for (const auto& other : states)
            if (e.disjoint_with(other)) ++partners;
        s.check(partners == 1, "each state has exactly one disjoint partner");
    }
    s.check(sp::EpistemicState(2, 1) == sp::EpistemicState(1, 2),
            "ordering of labels is immaterial");
    s.check(sp::EpistemicState::parse("1v2") == sp::EpistemicState(1, 2),
            "text round trip");
    s.check(sp::EpistemicState(1, 2).disjoint_with(sp::EpistemicState(3, 4)) &&
                !sp::EpistemicState(1, 2).disjoint_with(sp::EpistemicState(1, 3)),
            "disjointness");
    return s.done();
}

SuiteResult spekkens_observables() {
    Suite s("spekkens-observables");
    auto X = sp::Observable::X(), Y = sp::Observable::Y(), Z = sp::Observable::Z();
    s.check(X.eigenstate(Outcome::plus) == sp::EpistemicState(1, 3) &&
                X.eigenstate(Outcome::minus) == sp::EpistemicState(2, 4),
            "X blocks");
    s.check(Y.eigenstate(Outcome::plus) == sp::EpistemicState(2, 3) &&
                Y.eigenstate(Outcome::minus) == sp::EpistemicState(1, 4),
            "Y blocks");
    s.check(Z.eigenstate(Outcome::plus) == sp::EpistemicState(1, 2) &&
                Z.eigenstate(Outcome::minus) == sp::EpistemicState(3, 4),
            "Z blocks");
    const std::array<std::array<Outcome, 4>, 3> tableaux = {{
        {Outcome::plus, Outcome::minus, Outcome::plus, Outcome::minus},  // X
        {Outcome::minus, Outcome::plus, Outcome::plus, Outcome::minus},  // Y
        {Outcome::plus, Outcome::plus, Outcome::minus, Outcome::minus},  // Z
    }};
    const std::array<sp::Observable, 3> all = {X, Y, Z};
    for (int i = 0; i < 3; ++i)
        for (int ontic = 1; ontic <= 4; ++ontic)
            s.check(sp::ontic_outcome(all[i], ontic) == tableaux[i][ontic - 1],
                    std::string(1, all[i].partition_name()) + " tableau at " +
                        std::to_string(ontic));
    s.check(X.partition_name() == 'X' && Y.partition_name() == 'Y' &&
                Z.partition_name() == 'Z',
            "partition names");
    s.check(sp::collapse_epistemic(X, Outcome::plus) == sp::EpistemicState(1, 3),
            "collapse to 1v3 on X plus");
    s.check(sp::collapse_epistemic(X, Outcome::minus) == sp::EpistemicState(2, 4),
            "collapse to 2v4 on X minus");
    s.check(sp::collapse_epistemic(Y, Outcome::plus) == sp::EpistemicState(2, 3),
            "collapse to 2v3 on Y plus");
    return s.done();
}

SuiteResult spekkens_measurement() {
    Suite s("spekkens-measurement");
    auto X = sp::Observable::X(), Z = sp::Observable::Z();
    s.check_eq(sp::measure_epistemic(Z, {1, 2}).p_plus, Rational(1),
               "Z on 1v2", show_rational);
    s.check_eq(sp::measure_epistemic(X, {1, 2}).p_plus, Rational(1, 2),
               "X on 1v2", show_rational);
    s.check_eq(sp::measure_epistemic(X, {2, 4}).p_plus, Rational(0),
               "X on 2v4", show_rational);
    for (const auto& o : sp::Observable::all())
        for (const auto& e : sp::epistemic_states()) {
            auto d = sp::measure_epistemic(o, e);
            long overlap = 0;
            for (int v : e.support())
                if (o.eigenstate(Outcome::plus).contains(v)) ++overlap;
            s.check(d.p_plus == Rational(overlap, 2) &&
                        d.p_plus + d.p_minus == Rational(1),
                    "support-overlap rule");
        }
    // Repeatability: the update rule keeps the ontic state inside the
    // observed block, and every block member reproduces the outcome.
    for (const auto& o : sp::Observable::all())
        for (Outcome out : {Outcome::plus, Outcome::minus}) {
            for (int v : o.eigenstate(out).support())
                s.check(sp::ontic_outcome(o, v) == out, "block members repeat");
            sp::Rng rng(3);
            for (int i = 0; i < 32; ++i)
                s.check(o.eigenstate(out).contains(sp::ontic_update(o, out, rng)),
                        "update stays inside the block");
        }
    // Disturbance: measuring a different observable in between restores
    // full uncertainty, exactly.
    for (const auto& first : sp::Observable::all())
        for (const auto& second : sp::Observable::all()) {
            if (first.partition_name() == second.partition_name()) continue;
            for (Outcome out : {Outcome::plus, Outcome::minus}) {
                std::array<sp::Observable, 2> seq = {first, second};
                auto rep = sp::simulate_sequence(second.eigenstate(out), seq, 1, 1);
                s.check_eq(rep.steps[1].exact_p_plus, Rational(1, 2),
                           "disturbance restores 1/2", show_rational);
            }
        }
    return s.done();
}

SuiteResult spekkens_pairs() {
    Suite s("spekkens-pairs");
    auto census = sp::pair_states();
    s.check(census.products.size() == 36, "product census", "36",
            std::to_string(census.products.size()));
    s.check(census.entangled.size() == 24, "entangled census", "24",
            std::to_string(census.entangled.size()));
    for (const auto& st : census.products)
        s.check(st.ontic_support().size() == 4, "product support size 4");
    bool identity_seen = false;
    for (const auto& st : census.entangled) {
        auto cells = st.ontic_support();
        s.check(cells.size() == 4, "entangled support size 4");
        std::set<int> rows, cols;
        for (auto [r, c] : cells) {
            rows.insert(r);
            cols.insert(c);
        }
        s.check(rows.size() == 4 && cols.size() == 4,
                "one cell per row and column in " + st.to_string());
        if (st == sp::PairState::entangled(sp::Perm4::identity())) {
            identity_seen = true;
            bool diagonal = true;
            for (auto [r, c] : cells) diagonal &= r == c;
            s.check(diagonal, "identity correlation has diagonal support");
        }
    }
    s.check(identity_seen, "identity correlation enumerated");

    auto Z = sp::Observable::Z(), X = sp::Observable::X();
    auto ident = sp::PairState::entangled(sp::Perm4::identity());
    auto rz = sp::measure_pair(ident, 1, Z);
    s.check(rz.size() == 2 && rz[0].probability == Rational(1, 2) &&
                rz[0].post == sp::ProductPair{{1, 2}, {1, 2}} &&
                rz[1].post == sp::ProductPair{{3, 4}, {3, 4}},
            "Z on system 1 of the identity correlation");
    auto rx = sp::measure_pair(ident, 2, X);
    s.check(rx.size() == 2 && rx[0].post == sp::ProductPair{{1, 3}, {1, 3}} &&
                rx[1].post == sp::ProductPair{{2, 4}, {2, 4}},
            "X on system 2 of the identity correlation");
    auto prod = sp::PairState::product({1, 2}, {1, 3});
    auto rp = sp::measure_pair(prod, 1, Z);
    s.check(rp.size() == 1 && rp[0].outcome == Outcome::plus &&
                rp[0].probability == Rational(1) &&
                rp[0].post == sp::ProductPair{{1, 2}, {1, 3}},
            "eigenstate factor measured with certainty, partner untouched");

    for (const auto& st : census.products)
        for (int sub : {1, 2})
            for (const auto& o : sp::Observable::all()) {
                Rational total(0);
                for (const auto& r : sp::measure_pair(st, sub, o)) {
                    total += r.probability;
                    s.check(r.probability > Rational(0), "zero outcomes omitted");
                    const auto& eigen = o.eigenstate(r.outcome);
                    s.check((sub == 1 ? r.post.first : r.post.second) == eigen,
                            "measured side collapses to the eigenstate");
                }
                s.check(total == Rational(1), "pair probabilities sum to 1");
            }
    for (const auto& st : census.entangled)
        for (int sub : {1, 2})
            for (const auto& o : sp::Observable::all()) {
                auto results = sp::measure_pair(st, sub, o);
                s.check(results.size() == 2, "entangled pair: both outcomes");
                for (const auto& r : results) {
                    s.check(r.probability == Rational(1, 2),
                            "entangled pair outcome probability 1/2");
                    const auto& sigma = st.perm();
                    if (sub == 1)
                        s.check(r.post.second == sigma.image(r.post.first),
                                "system-2 knowledge follows the correlation");
                    else
                        s.check(r.post.first == sigma.inverse().image(r.post.second),
                                "system-1 knowledge follows the correlation");
                }
            }
    return s.done();
}

SuiteResult disjoint_sums() {
    Suite s("disjoint-sums");
    using E = sp::EpistemicState;
    struct Row {
        E lhs, rhs;
        std::array<E, 4> want;
    };
    const std::vector<Row> table = {
        {{1, 2}, {3, 4}, {E{1, 3}, E{2, 4}, E{2, 3}, E{1, 4}}},
        {{3, 4}, {1, 2}, {E{1, 3}, E{2, 4}, E{1, 4}, E{2, 3}}},
        {{1, 3}, {2, 4}, {E{1, 2}, E{3, 4}, E{2, 3}, E{1, 4}}},
        {{2, 4}, {1, 3}, {E{1, 2}, E{3, 4}, E{1, 4}, E{2, 3}}},
        {{2, 3}, {1, 4}, {E{1, 2}, E{3, 4}, E{1, 3}, E{2, 4}}},
        {{1, 4}, {2, 3}, {E{1, 2}, E{3, 4}, E{2, 4}, E{1, 3}}},
    };
    for (const auto& row : table)
        for (int v = 1; v <= 4; ++v)
            s.check_eq(sp::sum_disjoint(row.lhs, row.rhs, v), row.want[v - 1],
                       row.lhs.to_string() + " +" + std::to_string(v) + " " +
                           row.rhs.to_string(),
                       show_epi);
    for (const auto& e1 : sp::epistemic_states())
        for (const auto& e2 : sp::epistemic_states()) {
            if (e1.disjoint_with(e2)) continue;
            s.check(throws_with<std::domain_error>(
                        [&] { sp::sum_disjoint(e1, e2, 1); },
                        "sum undefined for non-disjoint states"),
                    "non-disjoint operands rejected: " + e1.to_string() + ", " +
                        e2.to_string());
        }
    s.check(throws_with<std::invalid_argument>(
                [] { sp::sum_disjoint({1, 2}, {3, 4}, 5); },
                "variant must be in 1..4"),
            "variant range enforced");
    return s.done();
}

SuiteResult dictionary() {
    Suite s("dictionary");
    const std::array<char, 6> letters = {'a', 'b', 'c', 'd', 'e', 'f'};
    const auto& states = sp::epistemic_states();
    for (size_t i = 0; i < states.size(); ++i) {
        s.check(corr::letter_of(states[i]) == letters[i],
                "letter of " + states[i].to_string(),
                std::string(1, letters[i]),
                std::string(1, corr::letter_of(states[i])));
        s.check(corr::epistemic_of(corr::state_of(states[i])) == states[i],
                "round trip of " + states[i].to_string());
    }
    s.check(corr::state_of(sp::EpistemicState{1, 3}) ==
                ProjectiveState(basis::ket('c')),
            "1v3 maps to c");
    s.check(corr::state_of(sp::EpistemicState{1, 4}) ==
                ProjectiveState(basis::ket('f')),
            "1v4 maps to f");
    s.check(corr::epistemic_of(ProjectiveState(basis::ket('e'))) ==
                sp::EpistemicState(2, 3),
            "e maps back to 2v3");
    for (const auto& e1 : states)
        for (const auto& e2 : states) {
            sp::ProductPair pair{e1, e2};
            s.check(corr::epistemic_pair_of(corr::state_of(pair)) == pair,
                    "pair round trip " + pair.to_string());
        }
    s.check(throws_with<std::domain_error>(
                [] { corr::epistemic_pair_of(ProjectiveState(Ket::dim4(1, 0, 0, 2))); },
                "no product-state image"),
            "entangled states have no pair image");
    return s.done();
}

SuiteResult single_system_agreement() {
    Suite s("single-system-agreement");
    for (const auto& o : sp::Observable::all()) {
        Observable O = Observable::by_name(o.partition_name());
        for (const auto& e : sp::epistemic_states()) {
            auto toy = sp::measure_epistemic(o, e);
            auto field = measure_prob(O, corr::state_of(e));
            s.check(toy == field,
                    std::string("agreement ") + o.partition_name() + " on " +
                        e.to_string(),
                    show_rational(field.p_plus), show_rational(toy.p_plus));
        }
        for (Outcome out : {Outcome::plus, Outcome::minus})
            s.check(corr::state_of(sp::collapse_epistemic(o, out)) ==
                        eigenket(O, out),
                    std::string("collapse agreement ") + o.partition_name() +
                        outcome_label(out));
    }
    return s.done();
}

SuiteResult extended_sums() {
    Suite s("extended-sums");
    const std::array<int, 4> coeffs = {1, -1, 2, -2};
    for (int v = 1; v <= 4; ++v)
        s.check_eq(corr::variant_coefficient(v), F5(coeffs[v - 1]),
                   "coefficient of variant " + std::to_string(v), show_f5);
    using E = sp::EpistemicState;
    const std::array<E, 4> eighteen = {E{1, 4}, E{3, 4}, E{2, 4}, E{2, 3}};
    for (int v = 1; v <= 4; ++v)
        s.check_eq(corr::extended_sum({1, 2}, v, {1, 3}), eighteen[v - 1],
                   "1v2 +" + std::to_string(v) + " 1v3 (induced)", show_epi);
    for (int v = 1; v <= 4; ++v)
        s.check_eq(corr::extended_sum({1, 2}, v, {3, 4}),
                   sp::sum_disjoint({1, 2}, {3, 4}, v),
                   "induced matches disjoint rule on 1v2,3v4 variant " +
                       std::to_string(v),
                   show_epi);
    s.check(throws_with<std::domain_error>(
                [] { corr::extended_sum({1, 2}, 2, {1, 2}); },
                "zero superposition"),
            "cancelling case reports zero superposition");
    for (const auto& e1 : sp::epistemic_states())
        for (const auto& e2 : sp::epistemic_states())
            for (int v = 1; v <= 4; ++v) {
                if (e1 == e2 && v == 2) continue;
                corr::extended_sum(e1, v, e2); // must not throw
                s.check(true, "totality");
            }
    s.check(corr::extended_sum({1, 2}, 1, {1, 2}) == E{1, 2},
            "doubling a state leaves it fixed");
    return s.done();
}

SuiteResult compare_sums() {
    Suite s("compare-sums");
    auto rows = corr::compare_sum_definitions();
    s.check(rows.size() == 24, "row count", "24", std::to_string(rows.size()));
    int agreements = 0;
    for (const auto& r : rows) {
        if (r.agree) ++agreements;
        s.check(r.agree == (r.disjoint_sum == r.induced_sum), "agree flag");
    }
    s.check(agreements == 20, "agreement count", "20", std::to_string(agreements));
    auto row_at = [&](const char* lhs, const char* rhs,
                      int variant) -> const corr::SumComparisonRow* {
        for (const auto& r : rows)
            if (r.lhs.to_string() == lhs && r.rhs.to_string() == rhs &&
                r.variant == variant)
                return &r;
        return nullptr;
    };
    for (int v = 1; v <= 4; ++v) {
        auto* r = row_at("1v2", "3v4", v);
        s.check(r && r->agree, "1v2,3v4 agrees on variant " + std::to_string(v));
    }
    struct Differ {
        const char* lhs;
        const char* rhs;
        int variant;
        const char* disjoint;
        const char* induced;
    };
    const std::array<Differ, 4> differs = {{
        {"1v3", "2v4", 3, "2v3", "1v4"},
        {"1v3", "2v4", 4, "1v4", "2v3"},
        {"2v4", "1v3", 3, "1v4", "2v3"},
        {"2v4", "1v3", 4, "2v3", "1v4"},
    }};
    for (const auto& d : differs) {
        auto* r = row_at(d.lhs, d.rhs, d.variant);
        s.check(r && !r->agree && r->disjoint_sum.to_string() == d.disjoint &&
                    r->induced_sum.to_string() == d.induced,
                std::string(d.lhs) + "," + d.rhs + " variant " +
                    std::to_string(d.variant) + " disagrees as expected");
    }
    std::string rendered = corr::render_compare_sums(rows);
    s.check(rendered.find("agreements: 20 of 24") != std::string::npos,
            "rendering carries the agreement tally");
    return s.done();
}

SuiteResult classification() {
    Suite s("classification");
    auto report = corr::classify_all();
    s.check(report.records.size() == 24, "one record per correlation", "24",
            std::to_string(report.records.size()));
    s.check(report.matched_count == 12, "matched count", "12",
            std::to_string(report.matched_count));
    int analog_total = 0;
    std::map<int, int> analog_histogram;
    for (const auto& rec : report.records) {
        s.check(rec.matched == !rec.analogs.empty(), "matched flag consistent");
        analog_total += int(rec.analogs.size());
        if (rec.matched) ++analog_histogram[int(rec.analogs.size())];
        for (const auto& a : rec.analogs)
            s.check(!is_product(a), "analog is entangled: " + a.to_string());
        if (rec.perm == sp::Perm4::identity())
            s.check(!rec.matched, "identity correlation unmatched");
        if (rec.perm.to_string() == "2134") {
            bool found = false;
            for (const auto& a : rec.analogs)
                found |= a == ProjectiveState(Ket::dim4(1, 0, 0, 2));
            s.check(found, "swap(1,2) analog list contains [1,0,0,2]");
        }
    }
    auto again = corr::classify_all();
    bool stable = again.matched_count == report.matched_count;
    for (size_t i = 0; i < report.records.size() && stable; ++i)
        stable = again.records[i].analogs == report.records[i].analogs;
    s.check(stable, "classification stable across reruns");
    s.note(std::string("matched correlations are exactly the odd permutations: ") +
           (report.matched_exactly_odd ? "yes" : "no"));
    s.note("analog lists pairwise disjoint: " +
           std::string(report.analog_lists_disjoint ? "yes" : "no") + ", " +
           std::to_string(report.distinct_analog_count) + " distinct analogs, " +
           std::to_string(analog_total) + " total");
    std::string histo = "analogs per matched correlation:";
    for (const auto& [count, perms] : analog_histogram)
        histo += " " + std::to_string(perms) + " correlation(s) with " +
                 std::to_string(count);
    s.note(histo);
    return s.done();
}

SuiteResult s4_covariance() {
    Suite s("s4-covariance");
    const auto& perms = sp::Perm4::all();
    s.check(perms.size() == 24, "permutation count", "24",
            std::to_string(perms.size()));
    for (const auto& p : perms) {
        std::set<sp::EpistemicState> image;
        for (const auto& e : sp::epistemic_states())
            image.insert(sp::relabel(p, e));
        s.check(image.size() == 6,
                "relabelling permutes the epistemic states: " + p.to_string());
        s.check((p * p.inverse()) == sp::Perm4::identity(), "inverse composes");
        for (const auto& o : sp::Observable::all()) {
            for (const auto& e : sp::epistemic_states())
                s.check(sp::measure_epistemic(sp::relabel(p, o),
                                              sp::relabel(p, e)) ==
                            sp::measure_epistemic(o, e),
                        "measurement covariance " + p.to_string());
            for (Outcome out : {Outcome::plus, Outcome::minus})
                s.check(sp::relabel(p, sp::collapse_epistemic(o, out)) ==
                            sp::collapse_epistemic(sp::relabel(p, o), out),
                        "collapse covariance " + p.to_string());
        }
    }
    auto census = sp::pair_states();
    std::vector<sp::PairState> all_pairs = census.products;
    all_pairs.insert(all_pairs.end(), census.entangled.begin(),
                     census.entangled.end());
    for (const auto& p : perms)
        for (const auto& st : all_pairs) {
            std::set<std::pair<int, int>> mapped;
            for (auto [r, c] : st.ontic_support())
                mapped.insert({p.apply(r), p.apply(c)});
            auto relabelled = sp::relabel(p, st);
            auto cells = relabelled.ontic_support();
            s.check(std::set<std::pair<int, int>>(cells.begin(), cells.end()) ==
                        mapped,
                    "support covariance " + st.to_string());
        }
    for (const auto& p : perms)
        for (const auto& st : census.entangled)
            for (int sub : {1, 2})
                for (const auto& o : sp::Observable::all()) {
                    auto base = sp::measure_pair(st, sub, o);
                    auto moved = sp::measure_pair(sp::relabel(p, st), sub,
                                                  sp::relabel(p, o));
                    bool same = base.size() == moved.size();
                    for (size_t i = 0; same && i < base.size(); ++i)
                        same = moved[i].outcome == base[i].outcome &&
                               moved[i].probability == base[i].probability &&
                               moved[i].post.first ==
                                   sp::relabel(p, base[i].post.first) &&
                               moved[i].post.second ==
                                   sp::relabel(p, base[i].post.second);
                    s.check(same, "pair measurement covariance " + p.to_string());
                }
    return s.done();
}

SuiteResult monte_carlo(const Options& options) {
    Suite s("monte-carlo");
    auto X = sp::Observable::X(), Z = sp::Observable::Z();
    const sp::EpistemicState start{1, 2};

    std::array<sp::Observable, 2> xz = {X, Z};
    auto rep = sp::simulate_sequence(start, xz, options.mc_trials, options.mc_seed);
    s.check_eq(rep.steps[0].exact_p_plus, Rational(1, 2), "step-1 exact value",
               show_rational);
    s.check_eq(rep.steps[1].exact_p_plus, Rational(1, 2), "step-2 exact value",
               show_rational);
    double freq = double(rep.steps[1].plus_count) / double(rep.trials);
    s.check(std::abs(freq - 0.5) <= 0.01, "step-2 frequency near 1/2", "0.5±0.01",
            std::to_string(freq));
    s.check(rep.knowledge_balance, "knowledge balance during sampling");
    auto rep2 = sp::simulate_sequence(start, xz, options.mc_trials, options.mc_seed);
    s.check(rep2.steps[0].plus_count == rep.steps[0].plus_count &&
                rep2.steps[1].plus_count == rep.steps[1].plus_count,
            "seeded runs are reproducible");

    std::array<sp::Observable, 2> xx = {X, X};
    auto repeat = sp::simulate_sequence(start, xx, options.mc_trials,
                                        options.mc_seed);
    s.check(repeat.steps[1].same_as_previous == repeat.trials,
            "repeat measurement always repeats", std::to_string(repeat.trials),
            std::to_string(repeat.steps[1].same_as_previous));

    std::array<sp::Observable, 1> just_z = {Z};
    auto certain = sp::simulate_sequence(start, just_z, 1000, options.mc_seed);
    s.check(certain.steps[0].plus_count == certain.trials &&
                certain.steps[0].exact_p_plus == Rational(1),
            "eigenstate measurement is certain");

    sp::Rng rng(options.mc_seed);
    long low = 0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i)
        if (sp::ontic_update(X, Outcome::plus, rng) == 1) ++low;
    double low_freq = double(low) / double(draws);
    s.check(std::abs(low_freq - 0.5) <= 0.01, "update rule draws uniformly",
            "0.5±0.01", std::to_string(low_freq));

    s.check(throws_with<std::invalid_argument>(
                [&] { sp::simulate_sequence(start, xz, 0, 1); },
                "trials must be at least 1"),
            "trial count validated");
    return s.done();
}

SuiteResult random_sequences(const Options& options) {
    Suite s("random-sequences");
    sp::Rng master(options.random_seed);
    const auto& states = sp::epistemic_states();
    const auto obs = sp::Observable::all();
    long total_checks = 0;
    for (int i = 0; i < options.random_sequences; ++i) {
        const auto& initial = states[master() % states.size()];
        std::vector<sp::Observable> seq;
        size_t len = 1 + master() % 8;
        for (size_t k = 0; k < len; ++k) seq.push_back(obs[master() % 3]);
        auto rep = sp::simulate_sequence(initial, seq, 1, master());
        total_checks += rep.containment_checks;
        if (!rep.knowledge_balance)
            s.check(false, "knowledge balance in sequence " + std::to_string(i));
    }
    s.check(true, "knowledge balance held");
    s.note("ontic-containment checks performed: " + std::to_string(total_checks));
    return s.done();
}

} // namespace

Report run_all(const Options& options) {
    Report report;
    report.suites.push_back(field_axioms());
    report.suites.push_back(named_basis());
    report.suites.push_back(pairing_table(options));
    report.suites.push_back(pairing_bilinearity());
    report.suites.push_back(projective_canonical());
    report.suites.push_back(state_census());
    report.suites.push_back(tensor_rules());
    report.suites.push_back(product_factoring());
    report.suites.push_back(product_sum_decomposition());
    report.suites.push_back(single_system_rule());
    report.suites.push_back(superposition_rules());
    report.suites.push_back(single_system_identities());
    report.suites.push_back(two_system_identities());
    report.suites.push_back(joint_rule());
    report.suites.push_back(joint_vs_collapse());
    report.suites.push_back(collapse_rules());
    report.suites.push_back(epistemic_states_suite());
    report.suites.push_back(spekkens_observables());
    report.suites.push_back(spekkens_measurement());
    report.suites.push_back(spekkens_pairs());
    report.suites.push_back(disjoint_sums());
    report.suites.push_back(dictionary());
    report.suites.push_back(single_system_agreement());
    report.suites.push_back(extended_sums());
    report.suites.push_back(compare_sums());
    report.suites.push_back(classification());
    report.suites.push_back(s4_covariance());
    report.suites.push_back(monte_carlo(options));
    report.suites.push_back(random_sequences(options));
    return report;
}

void print(const Report& report, std::ostream& out) {
    for (const auto& suite : report.suites) {
        out << (suite.passed() ? "[PASS] " : "[FAIL] ") << suite.name << " ("
            << suite.checks << " checks";
        if (!suite.passed()) out << ", " << suite.failures.size() << " failed";
        out << ")\n";
        size_t shown = 0;
        for (const auto& f : suite.failures) {
            if (shown == 8) {
                out << "       ... " << (suite.failures.size() - shown)
                    << " more failures\n";
                break;
            }
            out << "       " << f.check << ": expected " << f.expected << ", got "
                << f.actual << "\n";
            ++shown;
        }
        for (const auto& line : suite.info) out << "       note: " << line << "\n";
    }
    out << (report.all_passed() ? "all suites passed" : "FAILURES PRESENT")
        << "\n";
}

} // namespace toyqm::verify
