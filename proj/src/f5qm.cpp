#include "toyqm/f5qm.hpp"

#include <stdexcept>

namespace toyqm {

Observable Observable::by_name(char name) {
    switch (name) {
        case 'X': return X();
        case 'Y': return Y();
        case 'Z': return Z();
        default: throw std::invalid_argument("observable must be X, Y or Z");
    }
}

ProjectiveState eigenket(const Observable& o, Outcome out) {
    return ProjectiveState(basis::ket(o.outcome_state(out)));
}

OutcomeDistribution measure_prob(const Observable& o, const ProjectiveState& s) {
    if (s.dim() != 2)
        throw std::invalid_argument("single-system rule needs a single-system state");
    long np = abs_norm(pairing(o.bra(Outcome::plus), s.rep()));
    long nm = abs_norm(pairing(o.bra(Outcome::minus), s.rep()));
    long total = np + nm; // never 0: the two bras span the dual space
    return {Rational(np, total), Rational(nm, total)};
}

ProjectiveState superpose(const ProjectiveState& u, F5 coeff, const ProjectiveState& v) {
    if (coeff.is_zero())
        throw std::invalid_argument("superposition coefficient must be nonzero");
    Ket sum = u.rep() + coeff * v.rep();
    if (sum.is_zero())
        throw std::domain_error("zero superposition");
    return ProjectiveState(sum);
}

std::map<std::pair<Outcome, Outcome>, Rational>
joint_prob(const Observable& on_first, const Observable& on_second,
           const ProjectiveState& s) {
    if (s.dim() != 4)
        throw std::invalid_argument("joint rule needs a two-system state");
    constexpr std::array<Outcome, 2> outs = {Outcome::plus, Outcome::minus};
    long w[2][2];
    long total = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Bra joint = tensor(on_first.bra(outs[i]), on_second.bra(outs[j]));
            w[i][j] = abs_norm(pairing(joint, s.rep()));
            total += w[i][j];
        }
    // total > 0: the four product bras form a basis of the dual space.
    std::map<std::pair<Outcome, Outcome>, Rational> dist;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            dist[{outs[i], outs[j]}] = Rational(w[i][j], total);
    return dist;
}

Ket residual(const Ket& v, int subsystem, const Bra& b) {
    if (v.dim() != 4 || b.dim() != 2)
        throw std::invalid_argument("residual contracts a two-system vector with a single-system bra");
    if (subsystem == 1)
        return Ket::dim2(b[0] * v[0] + b[1] * v[2], b[0] * v[1] + b[1] * v[3]);
    if (subsystem == 2)
        return Ket::dim2(b[0] * v[0] + b[1] * v[1], b[0] * v[2] + b[1] * v[3]);
    throw std::invalid_argument("subsystem must be 1 or 2");
}

Collapse subsystem_collapse(const ProjectiveState& s, int subsystem,
                            const Observable& o, Outcome out) {
    if (s.dim() != 4)
        throw std::invalid_argument("collapse needs a two-system state");
    Ket wanted = residual(s.rep(), subsystem, o.bra(out));
    Ket alt = residual(s.rep(), subsystem, o.bra(other(out)));
    if (wanted.is_zero())
        throw std::domain_error("impossible outcome");
    long total = 1 + (alt.is_zero() ? 0 : 1);
    Ket own = eigenket(o, out).rep();
    Ket post = subsystem == 1 ? tensor(own, wanted) : tensor(wanted, own);
    return {Rational(1, total), ProjectiveState(post)};
}

CollapseProfile collapse_profile(const ProjectiveState& s) {
    CollapseProfile profile;
    for (int sub : {1, 2})
        for (const Observable& o : Observable::all())
            for (Outcome out : {Outcome::plus, Outcome::minus}) {
                Ket r = residual(s.rep(), sub, o.bra(out));
                if (r.is_zero()) continue;
                profile.entries.emplace(Setting{sub, o.name(), out},
                                        subsystem_collapse(s, sub, o, out));
            }
    return profile;
}

} // namespace toyqm
