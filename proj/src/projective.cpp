#include "toyqm/projective.hpp"

#include <stdexcept>

namespace toyqm {

namespace {

void require_same_dim(int a, int b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}

std::string render(const F5* v, int dim) {
    std::string s = "[";
    for (int i = 0; i < dim; ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    s += "]";
    return s;
}

std::vector<F5> parse_components(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("vector text must look like [1,0]");
    std::vector<F5> out;
    std::string_view body(t.data() + 1, t.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view piece = body.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        out.push_back(F5::parse(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.size() != 2 && out.size() != 4)
        throw std::invalid_argument("vector must have 2 or 4 components");
    return out;
}

} // namespace

Ket operator+(const Ket& a, const Ket& b) {
    require_same_dim(a.dim_, b.dim_);
    Ket r = a;
    for (int i = 0; i < a.dim_; ++i) r.v_[i] += b.v_[i];
    return r;
}

Ket operator-(const Ket& a, const Ket& b) {
    require_same_dim(a.dim_, b.dim_);
    Ket r = a;
    for (int i = 0; i < a.dim_; ++i) r.v_[i] -= b.v_[i];
    return r;
}

Ket operator*(F5 c, const Ket& k) {
    Ket r = k;
    for (int i = 0; i < k.dim_; ++i) r.v_[i] *= c;
    return r;
}

std::string Ket::to_string() const { return render(v_.data(), dim_); }

Ket Ket::parse(std::string_view text) {
    auto c = parse_components(text);
    if (c.size() == 2) return dim2(c[0], c[1]);
    return dim4(c[0], c[1], c[2], c[3]);
}

Bra operator+(const Bra& a, const Bra& b) {
    require_same_dim(a.dim_, b.dim_);
    Bra r = a;
    for (int i = 0; i < a.dim_; ++i) r.v_[i] += b.v_[i];
    return r;
}

Bra operator-(const Bra& a, const Bra& b) {
    require_same_dim(a.dim_, b.dim_);
    Bra r = a;
    for (int i = 0; i < a.dim_; ++i) r.v_[i] -= b.v_[i];
    return r;
}

Bra operator*(F5 c, const Bra& b) {
    Bra r = b;
    for (int i = 0; i < b.dim_; ++i) r.v_[i] *= c;
    return r;
}

std::string Bra::to_string() const { return render(v_.data(), dim_); }

Bra Bra::parse(std::string_view text) {
    auto c = parse_components(text);
    if (c.size() == 2) return dim2(c[0], c[1]);
    return dim4(c[0], c[1], c[2], c[3]);
}

F5 pairing(const Bra& b, const Ket& k) {
    require_same_dim(b.dim(), k.dim());
    F5 acc(0);
    for (int i = 0; i < b.dim(); ++i) acc += b[i] * k[i];
    return acc;
}

Ket tensor(const Ket& u, const Ket& v) {
    if (u.dim() != 2 || v.dim() != 2)
        throw std::invalid_argument("tensor factors must be single-system");
    return Ket::dim4(u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]);
}

Bra tensor(const Bra& x, const Bra& y) {
    if (x.dim() != 2 || y.dim() != 2)
        throw std::invalid_argument("tensor factors must be single-system");
    return Bra::dim4(x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]);
}

namespace {

Ket canonical_rep(const Ket& k) {
    for (int i = 0; i < k.dim(); ++i) {
        if (!k[i].is_zero()) return k[i].inv() * k;
    }
    throw std::domain_error("zero vector has no projective class");
}

} // namespace

ProjectiveState::ProjectiveState(const Ket& k) : rep_(canonical_rep(k)) {}

ProjectiveState ProjectiveState::parse(std::string_view text) {
    if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'f')
        return ProjectiveState(basis::ket(text[0]));
    return ProjectiveState(Ket::parse(text));
}

std::vector<ProjectiveState> enumerate_states(int dim) {
    if (dim != 2 && dim != 4)
        throw std::invalid_argument("dimension must be 2 or 4");
    std::vector<ProjectiveState> out;
    const auto elems = F5::all();
    if (dim == 2) {
        for (F5 x0 : elems)
            for (F5 x1 : elems) {
                Ket k = Ket::dim2(x0, x1);
                if (k.is_zero()) continue;
                if (canonical_rep(k) != k) continue;
                out.emplace_back(k);
            }
    } else {
        for (F5 x0 : elems)
            for (F5 x1 : elems)
                for (F5 x2 : elems)
                    for (F5 x3 : elems) {
                        Ket k = Ket::dim4(x0, x1, x2, x3);
                        if (k.is_zero()) continue;
                        if (canonical_rep(k) != k) continue;
                        out.emplace_back(k);
                    }
    }
    return out;
}

Bra dual(const ProjectiveState& s, const ProjectiveState& partner) {
    if (s.dim() != 2 || partner.dim() != 2)
        throw std::invalid_argument("dual is defined for single-system states");
    if (s == partner)
        throw std::domain_error("dual requires two distinct states");
    const Ket& p = partner.rep();
    Bra ann = Bra::dim2(p[1], -p[0]);
    F5 t = pairing(ann, s.rep());
    return t.inv() * ann;
}

std::optional<ProductFactors> factor_product(const ProjectiveState& s) {
    if (s.dim() != 4)
        throw std::invalid_argument("factoring applies to two-system states");
    const Ket& v = s.rep();
    // Reshape to M[i][j] = v[2i+j]; rank 1 <=> determinant 0 <=> product.
    F5 det = v[0] * v[3] - v[1] * v[2];
    if (!det.is_zero()) return std::nullopt;
    auto m = [&](int i, int j) { return v[2 * i + j]; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (m(a, b).is_zero()) continue;
            Ket u = Ket::dim2(m(0, b), m(1, b));
            Ket w = Ket::dim2(m(a, 0), m(a, 1));
            return ProductFactors{ProjectiveState(u), ProjectiveState(w)};
        }
    return std::nullopt; // unreachable: rep is nonzero
}

std::optional<std::pair<Ket, Ket>> decompose_into_products(const ProjectiveState& s) {
    if (s.dim() != 4)
        throw std::invalid_argument("decomposition applies to two-system states");
    static const std::vector<Ket> product_reps = [] {
        std::vector<Ket> reps;
        for (const auto& st : enumerate_states(4))
            if (is_product(st)) reps.push_back(st.rep());
        return reps;
    }();
    static const std::array<F5, 4> scalars = {F5(1), F5(2), F5(-1), F5(-2)};
    const Ket& target = s.rep();
    for (const Ket& p : product_reps)
        for (F5 c : scalars) {
            Ket left = c * p;
            Ket right = target - left;
            if (right.is_zero()) continue;
            auto lf = factor_product(ProjectiveState(left));
            auto rf = factor_product(ProjectiveState(right));
            if (!rf) continue;
            if (lf->first == rf->first || lf->second == rf->second) continue;
            return std::make_pair(left, right);
        }
    return std::nullopt;
}

namespace basis {

namespace {

const std::array<Ket, 6>& kets() {
    static const std::array<Ket, 6> k = {
        Ket::dim2(1, 0),  // a
        Ket::dim2(0, 1),  // b
        Ket::dim2(1, 1),  // c
        Ket::dim2(1, -1), // d
        Ket::dim2(1, 2),  // e
        Ket::dim2(1, -2), // f
    };
    return k;
}

const std::array<Bra, 6>& bras() {
    static const std::array<Bra, 6> b = [] {
        std::array<char, 6> partner = {'b', 'a', 'd', 'c', 'f', 'e'};
        const auto& k = kets();
        std::array<Bra, 6> out = {Bra::dim2(0, 0), Bra::dim2(0, 0), Bra::dim2(0, 0),
                                  Bra::dim2(0, 0), Bra::dim2(0, 0), Bra::dim2(0, 0)};
        for (int i = 0; i < 6; ++i) {
            ProjectiveState self(k[i]);
            ProjectiveState other(k[partner[i] - 'a']);
            out[i] = dual(self, other);
        }
        return out;
    }();
    return b;
}

int index_of(char name) {
    if (name < 'a' || name > 'f')
        throw std::invalid_argument("state name must be a..f");
    return name - 'a';
}

} // namespace

const Ket& ket(char name) { return kets()[index_of(name)]; }

const Bra& bra(char name) { return bras()[index_of(name)]; }

char name_of(const ProjectiveState& s) {
    if (s.dim() != 2)
        throw std::invalid_argument("only single-system states are named");
    for (char n : names())
        if (ProjectiveState(ket(n)) == s) return n;
    throw std::logic_error("unreachable: all single-system states are named");
}

char partner_of(char name) {
    static constexpr std::array<char, 6> p = {'b', 'a', 'd', 'c', 'f', 'e'};
    return p[index_of(name)];
}

} // namespace basis

} // namespace toyqm
