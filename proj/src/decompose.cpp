#include <algorithm>
#include <random>

#include "hart/rep.hpp"

namespace hart {

namespace {

constexpr int kRandomTrials = 64;

Rational trace(const RepMorphism& f) {
    Rational t;
    for (const auto& m : f.maps)
        for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const Vec& c, const Representation& x) {
    RepMorphism f = zero_morphism(x, x);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) f = add(f, scale(basis[i], c[i]));
    return f;
}

RepMorphism power(const RepMorphism& f, std::size_t k, const Representation& x) {
    RepMorphism r = identity(x);
    for (std::size_t i = 0; i < k; ++i) r = compose(f, r);
    return r;
}

bool equal(const RepMorphism& f, const RepMorphism& g) {
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        if (f.maps[v] != g.maps[v]) return false;
    return true;
}

// The endomorphism ring with its radical and semisimple quotient.
struct EndRing {
    std::vector<RepMorphism> basis;
    CoordinateSolver coords;
    std::size_t quotient_dim = 0;
    Matrix quotient_proj;            // E-coordinates -> E/rad coordinates
    std::vector<std::size_t> lifts;  // basis indices representing E/rad
};

EndRing end_ring(const Representation& x) {
    EndRing e;
    e.basis = hom_basis(x, x);
    const std::size_t m = e.basis.size();
    std::vector<Vec> cols;
    for (const auto& b : e.basis) cols.push_back(flatten(b));
    std::size_t flat = cols.empty() ? 0 : cols[0].size();
    e.coords = CoordinateSolver(Matrix::from_columns(cols, flat));
    // Radical = kernel of the trace form (characteristic 0).
    Matrix G(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) G(i, j) = trace(compose(e.basis[i], e.basis[j]));
    Matrix rad = kernel_basis(G);
    e.lifts = complement_units(rad, m);
    e.quotient_dim = e.lifts.size();
    Matrix U(m, e.lifts.size());
    for (std::size_t k = 0; k < e.lifts.size(); ++k) U(e.lifts[k], k) = 1;
    auto T = inverse(hstack(rad, U));
    e.quotient_proj = T->block(rad.cols(), 0, e.lifts.size(), m);
    return e;
}

// Left multiplication by a on E/rad.
Matrix left_mult(const EndRing& e, const RepMorphism& a) {
    std::size_t q = e.quotient_dim;
    Matrix L(q, q);
    for (std::size_t s = 0; s < q; ++s) {
        auto c = e.coords.coords(flatten(compose(a, e.basis[e.lifts[s]])));
        L.set_col(s, e.quotient_proj * *c);
    }
    return L;
}

struct Split {
    std::vector<Matrix> first, second;  // vertexwise spans of X = first + second
};

// Lagrange idempotent for one eigenvalue, lifted modulo the radical.
std::optional<Split> split_by_spectrum(const Representation& x, const RepMorphism& a,
                                       const std::vector<SpectralPiece>& spec) {
    const Rational& lambda = spec[0].eigenvalue;
    RepMorphism e = identity(x);
    for (std::size_t i = 1; i < spec.size(); ++i) {
        const Rational& mu = spec[i].eigenvalue;
        RepMorphism t = add(a, scale(identity(x), -mu));
        e = compose(scale(t, (lambda - mu).inv()), e);
    }
    for (int it = 0; it < 64; ++it) {
        RepMorphism e2 = compose(e, e);
        if (equal(e2, e)) break;
        RepMorphism e3 = compose(e2, e);
        e = add(scale(e2, Rational(3)), scale(e3, Rational(-2)));
    }
    if (!equal(compose(e, e), e)) return std::nullopt;
    RepMorphism f = add(identity(x), scale(e, Rational(-1)));
    if (is_zero(e) || is_zero(f)) return std::nullopt;
    return Split{e.maps, f.maps};
}

// Fitting decomposition for a - lambda: kernel and image of a high power.
std::optional<Split> split_by_fitting(const Representation& x, const RepMorphism& a, const Rational& lambda) {
    RepMorphism b = add(a, scale(identity(x), -lambda));
    RepMorphism bn = power(b, x.total_dim(), x);
    if (is_zero(bn)) return std::nullopt;
    Split s;
    bool kernel_nonzero = false;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        Matrix k = x.dims[v] ? kernel_basis(bn.maps[v]) : Matrix(0, 0);
        if (k.cols()) kernel_nonzero = true;
        s.first.push_back(k);
        s.second.push_back(bn.maps[v]);
    }
    if (!kernel_nonzero) return std::nullopt;
    return s;
}

std::optional<Split> try_candidate(const Representation& x, const EndRing& e, const RepMorphism& a) {
    Matrix L = left_mult(e, a);
    auto spec = split_spectrum(L);
    if (spec && spec->size() >= 2) {
        auto s = split_by_spectrum(x, a, *spec);
        if (s) return s;
    }
    Poly mp = minimal_polynomial(L);
    std::vector<std::pair<Rational, int>> roots;
    try {
        roots = rational_roots(mp);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    for (const auto& [lambda, mult] : roots) {
        (void)mult;
        auto s = split_by_fitting(x, a, lambda);
        if (s) return s;
    }
    return std::nullopt;
}

std::optional<Split> find_split(const Representation& x, const EndRing& e, std::mt19937_64& rng) {
    const std::size_t m = e.basis.size();
    for (std::size_t i = 0; i < m; ++i) {
        auto s = try_candidate(x, e, e.basis[i]);
        if (s) return s;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto s = try_candidate(x, e, add(e.basis[i], e.basis[j]));
            if (s) return s;
        }
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < kRandomTrials; ++t) {
        Vec c(m);
        for (auto& v : c) v = Rational(coef(rng));
        auto s = try_candidate(x, e, combine(e.basis, c, x));
        if (s) return s;
    }
    return std::nullopt;
}

struct Piece {
    Representation module;
    RepMorphism incl, proj;
};

void split_rec(const Representation& x, const RepMorphism& incl, const RepMorphism& proj, std::mt19937_64& rng,
               std::vector<Piece>& out) {
    if (x.is_zero()) return;
    EndRing e = end_ring(x);
    if (e.quotient_dim <= 1) {
        out.push_back({x, incl, proj});
        return;
    }
    auto s = find_split(x, e, rng);
    if (!s)
        throw Error("NonSplitEndomorphismRing", "no splitting element found in the semisimple quotient of dimension " +
                                                    std::to_string(e.quotient_dim));
    // Complementary submodules: coordinates in the joint basis give the
    // projections.
    Subobject A = submodule(x, s->first);
    Subobject B = submodule(x, s->second);
    RepMorphism pa, pb;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        std::size_t ka = A.module.dims[v], kb = B.module.dims[v];
        if (ka + kb != x.dims[v]) throw std::logic_error("decompose: split is not a direct sum");
        if (x.dims[v] == 0) {
            pa.maps.emplace_back(0, 0);
            pb.maps.emplace_back(0, 0);
            continue;
        }
        Matrix T = *inverse(hstack(A.map.maps[v], B.map.maps[v]));
        pa.maps.push_back(T.block(0, 0, ka, x.dims[v]));
        pb.maps.push_back(T.block(ka, 0, kb, x.dims[v]));
    }
    split_rec(A.module, compose(incl, A.map), compose(pa, proj), rng, out);
    split_rec(B.module, compose(incl, B.map), compose(pb, proj), rng, out);
}

}  // namespace

Decomposition decompose(const Representation& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Piece> pieces;
    split_rec(x, identity(x), identity(x), rng, pieces);
    std::vector<Fingerprint> fps;
    for (const auto& p : pieces) fps.push_back(fingerprint(p.module));
    std::vector<std::size_t> order(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fps[a] < fps[b]; });
    Decomposition d;
    std::vector<Fingerprint> sorted_fps;
    for (auto i : order) {
        d.summands.push_back({pieces[i].module, pieces[i].incl, pieces[i].proj});
        sorted_fps.push_back(fps[i]);
    }
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        bool placed = false;
        for (auto& c : d.classes) {
            if (!(sorted_fps[c.representative] == sorted_fps[i])) continue;
            if (is_isomorphic_indecomposable(d.summands[c.representative].module, d.summands[i].module)) {
                c.members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) d.classes.push_back({i, {i}});
    }
    return d;
}

std::vector<RepMorphism> radical_of_end(const Representation& x) {
    auto basis = hom_basis(x, x);
    const std::size_t m = basis.size();
    Matrix G(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) G(i, j) = trace(compose(basis[i], basis[j]));
    Matrix rad = kernel_basis(G);
    std::vector<RepMorphism> out;
    for (std::size_t k = 0; k < rad.cols(); ++k) out.push_back(combine(basis, rad.col(k), x));
    return out;
}

bool is_indecomposable(const Representation& x) {
    if (x.is_zero()) return false;
    return end_ring(x).quotient_dim <= 1;
}

std::optional<RepMorphism> find_isomorphism_indecomposable(const Representation& x, const Representation& y) {
    if (x.dims != y.dims) return std::nullopt;
    for (const auto& f : hom_basis(x, y))
        if (is_isomorphism(f)) return f;
    return std::nullopt;
}

bool is_isomorphic_indecomposable(const Representation& x, const Representation& y) {
    return find_isomorphism_indecomposable(x, y).has_value();
}

bool is_isomorphic(const Representation& x, const Representation& y) {
    if (x.dims != y.dims) return false;
    if (x.is_zero()) return true;
    Decomposition dx = decompose(x), dy = decompose(y);
    if (dx.summands.size() != dy.summands.size()) return false;
    std::vector<bool> used(dy.classes.size(), false);
    for (const auto& c : dx.classes) {
        bool found = false;
        for (std::size_t j = 0; j < dy.classes.size(); ++j) {
            if (used[j] || dy.classes[j].members.size() != c.members.size()) continue;
            if (is_isomorphic_indecomposable(dx.summands[c.representative].module,
                                             dy.summands[dy.classes[j].representative].module)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace hart
