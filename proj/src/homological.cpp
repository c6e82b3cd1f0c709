#include "hart/homological.hpp"

#include <algorithm>

namespace hart {

namespace {

std::size_t default_cap(const AlgebraPtr& a) { return std::max(1, a->num_vertices()); }

// Hom(P, Y) = sum of Y at the tops of P; precomposition with d: P' -> P.
Matrix hom_into(const AlgebraPtr& a, const PMap& d, const Representation& y) {
    std::size_t rows = 0, cols = 0;
    for (int t : d.src.tops) rows += y.dims[t];
    for (int t : d.dst.tops) cols += y.dims[t];
    Matrix M(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t l = 0; l < d.src.tops.size(); ++l) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < d.dst.tops.size(); ++j) {
            Matrix b = evaluate(y, d.dst.tops[j], d.src.tops[l], d.entry[j][l]);
            M.set_block(r0, c0, b);
            c0 += y.dims[d.dst.tops[j]];
        }
        r0 += y.dims[d.src.tops[l]];
    }
    (void)a;
    return M;
}

std::size_t hom_size(const ProjObject& p, const Representation& y) {
    std::size_t s = 0;
    for (int t : p.tops) s += y.dims[t];
    return s;
}

std::size_t rank_or_zero(const Matrix& m) { return (m.rows() == 0 || m.cols() == 0) ? 0 : rank(m); }

// dim Ext^i for i = 0..max_i from one projective resolution of X.
std::vector<std::size_t> ext_dims_from(const ProjResolution& r, const Representation& y, std::size_t max_i) {
    const AlgebraPtr& a = r.module.alg;
    std::vector<std::size_t> out(max_i + 1, 0);
    std::vector<std::size_t> rk(r.diffs.size());
    for (std::size_t k = 0; k < r.diffs.size(); ++k) rk[k] = rank_or_zero(hom_into(a, r.diffs[k], y));
    for (std::size_t i = 0; i <= max_i && i < r.terms.size(); ++i) {
        std::size_t n = hom_size(r.terms[i], y);
        std::size_t out_rank = i < rk.size() ? rk[i] : 0;
        std::size_t in_rank = i >= 1 ? rk[i - 1] : 0;
        out[i] = n - out_rank - in_rank;
    }
    return out;
}

// Pairwise non-isomorphic indecomposables with their radical morphisms,
// used for minimal approximations.
class AddCategory {
public:
    explicit AddCategory(const std::vector<Representation>& gens) : gens_(gens) {
        const std::size_t g = gens.size();
        J_.assign(g, std::vector<std::vector<RepMorphism>>(g));
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t k = 0; k < g; ++k)
                J_[j][k] = j == k ? radical_of_end(gens[j]) : hom_basis(gens[j], gens[k]);
    }

    Approximation approximate(const Representation& x, Side side) const {
        const std::size_t g = gens_.size();
        std::vector<std::vector<RepMorphism>> H(g);
        for (std::size_t j = 0; j < g; ++j)
            H[j] = side == Side::Right ? hom_basis(gens_[j], x) : hom_basis(x, gens_[j]);
        Approximation ap;
        std::vector<Representation> parts;
        std::vector<RepMorphism> chosen;
        for (std::size_t j = 0; j < g; ++j) {
            if (H[j].empty()) continue;
            // Radical part of Hom(G_j, X) (right) or Hom(X, G_j) (left).
            std::vector<Vec> rad;
            for (std::size_t k = 0; k < g; ++k) {
                const auto& Jkj = side == Side::Right ? J_[j][k] : J_[k][j];
                for (const auto& h : H[k])
                    for (const auto& r : Jkj)
                        rad.push_back(flatten(side == Side::Right ? compose(h, r) : compose(r, h)));
            }
            std::vector<Vec> cols;
            for (const auto& h : H[j]) cols.push_back(flatten(h));
            std::size_t len = cols[0].size();
            Matrix R = rad.empty() ? Matrix(len, 0) : Matrix::from_columns(rad, len);
            auto keep = independent_extension(R, Matrix::from_columns(cols, len));
            for (auto idx : keep) {
                ap.summands.push_back(j);
                parts.push_back(gens_[j]);
                chosen.push_back(H[j][idx]);
            }
        }
        ap.object = direct_sum(parts, x.alg);
        const int n = x.alg->num_vertices();
        for (int v = 0; v < n; ++v) {
            Matrix M = side == Side::Right ? Matrix(x.dims[v], 0) : Matrix(0, x.dims[v]);
            for (const auto& c : chosen) M = side == Side::Right ? hstack(M, c.maps[v]) : vstack(M, c.maps[v]);
            if (side == Side::Right && M.cols() != ap.object.dims[v]) M = Matrix(x.dims[v], ap.object.dims[v]);
            if (side == Side::Left && M.rows() != ap.object.dims[v]) M = Matrix(ap.object.dims[v], x.dims[v]);
            ap.map.maps.push_back(M);
        }
        return ap;
    }

private:
    std::vector<Representation> gens_;
    std::vector<std::vector<std::vector<RepMorphism>>> J_;  // J_[j][k]: radical maps G_j -> G_k
};

}  // namespace

ProjResolution min_projective_resolution(const Representation& x, std::size_t length) {
    const AlgebraPtr& a = x.alg;
    ProjResolution r;
    r.module = x;
    Cover c = projective_cover(x);
    r.terms.push_back(c.proj);
    r.augmentation = c.epi;
    if (c.proj.empty()) {
        r.complete = true;
        return r;
    }
    Representation cur_mod = c.module;
    RepMorphism cur_epi = c.epi;
    ProjObject cur = c.proj;
    for (std::size_t k = 1; k <= length; ++k) {
        Subobject K = kernel(cur_mod, cur_epi);
        if (K.module.is_zero()) {
            r.complete = true;
            return r;
        }
        Cover ck = projective_cover(K.module);
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < ck.proj.tops.size(); ++j)
            gens.push_back(K.map.maps[ck.proj.tops[j]] * ck.generators[j]);
        r.diffs.push_back(pmap_from_generators(a, cur, ck.proj.tops, gens));
        r.terms.push_back(ck.proj);
        cur_mod = ck.module;
        cur_epi = ck.epi;
        cur = ck.proj;
    }
    r.complete = kernel(cur_mod, cur_epi).module.is_zero();
    return r;
}

InjResolution min_injective_resolution(const Representation& x, std::size_t length) {
    ProjResolution p = min_projective_resolution(dualize(x), length);
    InjResolution r;
    r.module = x;
    for (const auto& t : p.terms) r.terms.push_back(t.tops);
    for (const auto& d : p.diffs) r.diffs.push_back(dualize(to_morphism(p.module.alg, d)));
    r.coaugmentation = dualize(p.augmentation);
    r.complete = p.complete;
    return r;
}

bool check_resolution(const ProjResolution& r) {
    const AlgebraPtr& a = r.module.alg;
    std::vector<RepMorphism> d;
    for (const auto& p : r.diffs) d.push_back(to_morphism(a, p));
    if (!d.empty() && !is_zero(compose(r.augmentation, d[0]))) return false;
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        if (!is_zero(compose(d[k], d[k + 1]))) return false;
    for (const auto& p : r.diffs)
        for (std::size_t j = 0; j < p.dst.tops.size(); ++j)
            for (std::size_t k = 0; k < p.src.tops.size(); ++k)
                if (p.dst.tops[j] == p.src.tops[k]) {
                    int e = a->idempotent(p.src.tops[k]);
                    if (!p.entry[j][k][a->element(e).local].is_zero()) return false;
                }
    return true;
}

std::vector<std::size_t> ext_dims(const ProjResolution& rx, const Representation& y, std::size_t max_i) {
    return ext_dims_from(rx, y, max_i);
}

std::size_t ext_dim(const Representation& x, const Representation& y, std::size_t i) {
    ProjResolution r = min_projective_resolution(x, i + 1);
    return ext_dims_from(r, y, i)[i];
}

std::size_t ext_dim_injective(const Representation& x, const Representation& y, std::size_t i) {
    InjResolution r = min_injective_resolution(y, i + 1);
    if (i >= r.terms.size()) return 0;
    const AlgebraPtr& a = y.alg;
    auto hom_to = [&](std::size_t k) { return hom_basis(x, injective_sum(a, r.terms[k])); };
    // Matrix of phi |-> d_k o phi from Hom(X, I^k) to Hom(X, I^{k+1}).
    auto delta_rank = [&](std::size_t k, const std::vector<RepMorphism>& src) -> std::size_t {
        if (k >= r.diffs.size() || src.empty()) return 0;
        auto tgt = hom_to(k + 1);
        if (tgt.empty()) return 0;
        std::vector<Vec> cols;
        for (const auto& t : tgt) cols.push_back(flatten(t));
        CoordinateSolver cs(Matrix::from_columns(cols, cols[0].size()));
        std::vector<Vec> img;
        for (const auto& s : src) img.push_back(*cs.coords(flatten(compose(r.diffs[k], s))));
        return rank(Matrix::from_columns(img, tgt.size()));
    };
    auto Hi = hom_to(i);
    std::size_t out_rank = delta_rank(i, Hi);
    std::size_t in_rank = 0;
    if (i >= 1) in_rank = delta_rank(i - 1, hom_to(i - 1));
    return Hi.size() - out_rank - in_rank;
}

std::optional<std::size_t> proj_dim(const Representation& x, std::size_t cap) {
    if (x.is_zero()) return 0;
    ProjResolution r = min_projective_resolution(x, cap);
    if (!r.complete) return std::nullopt;
    return r.terms.size() - 1;
}

std::optional<std::size_t> inj_dim(const Representation& x, std::size_t cap) { return proj_dim(dualize(x), cap); }

std::vector<bool> projective_injective_vertices(const AlgebraPtr& a) {
    const int n = a->num_vertices();
    std::vector<Representation> P;
    for (int t = 0; t < n; ++t) P.push_back(projective(a, t));
    std::vector<bool> out(n, false);
    for (int s = 0; s < n; ++s) {
        Representation I = injective(a, s);
        for (int t = 0; t < n && !out[s]; ++t)
            if (P[t].dims == I.dims && is_isomorphic_indecomposable(P[t], I)) out[s] = true;
    }
    return out;
}

HomologicalDims homological_dimensions(const AlgebraPtr& a, std::optional<std::size_t> cap) {
    const std::size_t c = cap.value_or(default_cap(a));
    const int n = a->num_vertices();
    HomologicalDims h;
    std::size_t gl = 0;
    bool finite = true;
    for (int i = 0; i < n; ++i) {
        auto pd = proj_dim(simple(a, i), c);
        h.pd_simple.push_back(pd);
        if (pd)
            gl = std::max(gl, *pd);
        else
            finite = false;
    }
    if (finite) h.gl_dim = gl;
    auto pi = projective_injective_vertices(a);
    ProjObject all;
    for (int i = 0; i < n; ++i) all.tops.push_back(i);
    InjResolution r = min_injective_resolution(projective_sum(a, all), c + 1);
    std::size_t k = 0;
    while (k < r.terms.size() &&
           std::all_of(r.terms[k].begin(), r.terms[k].end(), [&](int s) { return (bool)pi[s]; }))
        ++k;
    h.dom_dim = k;
    h.dom_dim_infinite = k == r.terms.size() && r.complete;
    return h;
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::optional<std::size_t> cap) {
    const std::size_t c = cap.value_or(default_cap(a));
    std::size_t gl = 0;
    for (int i = 0; i < a->num_vertices(); ++i) {
        auto pd = proj_dim(simple(a, i), c);
        if (!pd) return std::nullopt;
        gl = std::max(gl, *pd);
    }
    return gl;
}

Approximation approximation(const Representation& x, const std::vector<Representation>& gens, Side side) {
    return AddCategory(gens).approximate(x, side);
}

std::vector<Representation> basic_summands(const Representation& x) {
    Decomposition d = decompose(x);
    std::vector<Representation> out;
    for (const auto& c : d.classes) out.push_back(d.summands[c.representative].module);
    return out;
}

bool in_add(const Representation& x, const std::vector<Representation>& gens) {
    if (x.is_zero()) return true;
    Decomposition d = decompose(x);
    for (const auto& c : d.classes) {
        const auto& m = d.summands[c.representative].module;
        bool found = false;
        for (const auto& g : gens)
            if (g.dims == m.dims && is_isomorphic_indecomposable(g, m)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

TiltingReport is_tilting(const Representation& t) {
    TiltingReport rep;
    const AlgebraPtr& a = t.alg;
    const std::size_t cap = default_cap(a);
    ProjResolution res = min_projective_resolution(t, cap);
    if (!res.complete) {
        rep.reason = "projective dimension exceeds " + std::to_string(cap);
        return rep;
    }
    rep.pd = res.terms.size() - 1;
    auto ext = ext_dims_from(res, t, *rep.pd);
    rep.self_orthogonal = true;
    for (std::size_t i = 1; i < ext.size(); ++i)
        if (ext[i] != 0) {
            rep.self_orthogonal = false;
            rep.reason = "Ext^" + std::to_string(i) + "(T,T) is nonzero";
            return rep;
        }
    auto gens = basic_summands(t);
    AddCategory cat(gens);
    ProjObject all;
    for (int i = 0; i < a->num_vertices(); ++i) all.tops.push_back(i);
    Representation C = projective_sum(a, all);
    for (std::size_t step = 0; step <= *rep.pd + 1; ++step) {
        if (C.is_zero()) {
            rep.coresolution_ok = true;
            break;
        }
        if (in_add(C, gens)) {
            rep.coresolution.push_back(C);
            rep.coresolution_ok = true;
            break;
        }
        Approximation ap = cat.approximate(C, Side::Left);
        if (!kernel(C, ap.map).module.is_zero()) {
            rep.reason = "left add(T)-approximation at step " + std::to_string(step) + " is not injective";
            return rep;
        }
        rep.coresolution.push_back(ap.object);
        C = cokernel(ap.object, ap.map).module;
    }
    if (!rep.coresolution_ok) {
        rep.reason = "coresolution of the regular module does not end in add T";
        return rep;
    }
    rep.is_tilting = true;
    return rep;
}

bool perp_membership(const Representation& t, const Representation& x) {
    const std::size_t cap = default_cap(t.alg);
    ProjResolution res = min_projective_resolution(t, cap);
    std::size_t bound = res.complete ? res.terms.size() - 1 : cap - 1;
    auto ext = ext_dims_from(res, x, bound);
    for (std::size_t i = 1; i < ext.size(); ++i)
        if (ext[i] != 0) return false;
    return true;
}

}  // namespace hart
