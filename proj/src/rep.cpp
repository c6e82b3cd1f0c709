#include "hart/rep.hpp"

#include <numeric>
#include <stdexcept>

namespace hart {

namespace {

Matrix empty_cols(std::size_t rows) { return Matrix(rows, 0); }

// Basis for the span of the columns (pivot columns of m).
Matrix span_basis(const Matrix& m) {
    if (m.cols() == 0 || m.rows() == 0) return empty_cols(m.rows());
    return column_space(m);
}

void require_same_algebra(const Representation& x, const Representation& y) {
    if (x.alg.get() != y.alg.get()) throw std::invalid_argument("representations over different algebras");
}

}  // namespace

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Representation zero_rep(const AlgebraPtr& a) {
    Representation r;
    r.alg = a;
    r.dims.assign(a->num_vertices(), 0);
    for (const auto& ar : a->quiver().arrows()) {
        (void)ar;
        r.maps.emplace_back(0, 0);
    }
    return r;
}

Representation projective(const AlgebraPtr& a, int i) {
    Representation r;
    r.alg = a;
    const Quiver& q = a->quiver();
    for (int j = 0; j < a->num_vertices(); ++j) r.dims.push_back(a->dim(i, j));
    for (int b = 0; b < q.num_arrows(); ++b) {
        int from = q.arrow(b).from, to = q.arrow(b).to;
        Matrix m(r.dims[to], r.dims[from]);
        const auto& bl = a->basis(i, from);
        for (std::size_t p = 0; p < bl.size(); ++p)
            for (const auto& [k, c] : a->times_arrow(bl[p], b)) m(k, p) = c;
        r.maps.push_back(std::move(m));
    }
    return r;
}

Representation injective(const AlgebraPtr& a, int i) { return dualize(projective(a->opposite(), i)); }

Representation simple(const AlgebraPtr& a, int i) {
    Representation r = zero_rep(a);
    r.dims[i] = 1;
    const Quiver& q = a->quiver();
    for (int b = 0; b < q.num_arrows(); ++b) r.maps[b] = Matrix(r.dims[q.arrow(b).to], r.dims[q.arrow(b).from]);
    return r;
}

StdModules std_modules(const AlgebraPtr& a) {
    StdModules s;
    for (int i = 0; i < a->num_vertices(); ++i) {
        s.projectives.push_back(projective(a, i));
        s.injectives.push_back(injective(a, i));
        s.simples.push_back(simple(a, i));
    }
    return s;
}

Representation dualize(const Representation& x) {
    Representation r;
    r.alg = x.alg->opposite();
    r.dims = x.dims;
    for (const auto& m : x.maps) r.maps.push_back(m.transpose());
    return r;
}

RepMorphism dualize(const RepMorphism& f) {
    RepMorphism g;
    for (const auto& m : f.maps) g.maps.push_back(m.transpose());
    return g;
}

Matrix evaluate(const Representation& x, const Path& p) {
    Matrix m = Matrix::identity(x.dims[p.source]);
    for (int a : p.arrows) m = x.maps[a] * m;
    return m;
}

Matrix evaluate(const Representation& x, int i, int j, const Vec& u) {
    Matrix m(x.dims[j], x.dims[i]);
    const auto& bl = x.alg->basis(i, j);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) m += evaluate(x, x.alg->element(bl[k]).path).scaled(u[k]);
    return m;
}

bool is_valid(const Representation& x) {
    const Quiver& q = x.alg->quiver();
    if ((int)x.dims.size() != q.num_vertices() || (int)x.maps.size() != q.num_arrows()) return false;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (x.maps[a].rows() != x.dims[q.arrow(a).to] || x.maps[a].cols() != x.dims[q.arrow(a).from]) return false;
    for (const auto& r : x.alg->presentation().relations) {
        const Path& p0 = r.terms[0].second;
        Matrix sum(x.dims[p0.target], x.dims[p0.source]);
        for (const auto& [c, p] : r.terms) sum += evaluate(x, p).scaled(c);
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool is_morphism(const Representation& x, const Representation& y, const RepMorphism& f) {
    const Quiver& q = x.alg->quiver();
    if ((int)f.maps.size() != q.num_vertices()) return false;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (f.maps[v].rows() != y.dims[v] || f.maps[v].cols() != x.dims[v]) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).from, w = q.arrow(a).to;
        if (y.maps[a] * f.maps[v] != f.maps[w] * x.maps[a]) return false;
    }
    return true;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    require_same_algebra(x, y);
    Representation r;
    r.alg = x.alg;
    for (std::size_t v = 0; v < x.dims.size(); ++v) r.dims.push_back(x.dims[v] + y.dims[v]);
    for (std::size_t a = 0; a < x.maps.size(); ++a) r.maps.push_back(hart::direct_sum(x.maps[a], y.maps[a]));
    return r;
}

Representation direct_sum(const std::vector<Representation>& xs, const AlgebraPtr& a) {
    Representation r = zero_rep(a);
    const Quiver& q = a->quiver();
    for (int b = 0; b < q.num_arrows(); ++b) r.maps[b] = Matrix(0, 0);
    for (const auto& x : xs) r = direct_sum(r, x);
    return r;
}

RepMorphism sum_inclusion(const std::vector<Representation>& xs, std::size_t k) {
    RepMorphism f;
    std::size_t nv = xs.at(k).dims.size();
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t total = 0, off = 0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == k) off = total;
            total += xs[j].dims[v];
        }
        Matrix m(total, xs[k].dims[v]);
        for (std::size_t i = 0; i < xs[k].dims[v]; ++i) m(off + i, i) = 1;
        f.maps.push_back(std::move(m));
    }
    return f;
}

RepMorphism sum_projection(const std::vector<Representation>& xs, std::size_t k) {
    RepMorphism f = sum_inclusion(xs, k);
    for (auto& m : f.maps) m = m.transpose();
    return f;
}

RepMorphism identity(const Representation& x) {
    RepMorphism f;
    for (auto d : x.dims) f.maps.push_back(Matrix::identity(d));
    return f;
}

RepMorphism zero_morphism(const Representation& x, const Representation& y) {
    RepMorphism f;
    for (std::size_t v = 0; v < x.dims.size(); ++v) f.maps.emplace_back(y.dims[v], x.dims[v]);
    return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    RepMorphism h;
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
    return h;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
    RepMorphism h;
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(f.maps[v] + g.maps[v]);
    return h;
}

RepMorphism scale(const RepMorphism& f, const Rational& c) {
    RepMorphism h;
    for (const auto& m : f.maps) h.maps.push_back(m.scaled(c));
    return h;
}

bool is_zero(const RepMorphism& f) {
    for (const auto& m : f.maps)
        if (!m.is_zero()) return false;
    return true;
}

bool is_isomorphism(const RepMorphism& f) {
    for (const auto& m : f.maps) {
        if (m.rows() != m.cols()) return false;
        if (m.rows() && rank(m) != m.rows()) return false;
    }
    return true;
}

std::optional<RepMorphism> inverse(const RepMorphism& f) {
    RepMorphism g;
    for (const auto& m : f.maps) {
        if (m.rows() != m.cols()) return std::nullopt;
        if (m.rows() == 0) {
            g.maps.emplace_back(0, 0);
            continue;
        }
        auto inv = hart::inverse(m);
        if (!inv) return std::nullopt;
        g.maps.push_back(*inv);
    }
    return g;
}

Vec flatten(const RepMorphism& f) {
    Vec v;
    for (const auto& m : f.maps) v.insert(v.end(), m.entries().begin(), m.entries().end());
    return v;
}

RepMorphism unflatten(const Vec& v, const Representation& x, const Representation& y) {
    RepMorphism f;
    std::size_t off = 0;
    for (std::size_t k = 0; k < x.dims.size(); ++k) {
        std::size_t n = y.dims[k] * x.dims[k];
        f.maps.emplace_back(y.dims[k], x.dims[k], std::vector<Rational>(v.begin() + off, v.begin() + off + n));
        off += n;
    }
    return f;
}

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
    require_same_algebra(x, y);
    const Quiver& q = x.alg->quiver();
    const int n = q.num_vertices();
    std::vector<std::size_t> off(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + y.dims[v] * x.dims[v];
    const std::size_t unknowns = off[n];
    if (unknowns == 0) return {};
    // Unknown f_v(r, c) sits at off[v] + r * dims_x(v) + c.
    std::vector<Vec> rows;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).from, w = q.arrow(a).to;
        const Matrix& X = x.maps[a];
        const Matrix& Y = y.maps[a];
        for (std::size_t r = 0; r < y.dims[w]; ++r)
            for (std::size_t c = 0; c < x.dims[v]; ++c) {
                Vec row(unknowns);
                bool nz = false;
                // (Y_a f_v)(r, c) - (f_w X_a)(r, c)
                for (std::size_t s = 0; s < y.dims[v]; ++s)
                    if (!Y(r, s).is_zero()) {
                        row[off[v] + s * x.dims[v] + c] += Y(r, s);
                        nz = true;
                    }
                for (std::size_t t = 0; t < x.dims[w]; ++t)
                    if (!X(t, c).is_zero()) {
                        row[off[w] + r * x.dims[w] + t] -= X(t, c);
                        nz = true;
                    }
                if (nz) rows.push_back(std::move(row));
            }
    }
    Matrix k = rows.empty() ? Matrix::identity(unknowns) : kernel_basis(Matrix::from_rows(rows, unknowns));
    std::vector<RepMorphism> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(unflatten(k.col(j), x, y));
    return out;
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).size(); }

Subobject submodule(const Representation& x, const std::vector<Matrix>& spans) {
    const Quiver& q = x.alg->quiver();
    Subobject s;
    s.module.alg = x.alg;
    std::vector<Matrix> B;
    for (int v = 0; v < q.num_vertices(); ++v) {
        B.push_back(span_basis(spans[v]));
        s.module.dims.push_back(B.back().cols());
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).from, w = q.arrow(a).to;
        Matrix img = x.maps[a] * B[v];
        if (B[w].cols() == 0) {
            if (!img.is_zero()) throw std::logic_error("submodule: span not closed under arrows");
            s.module.maps.emplace_back(0, B[v].cols());
            continue;
        }
        auto c = solve_matrix(B[w], img);
        if (!c) throw std::logic_error("submodule: span not closed under arrows");
        s.module.maps.push_back(*c);
    }
    s.map.maps = B;
    return s;
}

Subobject generated_submodule(const Representation& x, const std::vector<Matrix>& gens) {
    const Quiver& q = x.alg->quiver();
    std::vector<Matrix> S;
    for (int v = 0; v < q.num_vertices(); ++v) S.push_back(span_basis(gens[v]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < q.num_arrows(); ++a) {
            int v = q.arrow(a).from, w = q.arrow(a).to;
            if (S[v].cols() == 0) continue;
            Matrix comb = span_basis(hstack(S[w], x.maps[a] * S[v]));
            if (comb.cols() > S[w].cols()) {
                S[w] = comb;
                changed = true;
            }
        }
    }
    return submodule(x, S);
}

Subobject quotient(const Representation& x, const std::vector<Matrix>& sub_spans) {
    const Quiver& q = x.alg->quiver();
    const int n = q.num_vertices();
    Subobject s;
    s.module.alg = x.alg;
    std::vector<Matrix> section(n);
    for (int v = 0; v < n; ++v) {
        std::size_t d = x.dims[v];
        Matrix B = span_basis(sub_spans[v]);
        auto units = complement_units(B, d);
        Matrix U(d, units.size());
        for (std::size_t k = 0; k < units.size(); ++k) U(units[k], k) = 1;
        Matrix proj(units.size(), d);
        if (!units.empty()) {
            auto T = hart::inverse(hstack(B, U));
            proj = T->block(B.cols(), 0, units.size(), d);
        }
        section[v] = U;
        s.map.maps.push_back(proj);
        s.module.dims.push_back(units.size());
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).from, w = q.arrow(a).to;
        s.module.maps.push_back(s.map.maps[w] * x.maps[a] * section[v]);
    }
    return s;
}

Subobject kernel(const Representation& x, const RepMorphism& f) {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        spans.push_back(x.dims[v] == 0 ? empty_cols(0) : kernel_basis(f.maps[v]));
    return submodule(x, spans);
}

Subobject cokernel(const Representation& y, const RepMorphism& f) {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < y.dims.size(); ++v) spans.push_back(f.maps[v]);
    return quotient(y, spans);
}

KerCokerIm ker_coker_im(const Representation& x, const Representation& y, const RepMorphism& f) {
    KerCokerIm r;
    r.kernel = kernel(x, f);
    r.image = submodule(y, f.maps);
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        const Matrix& B = r.image.map.maps[v];
        if (B.cols() == 0) {
            r.factor.maps.emplace_back(0, x.dims[v]);
            continue;
        }
        r.factor.maps.push_back(*solve_matrix(B, f.maps[v]));
    }
    r.cokernel = cokernel(y, f);
    return r;
}

std::vector<Matrix> radical_spans(const Representation& x) {
    const Quiver& q = x.alg->quiver();
    std::vector<Matrix> R;
    for (int w = 0; w < q.num_vertices(); ++w) {
        Matrix acc(x.dims[w], 0);
        for (int a : q.arrows_in(w))
            if (x.maps[a].cols() > 0) acc = hstack(acc, x.maps[a]);
        R.push_back(span_basis(acc));
    }
    return R;
}

std::vector<Matrix> socle_spans(const Representation& x) {
    const Quiver& q = x.alg->quiver();
    std::vector<Matrix> S;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(0, x.dims[v]);
        for (int a : q.arrows_out(v))
            if (x.maps[a].rows() > 0) acc = vstack(acc, x.maps[a]);
        if (x.dims[v] == 0)
            S.push_back(empty_cols(0));
        else if (acc.rows() == 0)
            S.push_back(Matrix::identity(x.dims[v]));
        else
            S.push_back(kernel_basis(acc));
    }
    return S;
}

TopRadSoc top_rad_soc(const Representation& x) {
    TopRadSoc t;
    auto R = radical_spans(x);
    t.rad = submodule(x, R);
    t.top = quotient(x, R);
    t.soc = submodule(x, socle_spans(x));
    return t;
}

std::vector<std::size_t> top_dims(const Representation& x) {
    auto R = radical_spans(x);
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < x.dims.size(); ++v) d.push_back(x.dims[v] - R[v].cols());
    return d;
}

std::vector<std::size_t> socle_dims(const Representation& x) {
    auto S = socle_spans(x);
    std::vector<std::size_t> d;
    for (const auto& m : S) d.push_back(m.cols());
    return d;
}

Fingerprint fingerprint(const Representation& x) { return Fingerprint{x.dims, top_dims(x), socle_dims(x)}; }

// --- projective sums ------------------------------------------------------

std::size_t block_offset(const AlgebraPtr& a, const std::vector<int>& tops, std::size_t k, int z) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < k; ++j) off += a->dim(tops[j], z);
    return off;
}

Representation projective_sum(const AlgebraPtr& a, const ProjObject& p) {
    std::vector<Representation> parts;
    for (int x : p.tops) parts.push_back(projective(a, x));
    return direct_sum(parts, a);
}

Representation injective_sum(const AlgebraPtr& a, const std::vector<int>& socles) {
    std::vector<Representation> parts;
    for (int x : socles) parts.push_back(injective(a, x));
    return direct_sum(parts, a);
}

RepMorphism to_morphism(const AlgebraPtr& a, const PMap& f) {
    const int n = a->num_vertices();
    RepMorphism m;
    for (int z = 0; z < n; ++z) {
        std::size_t rows = block_offset(a, f.dst.tops, f.dst.tops.size(), z);
        std::size_t cols = block_offset(a, f.src.tops, f.src.tops.size(), z);
        Matrix M(rows, cols);
        for (std::size_t k = 0; k < f.src.tops.size(); ++k) {
            int x = f.src.tops[k];
            std::size_t c0 = block_offset(a, f.src.tops, k, z);
            const auto& bx = a->basis(x, z);
            for (std::size_t j = 0; j < f.dst.tops.size(); ++j) {
                int y = f.dst.tops[j];
                std::size_t r0 = block_offset(a, f.dst.tops, j, z);
                const Vec& u = f.entry[j][k];
                const auto& byx = a->basis(y, x);
                for (std::size_t r = 0; r < u.size(); ++r) {
                    if (u[r].is_zero()) continue;
                    for (std::size_t p = 0; p < bx.size(); ++p) {
                        const Vec& prod = a->product(byx[r], bx[p]);
                        for (std::size_t t = 0; t < prod.size(); ++t)
                            if (!prod[t].is_zero()) M(r0 + t, c0 + p) += u[r] * prod[t];
                    }
                }
            }
        }
        m.maps.push_back(std::move(M));
    }
    return m;
}

PMap compose(const AlgebraPtr& a, const PMap& g, const PMap& f) {
    PMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.entry.assign(g.dst.tops.size(), std::vector<Vec>(f.src.tops.size()));
    for (std::size_t l = 0; l < g.dst.tops.size(); ++l)
        for (std::size_t k = 0; k < f.src.tops.size(); ++k) {
            int z = g.dst.tops[l], x = f.src.tops[k];
            Vec acc(a->dim(z, x));
            for (std::size_t j = 0; j < f.dst.tops.size(); ++j) {
                int y = f.dst.tops[j];
                Vec t = a->multiply(z, y, x, g.entry[l][j], f.entry[j][k]);
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
            }
            h.entry[l][k] = std::move(acc);
        }
    return h;
}

RepMorphism nakayama(const AlgebraPtr& a, const PMap& f) {
    const int n = a->num_vertices();
    RepMorphism m;
    // I_x at z is the dual of basis(z, x).
    auto off = [&](const std::vector<int>& socs, std::size_t k, int z) {
        std::size_t o = 0;
        for (std::size_t j = 0; j < k; ++j) o += a->dim(z, socs[j]);
        return o;
    };
    for (int z = 0; z < n; ++z) {
        Matrix M(off(f.dst.tops, f.dst.tops.size(), z), off(f.src.tops, f.src.tops.size(), z));
        for (std::size_t j = 0; j < f.dst.tops.size(); ++j) {
            int y = f.dst.tops[j];
            std::size_t r0 = off(f.dst.tops, j, z);
            const auto& bzy = a->basis(z, y);
            for (std::size_t k = 0; k < f.src.tops.size(); ++k) {
                int x = f.src.tops[k];
                std::size_t c0 = off(f.src.tops, k, z);
                const Vec& u = f.entry[j][k];
                const auto& byx = a->basis(y, x);
                // Entry [q][p] = coefficient of p in q * u.
                for (std::size_t qi = 0; qi < bzy.size(); ++qi)
                    for (std::size_t r = 0; r < u.size(); ++r) {
                        if (u[r].is_zero()) continue;
                        const Vec& prod = a->product(bzy[qi], byx[r]);
                        for (std::size_t p = 0; p < prod.size(); ++p)
                            if (!prod[p].is_zero()) M(r0 + qi, c0 + p) += u[r] * prod[p];
                    }
            }
        }
        m.maps.push_back(std::move(M));
    }
    return m;
}

Cover projective_cover(const Representation& x) {
    const AlgebraPtr& a = x.alg;
    const int n = a->num_vertices();
    Cover c;
    auto R = radical_spans(x);
    for (int v = 0; v < n; ++v) {
        auto units = complement_units(R[v], x.dims[v]);
        for (auto u : units) {
            c.proj.tops.push_back(v);
            Vec g(x.dims[v]);
            g[u] = 1;
            c.generators.push_back(g);
        }
    }
    c.module = projective_sum(a, c.proj);
    for (int z = 0; z < n; ++z) {
        Matrix M(x.dims[z], c.module.dims[z]);
        for (std::size_t k = 0; k < c.proj.tops.size(); ++k) {
            int top = c.proj.tops[k];
            std::size_t c0 = block_offset(a, c.proj.tops, k, z);
            const auto& bl = a->basis(top, z);
            for (std::size_t p = 0; p < bl.size(); ++p)
                M.set_col(c0 + p, evaluate(x, a->element(bl[p]).path) * c.generators[k]);
        }
        c.epi.maps.push_back(std::move(M));
    }
    return c;
}

Envelope injective_envelope(const Representation& x) {
    Cover c = projective_cover(dualize(x));
    Envelope e;
    e.socles = c.proj.tops;
    e.module = injective_sum(x.alg, e.socles);
    e.mono = dualize(c.epi);
    return e;
}

PMap pmap_from_generators(const AlgebraPtr& a, const ProjObject& target, const std::vector<int>& tops,
                          const std::vector<Vec>& gens) {
    PMap f;
    f.src.tops = tops;
    f.dst = target;
    f.entry.assign(target.tops.size(), std::vector<Vec>(tops.size()));
    for (std::size_t k = 0; k < tops.size(); ++k)
        for (std::size_t j = 0; j < target.tops.size(); ++j) {
            std::size_t o = block_offset(a, target.tops, j, tops[k]);
            std::size_t d = a->dim(target.tops[j], tops[k]);
            f.entry[j][k] = Vec(gens[k].begin() + o, gens[k].begin() + o + d);
        }
    return f;
}

}  // namespace hart
