#include "hart/derived.hpp"

#include <algorithm>
#include <map>

#include "hart/tau.hpp"

namespace hart {

namespace {

const ProjObject kEmptyProj{};

RepMorphism zero_map(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
    RepMorphism f;
    for (std::size_t v = 0; v < from.size(); ++v) f.maps.emplace_back(to[v], from[v]);
    return f;
}

std::size_t rank_or_zero(const Matrix& m) { return (m.rows() == 0 || m.cols() == 0) ? 0 : rank(m); }

PMap zero_pmap(const AlgebraPtr& a, const ProjObject& src, const ProjObject& dst) {
    PMap f;
    f.src = src;
    f.dst = dst;
    f.entry.assign(dst.tops.size(), std::vector<Vec>(src.tops.size()));
    for (std::size_t j = 0; j < dst.tops.size(); ++j)
        for (std::size_t k = 0; k < src.tops.size(); ++k) f.entry[j][k] = Vec(a->dim(dst.tops[j], src.tops[k]));
    return f;
}

PMap negate(PMap f) {
    for (auto& row : f.entry)
        for (auto& v : row)
            for (auto& c : v) c = -c;
    return f;
}

bool pmap_is_zero(const PMap& f) {
    for (const auto& row : f.entry)
        for (const auto& v : row)
            for (const auto& c : v)
                if (!c.is_zero()) return false;
    return true;
}

// Module map from projective_sum(tops) sending generator k to gens[k].
RepMorphism map_from_generators(const AlgebraPtr& a, const Representation& target, const std::vector<int>& tops,
                                const std::vector<Vec>& gens) {
    RepMorphism f;
    for (int z = 0; z < a->num_vertices(); ++z) {
        Matrix M(target.dims[z], block_offset(a, tops, tops.size(), z));
        for (std::size_t k = 0; k < tops.size(); ++k) {
            std::size_t c0 = block_offset(a, tops, k, z);
            const auto& bl = a->basis(tops[k], z);
            for (std::size_t p = 0; p < bl.size(); ++p)
                M.set_col(c0 + p, evaluate(target, a->element(bl[p]).path) * gens[k]);
        }
        f.maps.push_back(std::move(M));
    }
    return f;
}

// A module map between projective sums read back as a PMap.
PMap pmap_of(const AlgebraPtr& a, const ProjObject& src, const ProjObject& dst, const RepMorphism& f) {
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < src.tops.size(); ++k) {
        int t = src.tops[k];
        std::size_t col = block_offset(a, src.tops, k, t) + a->element(a->idempotent(t)).local;
        gens.push_back(f.maps[t].col(col));
    }
    return pmap_from_generators(a, dst, src.tops, gens);
}

PerfectComplex trim(PerfectComplex p) {
    std::size_t b = 0, e = p.terms.size();
    while (b < e && p.terms[b].empty()) ++b;
    while (e > b && p.terms[e - 1].empty()) --e;
    if (b == e) return PerfectComplex{p.alg, 0, {}, {}};
    PerfectComplex out{p.alg, p.lo + (long)b, {}, {}};
    out.terms.assign(p.terms.begin() + b, p.terms.begin() + e);
    out.diffs.assign(p.diffs.begin() + b, p.diffs.begin() + (e - 1));
    return out;
}

const Representation& term_or(const ModuleComplex& c, long k, const Representation& zero) {
    if (k < c.lo || k > c.hi()) return zero;
    return c.terms[k - c.lo];
}

RepMorphism diff_or_zero(const ModuleComplex& c, long k, const Representation& zero) {
    if (k >= c.lo && k < c.hi()) return c.diffs[k - c.lo];
    return zero_map(term_or(c, k, zero).dims, term_or(c, k + 1, zero).dims);
}

std::string dims_string(const Representation& x) {
    std::string s;
    for (auto d : x.dims) s += std::to_string(d);
    return s;
}

std::vector<Representation> indecomposable_classes(const Representation& x) {
    std::vector<Representation> out;
    if (x.is_zero()) return out;
    Decomposition d = decompose(x);
    for (const auto& c : d.classes) out.push_back(d.summands[c.representative].module);
    return out;
}

std::optional<std::size_t> find_object(const std::vector<WindowObject>& objs, const Representation& x, long shift) {
    Fingerprint fx = fingerprint(x);
    for (std::size_t i = 0; i < objs.size(); ++i)
        if (objs[i].shift == shift && fingerprint(objs[i].module) == fx && is_isomorphic_indecomposable(objs[i].module, x))
            return i;
    return std::nullopt;
}

void require_tau_finite(const AlgebraPtr& a, std::size_t n) {
    try {
        tau_closure(a, n);
    } catch (const Error& e) {
        throw Error("NotTauFinite", e.what());
    }
}

UClosure closure_from(const PerfectComplex& start, std::size_t n, Window window) {
    if (window.lo > window.hi) throw Error("InvalidArgument", "empty window");
    UClosure u;
    u.n = n;
    u.window = window;
    std::map<long, PerfectComplex> powers;
    powers[0] = start;
    PerfectComplex cur = start;
    for (long p = 1; p <= window.hi; ++p) powers[p] = cur = serre_shift(cur, n, 1);
    cur = start;
    for (long p = -1; p >= window.lo; --p) powers[p] = cur = serre_shift(cur, n, -1);
    const std::size_t gap = split_gap(start.alg);
    std::map<std::string, int> name_count;
    for (long p = window.lo; p <= window.hi; ++p) {
        ShiftedModuleObject s = split_complex(powers[p], gap);
        for (const auto& part : s.parts)
            for (auto& m : indecomposable_classes(part.module)) {
                if (find_object(u.objects, m, part.shift)) continue;
                WindowObject o;
                o.shift = part.shift;
                o.power = p;
                o.name = dims_string(m) + "[" + std::to_string(part.shift) + "]";
                int k = name_count[o.name]++;
                if (k) o.name += "#" + std::to_string(k);
                o.module = std::move(m);
                u.objects.push_back(std::move(o));
            }
    }
    return u;
}

// Layout of Hom^m(P, Q) = prod_k Hom(P^k, Q^{k+m}) as a flat vector.
struct HomLayout {
    struct Block {
        long k;
        std::size_t j, l, offset, size;  // dst summand j, src summand l
    };
    std::vector<Block> blocks;
    std::map<long, std::size_t> first_block;  // degree k -> first block index
    std::size_t dim = 0;

    HomLayout(const AlgebraPtr& a, const PerfectComplex& p, const PerfectComplex& q, long m) {
        for (long k = p.lo; k <= p.hi(); ++k) {
            const ProjObject& src = p.term(k);
            const ProjObject& dst = q.term(k + m);
            first_block[k] = blocks.size();
            for (std::size_t j = 0; j < dst.tops.size(); ++j)
                for (std::size_t l = 0; l < src.tops.size(); ++l) {
                    std::size_t s = a->dim(dst.tops[j], src.tops[l]);
                    blocks.push_back({k, j, l, dim, s});
                    dim += s;
                }
        }
    }
    std::size_t offset(long k, std::size_t j, std::size_t l, std::size_t nsrc) const {
        return blocks[first_block.at(k) + j * nsrc + l].offset;
    }
};

}  // namespace

bool ModuleComplex::is_zero() const {
    return std::all_of(terms.begin(), terms.end(), [](const Representation& t) { return t.is_zero(); });
}

bool PerfectComplex::is_zero() const {
    return std::all_of(terms.begin(), terms.end(), [](const ProjObject& t) { return t.empty(); });
}

const ProjObject& PerfectComplex::term(long k) const {
    if (k < lo || k > hi()) return kEmptyProj;
    return terms[k - lo];
}

ModuleComplex stalk(const Representation& x, long degree) { return ModuleComplex{x.alg, degree, {x}, {}}; }

ModuleComplex to_module_complex(const PerfectComplex& p) {
    ModuleComplex c{p.alg, p.lo, {}, {}};
    for (const auto& t : p.terms) c.terms.push_back(projective_sum(p.alg, t));
    for (const auto& d : p.diffs) c.diffs.push_back(to_morphism(p.alg, d));
    return c;
}

PerfectComplex stalk_projective(const AlgebraPtr& a, const ProjObject& p, long degree) {
    return trim(PerfectComplex{a, degree, {p}, {}});
}

PerfectComplex resolution_complex(const Representation& x) {
    const AlgebraPtr& a = x.alg;
    if (x.is_zero()) return PerfectComplex{a, 0, {}, {}};
    ProjResolution r = min_projective_resolution(x, (std::size_t)a->num_vertices() + 1);
    if (!r.complete) throw Error("GlobalDimensionTooLarge", "resolution does not terminate");
    const std::size_t m = r.terms.size() - 1;
    PerfectComplex p{a, -(long)m, {}, {}};
    for (std::size_t i = 0; i <= m; ++i) p.terms.push_back(r.terms[m - i]);
    for (std::size_t i = 0; i < m; ++i) p.diffs.push_back(r.diffs[m - 1 - i]);
    return trim(p);
}

PerfectComplex shift(const PerfectComplex& p, long s) {
    PerfectComplex q = p;
    q.lo = p.lo - s;
    if (s % 2 != 0)
        for (auto& d : q.diffs) d = negate(d);
    return q;
}

ModuleComplex shift(const ModuleComplex& c, long s) {
    ModuleComplex q = c;
    q.lo = c.lo - s;
    if (s % 2 != 0)
        for (auto& d : q.diffs) d = scale(d, Rational(-1));
    return q;
}

PerfectComplex direct_sum(const PerfectComplex& p, const PerfectComplex& q) {
    if (p.terms.empty()) return q;
    if (q.terms.empty()) return p;
    const AlgebraPtr& a = p.alg;
    long lo = std::min(p.lo, q.lo), hi = std::max(p.hi(), q.hi());
    PerfectComplex s{a, lo, {}, {}};
    for (long k = lo; k <= hi; ++k) {
        ProjObject t = p.term(k);
        for (int x : q.term(k).tops) t.tops.push_back(x);
        s.terms.push_back(t);
    }
    for (long k = lo; k < hi; ++k) {
        PMap d = zero_pmap(a, s.term(k), s.term(k + 1));
        const std::size_t np_src = p.term(k).tops.size(), np_dst = p.term(k + 1).tops.size();
        if (k >= p.lo && k < p.hi()) {
            const PMap& e = p.diffs[k - p.lo];
            for (std::size_t j = 0; j < np_dst; ++j)
                for (std::size_t l = 0; l < np_src; ++l) d.entry[j][l] = e.entry[j][l];
        }
        if (k >= q.lo && k < q.hi()) {
            const PMap& e = q.diffs[k - q.lo];
            for (std::size_t j = 0; j < e.dst.tops.size(); ++j)
                for (std::size_t l = 0; l < e.src.tops.size(); ++l) d.entry[np_dst + j][np_src + l] = e.entry[j][l];
        }
        s.diffs.push_back(std::move(d));
    }
    return s;
}

bool is_complex(const ModuleComplex& c) {
    if (c.diffs.size() + 1 != c.terms.size() && !(c.terms.empty() && c.diffs.empty())) return false;
    for (std::size_t i = 0; i < c.diffs.size(); ++i)
        if (!is_morphism(c.terms[i], c.terms[i + 1], c.diffs[i])) return false;
    for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!is_zero(compose(c.diffs[i + 1], c.diffs[i]))) return false;
    return true;
}

bool is_complex(const PerfectComplex& p) {
    if (p.diffs.size() + 1 != p.terms.size() && !(p.terms.empty() && p.diffs.empty())) return false;
    for (std::size_t i = 0; i < p.diffs.size(); ++i) {
        const PMap& d = p.diffs[i];
        if (d.src.tops != p.terms[i].tops || d.dst.tops != p.terms[i + 1].tops) return false;
    }
    for (std::size_t i = 0; i + 1 < p.diffs.size(); ++i)
        if (!pmap_is_zero(compose(p.alg, p.diffs[i + 1], p.diffs[i]))) return false;
    return true;
}

std::vector<Representation> cohomology(const ModuleComplex& c) {
    std::vector<Representation> out;
    const Representation zero = zero_rep(c.alg);
    const int nv = c.alg->num_vertices();
    for (long k = c.lo; k <= c.hi(); ++k) {
        const Representation& x = c.terms[k - c.lo];
        Subobject z = kernel(x, diff_or_zero(c, k, zero));
        RepMorphism din = diff_or_zero(c, k - 1, zero);
        std::vector<Matrix> spans;
        for (int v = 0; v < nv; ++v) {
            const Matrix& inc = z.map.maps[v];
            if (inc.cols() == 0 || din.maps[v].cols() == 0) {
                spans.emplace_back(inc.cols(), 0);
                continue;
            }
            spans.push_back(coordinates(inc, din.maps[v]));
        }
        out.push_back(quotient(z.module, spans).module);
    }
    return out;
}

std::vector<Representation> cohomology(const PerfectComplex& p) { return cohomology(to_module_complex(p)); }

namespace {

// Matrix of D: Hom^m -> Hom^{m+1}.
Matrix hom_differential(const PerfectComplex& p, const PerfectComplex& q, long m, const HomLayout& from,
                        const HomLayout& to) {
    const AlgebraPtr& a = p.alg;
    Matrix D(to.dim, from.dim);
    const Rational sign = (m % 2 == 0) ? Rational(-1) : Rational(1);  // -(-1)^m
    for (const auto& b : from.blocks) {
        const ProjObject& src = p.term(b.k);
        const ProjObject& dst = q.term(b.k + m);
        const int y = dst.tops[b.j], x = src.tops[b.l];
        for (std::size_t r = 0; r < b.size; ++r) {
            std::size_t col = b.offset + r;
            Vec er(b.size);
            er[r] = 1;
            // d_Q o f, a component of degree k in Hom^{m+1}.
            long kq = b.k + m;
            if (kq >= q.lo && kq < q.hi()) {
                const PMap& dq = q.diffs[kq - q.lo];
                const ProjObject& dst2 = q.term(kq + 1);
                for (std::size_t l2 = 0; l2 < dst2.tops.size(); ++l2) {
                    int z = dst2.tops[l2];
                    Vec v = a->multiply(z, y, x, dq.entry[l2][b.j], er);
                    std::size_t off = to.offset(b.k, l2, b.l, src.tops.size());
                    for (std::size_t t = 0; t < v.size(); ++t)
                        if (!v[t].is_zero()) D(off + t, col) += v[t];
                }
            }
            // -(-1)^m f o d_P, a component of degree k-1.
            long kp = b.k - 1;
            if (kp >= p.lo && kp < p.hi()) {
                const PMap& dp = p.diffs[kp - p.lo];
                const ProjObject& src0 = p.term(kp);
                for (std::size_t t0 = 0; t0 < src0.tops.size(); ++t0) {
                    int w = src0.tops[t0];
                    Vec v = a->multiply(y, x, w, er, dp.entry[b.l][t0]);
                    std::size_t off = to.offset(kp, b.j, t0, src0.tops.size());
                    for (std::size_t t = 0; t < v.size(); ++t)
                        if (!v[t].is_zero()) D(off + t, col) += sign * v[t];
                }
            }
        }
    }
    return D;
}

ChainMap chain_map_from(const PerfectComplex& p, const PerfectComplex& q, long m, const HomLayout& L, const Vec& v) {
    ChainMap f;
    f.lo = p.lo;
    f.degree = m;
    for (long k = p.lo; k <= p.hi(); ++k) f.comps.push_back(zero_pmap(p.alg, p.term(k), q.term(k + m)));
    for (const auto& b : L.blocks)
        for (std::size_t r = 0; r < b.size; ++r) f.comps[b.k - p.lo].entry[b.j][b.l][r] = v[b.offset + r];
    return f;
}

}  // namespace

HomSpace hom_homotopy(const PerfectComplex& p, const PerfectComplex& q, long s, bool with_basis) {
    HomSpace h;
    if (p.terms.empty() || q.terms.empty()) return h;
    HomLayout Lprev(p.alg, p, q, s - 1), L(p.alg, p, q, s), Lnext(p.alg, p, q, s + 1);
    Matrix Din = hom_differential(p, q, s - 1, Lprev, L);
    Matrix Dout = hom_differential(p, q, s, L, Lnext);
    std::size_t rin = rank_or_zero(Din), rout = rank_or_zero(Dout);
    h.dim = L.dim - rout - rin;
    if (with_basis && h.dim > 0) {
        Matrix Z = Dout.rows() == 0 ? Matrix::identity(L.dim) : kernel_basis(Dout);
        Matrix B = Din.cols() == 0 ? Matrix(L.dim, 0) : column_space(Din);
        for (auto idx : independent_extension(B, Z)) h.basis.push_back(chain_map_from(p, q, s, L, Z.col(idx)));
    }
    return h;
}

std::size_t hom_homotopy_dim(const PerfectComplex& p, const PerfectComplex& q, long s) {
    return hom_homotopy(p, q, s, false).dim;
}

Replacement projective_replacement(const ModuleComplex& c) {
    const AlgebraPtr& a = c.alg;
    const int nv = a->num_vertices();
    Replacement out;
    out.complex = PerfectComplex{a, 0, {}, {}};
    if (c.terms.empty() || c.is_zero()) return out;
    const Representation zero = zero_rep(a);
    const long floor = c.lo - (long)nv - 2;

    // Built from the top: per degree the projective, its differential to
    // the degree above and the comparison map to C.
    std::vector<ProjObject> P;   // P[0] is the top degree
    std::vector<PMap> dP;        // dP[i]: P[i] -> P[i-1]
    std::vector<RepMorphism> phi;
    Representation Pup = zero;   // P^{k+1} as a module
    RepMorphism dPup = zero_map(zero.dims, zero.dims), phiup = zero_map(zero.dims, zero.dims);
    ProjObject Pup_obj;
    for (long k = c.hi();; --k) {
        if (k < floor) throw Error("GlobalDimensionTooLarge", "projective replacement does not terminate");
        const Representation& Ck = term_or(c, k, zero);
        const Representation& Ck1 = term_or(c, k + 1, zero);
        const Representation& Cm1 = term_or(c, k - 1, zero);
        RepMorphism dC = diff_or_zero(c, k, zero), dCm = diff_or_zero(c, k - 1, zero);
        const Representation& Pup2 = P.size() >= 2 ? projective_sum(a, P[P.size() - 2]) : zero;
        // E = P^{k+1} + C^k -> P^{k+2} + C^{k+1}, (x, y) -> (d x, phi x - d y).
        Representation E = direct_sum(Pup, Ck);
        RepMorphism F;
        for (int v = 0; v < nv; ++v) {
            std::size_t p1 = Pup.dims[v], ck = Ck.dims[v], p2 = Pup2.dims[v], ck1 = Ck1.dims[v];
            Matrix M(p2 + ck1, p1 + ck);
            if (p1 && p2) M.set_block(0, 0, dPup.maps[v]);
            if (p1 && ck1) M.set_block(p2, 0, phiup.maps[v]);
            if (ck && ck1) M.set_block(p2, p1, dC.maps[v].scaled(Rational(-1)));
            F.maps.push_back(std::move(M));
        }
        Subobject K = kernel(E, F);
        if (k < c.lo && K.module.is_zero()) break;
        auto R = radical_spans(K.module);
        ProjObject Pk;
        std::vector<Vec> xs, ys;
        for (int v = 0; v < nv; ++v) {
            const Matrix& inc = K.map.maps[v];
            if (inc.cols() == 0) continue;
            std::size_t p1 = Pup.dims[v], ck = Ck.dims[v];
            Matrix sub = R[v].cols() ? Matrix(inc * R[v]) : Matrix(p1 + ck, 0);
            if (Cm1.dims[v] && ck) {
                Matrix B(p1 + ck, Cm1.dims[v]);
                B.set_block(p1, 0, dCm.maps[v]);
                sub = hstack(sub, B);
            }
            for (auto idx : independent_extension(sub, inc)) {
                Vec g = inc.col(idx);
                Pk.tops.push_back(v);
                xs.emplace_back(g.begin(), g.begin() + p1);
                ys.emplace_back(g.begin() + p1, g.end());
            }
        }
        PMap d = pmap_from_generators(a, Pup_obj, Pk.tops, xs);
        RepMorphism f = map_from_generators(a, Ck, Pk.tops, ys);
        P.push_back(Pk);
        dP.push_back(d);
        phi.push_back(f);
        Pup = projective_sum(a, Pk);
        dPup = to_morphism(a, d);
        phiup = f;
        Pup_obj = Pk;
    }
    // Reassemble bottom-up and trim zero ends.
    const std::size_t L = P.size();
    PerfectComplex pc{a, c.hi() - (long)L + 1, {}, {}};
    std::vector<RepMorphism> q;
    for (std::size_t i = 0; i < L; ++i) {
        pc.terms.push_back(P[L - 1 - i]);
        q.push_back(phi[L - 1 - i]);
    }
    for (std::size_t i = 0; i + 1 < L; ++i) pc.diffs.push_back(dP[L - 1 - i]);
    std::size_t b = 0, e = L;
    while (b < e && pc.terms[b].empty()) ++b;
    while (e > b && pc.terms[e - 1].empty()) --e;
    out.complex = trim(pc);
    out.quasi_iso.assign(q.begin() + b, q.begin() + e);
    return out;
}

ModuleComplex nakayama(const PerfectComplex& p) {
    ModuleComplex c{p.alg, p.lo, {}, {}};
    for (const auto& t : p.terms) c.terms.push_back(injective_sum(p.alg, t.tops));
    for (const auto& d : p.diffs) c.diffs.push_back(nakayama(p.alg, d));
    return c;
}

PerfectComplex serre(const PerfectComplex& p) {
    if (p.terms.empty()) return p;
    return projective_replacement(nakayama(p)).complex;
}

PerfectComplex serre_inverse(const PerfectComplex& p) {
    if (p.terms.empty()) return p;
    const AlgebraPtr& a = p.alg;
    const AlgebraPtr op = a->opposite();
    const std::size_t L = p.terms.size();
    // D P over the opposite algebra, degrees negated.
    ModuleComplex dp{op, -p.hi(), {}, {}};
    for (std::size_t j = 0; j < L; ++j) dp.terms.push_back(dualize(projective_sum(a, p.terms[L - 1 - j])));
    for (std::size_t j = 0; j + 1 < L; ++j) dp.diffs.push_back(dualize(to_morphism(a, p.diffs[L - 2 - j])));
    PerfectComplex q = projective_replacement(dp).complex;
    if (q.terms.empty()) return PerfectComplex{a, 0, {}, {}};
    // D nu_op(q): projective A-modules again.
    const std::size_t M = q.terms.size();
    PerfectComplex out{a, -q.hi(), {}, {}};
    for (std::size_t j = 0; j < M; ++j) out.terms.push_back(q.terms[M - 1 - j]);
    for (std::size_t j = 0; j + 1 < M; ++j) {
        const PMap& d = q.diffs[M - 2 - j];  // q^{i} -> q^{i+1}
        RepMorphism f = dualize(nakayama(op, d));  // P_{tops of q^{i+1}} -> P_{tops of q^i}
        out.diffs.push_back(pmap_of(a, d.dst, d.src, f));
    }
    return trim(out);
}

PerfectComplex serre_shift(const PerfectComplex& p, std::size_t n, long power) {
    PerfectComplex cur = p;
    for (long i = 0; i < power; ++i) cur = shift(serre(cur), -(long)n);
    for (long i = 0; i > power; --i) cur = shift(serre_inverse(cur), (long)n);
    return cur;
}

std::size_t split_gap(const AlgebraPtr& a) {
    auto gl = global_dimension(a);
    if (!gl) throw Error("GlobalDimensionTooLarge", "global dimension exceeds the cap");
    return std::max<std::size_t>(1, *gl);
}

ShiftedModuleObject split_complex(const PerfectComplex& p, std::size_t gap) {
    ShiftedModuleObject s;
    if (p.terms.empty()) return s;
    auto H = cohomology(p);
    std::optional<long> prev;
    for (long k = p.lo; k <= p.hi(); ++k) {
        const Representation& h = H[k - p.lo];
        if (h.is_zero()) continue;
        if (prev && k - *prev < (long)gap)
            throw Error("SplitHypothesisViolated", "H^" + std::to_string(*prev) + " and H^" + std::to_string(k) +
                                                       " are nonzero and closer than " + std::to_string(gap));
        prev = k;
        s.parts.push_back({h, -k});
    }
    std::sort(s.parts.begin(), s.parts.end(), [](const ShiftedModule& x, const ShiftedModule& y) { return x.shift < y.shift; });
    return s;
}

PerfectComplex to_complex(const ShiftedModuleObject& x, const AlgebraPtr& a) {
    PerfectComplex out{a, 0, {}, {}};
    for (const auto& part : x.parts) out = direct_sum(out, shift(resolution_complex(part.module), part.shift));
    return out;
}

UClosure u_closure(const AlgebraPtr& a, std::size_t n, Window window) {
    require_tau_finite(a, n);
    ProjObject all;
    for (int v = 0; v < a->num_vertices(); ++v) all.tops.push_back(v);
    return closure_from(stalk_projective(a, all), n, window);
}

UClosure u_closure(const PerfectComplex& t, std::size_t n, Window window) {
    const AlgebraPtr& a = t.alg;
    require_tau_finite(a, n);
    auto H = cohomology(t);
    std::vector<long> degs;
    for (std::size_t i = 0; i < H.size(); ++i)
        if (!H[i].is_zero()) degs.push_back(t.lo + (long)i);
    if (degs.empty()) throw Error("NotTilting", "zero complex");
    if (degs.size() > 1) throw Error("Unsupported", "tilting complexes with cohomology in several degrees");
    const Representation& m = H[degs[0] - t.lo];
    TiltingReport tr = is_tilting(m);
    if (!tr.is_tilting) throw Error("NotTilting", tr.reason);
    // End(T) = End(H(T)), presented through the directed category add H(T).
    TauClosure fake;
    fake.alg = a;
    fake.n = n;
    for (auto& s : basic_summands(m)) {
        ClosureObject o;
        o.name = dims_string(s) + "#" + std::to_string(fake.objects.size());
        o.module = std::move(s);
        fake.objects.push_back(std::move(o));
    }
    ARQuiver ar;
    try {
        ar = ar_quiver(fake, false);
    } catch (const Error& e) {
        throw Error("Unsupported", std::string("End(T) is not directed: ") + e.what());
    }
    AlgebraPtr gamma = build_algebra(ar.presentation.opposite());
    auto gl = global_dimension(gamma);
    if (!gl || *gl > n)
        throw Error("GlobalDimensionTooLarge", "gl.dim End(T) exceeds " + std::to_string(n));
    UClosure u = closure_from(t, n, window);
    u.gl_dim_end = gl;
    return u;
}

WindowReport verify_ct_window(const std::vector<WindowObject>& objects, std::size_t n, Window window) {
    WindowReport rep;
    const std::size_t N = objects.size();
    if (N == 0) {
        rep.pass = true;
        return rep;
    }
    const AlgebraPtr& a = objects[0].module.alg;
    const std::size_t reslen = (std::size_t)a->num_vertices() + 1;
    std::vector<ProjResolution> res;
    for (const auto& o : objects) res.push_back(min_projective_resolution(o.module, reslen));
    // Hom(U[s], V[t][i]) = Hom(U, V[t - s + i]) = Ext^{t - s + i}(U, V) between stalks.
    if (n >= 2) {
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y) {
                ++rep.checked_pairs;
                long base = objects[y].shift - objects[x].shift;
                long top = base + (long)n - 1;
                if (top < 0) continue;
                std::size_t maxi = std::min<std::size_t>((std::size_t)top, res[x].terms.size());
                auto e = ext_dims(res[x], objects[y].module, maxi);
                for (long i = 1; i < (long)n; ++i) {
                    long d = base + i;
                    if (d < 0 || d > (long)maxi || e[d] == 0) continue;
                    rep.violations.push_back({x, y, i, e[d], objects[x].name, objects[y].name});
                }
            }
    }
    // S_n-stability of the object set inside the window.
    const std::size_t gap = split_gap(a);
    for (std::size_t x = 0; x < N; ++x) {
        PerfectComplex c = shift(resolution_complex(objects[x].module), objects[x].shift);
        for (int dir : {1, -1}) {
            bool boundary = (dir > 0) ? objects[x].power + 1 > window.hi : objects[x].power - 1 < window.lo;
            bool ok = true;
            try {
                ShiftedModuleObject img = split_complex(serre_shift(c, n, dir), gap);
                for (const auto& part : img.parts)
                    for (const auto& m : indecomposable_classes(part.module))
                        if (!find_object(objects, m, part.shift)) ok = false;
            } catch (const Error& e) {
                if (e.code() != "SplitHypothesisViolated") throw;
                ok = false;
                boundary = false;
            }
            if (ok) continue;
            rep.stability.push_back({x, dir, boundary});
            if (boundary) ++rep.boundary_flags;
        }
    }
    rep.pass = rep.violations.empty() &&
               std::all_of(rep.stability.begin(), rep.stability.end(), [](const StabilityIssue& s) { return s.boundary; });
    return rep;
}

}  // namespace hart
