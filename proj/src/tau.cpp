#include "hart/tau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hart {

namespace {

struct TauData {
    ProjResolution res;
    bool zero = true;
    Subobject kernel;  // inside injective_sum(P_n tops)
};

TauData tau_data(const Representation& x, std::size_t n) {
    TauData t;
    t.res = min_projective_resolution(x, n);
    if (t.res.terms.size() <= n) return t;
    const AlgebraPtr& a = x.alg;
    Representation src = injective_sum(a, t.res.terms[n].tops);
    t.kernel = kernel(src, nakayama(a, t.res.diffs[n - 1]));
    t.zero = t.kernel.module.is_zero();
    return t;
}

std::size_t sum_dim(const AlgebraPtr& a, const ProjObject& p, int z) {
    std::size_t s = 0;
    for (int t : p.tops) s += a->dim(t, z);
    return s;
}

// Generator e_{tops[k]} of a projective sum, at vertex tops[k].
Vec generator_vector(const AlgebraPtr& a, const ProjObject& p, std::size_t k) {
    int t = p.tops[k];
    Vec g(sum_dim(a, p, t));
    g[block_offset(a, p.tops, k, t) + a->element(a->idempotent(t)).local] = 1;
    return g;
}

Vec solve_exact(const Matrix& m, const Vec& w) {
    if (m.cols() == 0) {
        for (const auto& c : w)
            if (!c.is_zero()) throw std::logic_error("tau: chain map lift failed");
        return {};
    }
    auto v = solve(m, w);
    if (!v) throw std::logic_error("tau: chain map lift failed");
    return *v;
}

// Lifts f: X -> Y to PMaps f_k: P_k(X) -> P_k(Y), k = 0..n.
std::vector<PMap> lift_chain(const ProjResolution& rx, const ProjResolution& ry, const RepMorphism& f,
                             std::size_t n) {
    const AlgebraPtr& a = rx.module.alg;
    auto target = [&](std::size_t k) { return k < ry.terms.size() ? ry.terms[k] : ProjObject{}; };
    std::vector<PMap> fs;
    {
        const ProjObject& p0 = rx.terms[0];
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < p0.tops.size(); ++k) {
            int t = p0.tops[k];
            Vec w = f.maps[t] * (rx.augmentation.maps[t] * generator_vector(a, p0, k));
            gens.push_back(target(0).empty() ? Vec{} : solve_exact(ry.augmentation.maps[t], w));
        }
        fs.push_back(pmap_from_generators(a, target(0), p0.tops, gens));
    }
    for (std::size_t k = 1; k <= n && k < rx.terms.size(); ++k) {
        const ProjObject& pk = rx.terms[k];
        ProjObject tk = target(k);
        std::vector<Vec> gens(pk.tops.size());
        if (!tk.empty()) {
            PMap h = compose(a, fs[k - 1], rx.diffs[k - 1]);
            RepMorphism dy = to_morphism(a, ry.diffs[k - 1]);
            const ProjObject& prev = ry.terms[k - 1];
            for (std::size_t j = 0; j < pk.tops.size(); ++j) {
                int y = pk.tops[j];
                Vec w(sum_dim(a, prev, y));
                for (std::size_t i = 0; i < prev.tops.size(); ++i) {
                    std::size_t o = block_offset(a, prev.tops, i, y);
                    for (std::size_t p = 0; p < h.entry[i][j].size(); ++p) w[o + p] = h.entry[i][j][p];
                }
                gens[j] = solve_exact(dy.maps[y], w);
            }
        }
        fs.push_back(pmap_from_generators(a, tk, pk.tops, gens));
    }
    return fs;
}

RepMorphism restrict_to_kernels(const Subobject& kx, const Subobject& ky, const RepMorphism& g) {
    RepMorphism out;
    for (std::size_t v = 0; v < kx.module.dims.size(); ++v) {
        std::size_t dx = kx.module.dims[v], dy = ky.module.dims[v];
        if (dx == 0 || dy == 0) {
            out.maps.emplace_back(dy, dx);
            continue;
        }
        auto m = solve_matrix(ky.map.maps[v], g.maps[v] * kx.map.maps[v]);
        if (!m) throw std::logic_error("tau: induced map does not land in the kernel");
        out.maps.push_back(*m);
    }
    return out;
}

Representation tau_forward(const Representation& x, std::size_t n) {
    TauData t = tau_data(x, n);
    return t.zero ? zero_rep(x.alg) : t.kernel.module;
}

RepMorphism tau_morphism_forward(const Representation& x, const Representation& y, const RepMorphism& f,
                                 std::size_t n) {
    TauData tx = tau_data(x, n), ty = tau_data(y, n);
    Representation X = tx.zero ? zero_rep(x.alg) : tx.kernel.module;
    Representation Y = ty.zero ? zero_rep(y.alg) : ty.kernel.module;
    if (tx.zero || ty.zero) return zero_morphism(X, Y);
    auto fs = lift_chain(tx.res, ty.res, f, n);
    return restrict_to_kernels(tx.kernel, ty.kernel, nakayama(x.alg, fs[n]));
}

std::string vertex_label(const AlgebraPtr& a, int v) { return a->quiver().vertex(v); }

}  // namespace

Representation tau(const Representation& x, std::size_t n, TauDirection dir) {
    if (n == 0) throw Error("InvalidArgument", "tau_n needs n >= 1");
    if (dir == TauDirection::Forward) return tau_forward(x, n);
    return dualize(tau_forward(dualize(x), n));
}

RepMorphism tau_morphism(const Representation& x, const Representation& y, const RepMorphism& f, std::size_t n,
                         TauDirection dir) {
    if (n == 0) throw Error("InvalidArgument", "tau_n needs n >= 1");
    if (dir == TauDirection::Forward) return tau_morphism_forward(x, y, f, n);
    return dualize(tau_morphism_forward(dualize(y), dualize(x), dualize(f), n));
}

// --- closure ---------------------------------------------------------------

Representation TauClosure::generator() const { return direct_sum(modules(), alg); }

std::vector<Representation> TauClosure::modules() const {
    std::vector<Representation> out;
    for (const auto& o : objects) out.push_back(o.module);
    return out;
}

std::optional<std::size_t> TauClosure::tau_of(std::size_t i) const {
    if (objects[i].tau.size() != 1) return std::nullopt;
    return objects[i].tau[0];
}

std::optional<std::size_t> TauClosure::tau_inverse_of(std::size_t i) const {
    for (std::size_t j = 0; j < objects.size(); ++j)
        if (tau_of(j) == i) return j;
    return std::nullopt;
}

std::optional<std::size_t> TauClosure::find(const Representation& x) const {
    Fingerprint fx = fingerprint(x);
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (fingerprint(objects[i].module) == fx && is_isomorphic_indecomposable(objects[i].module, x)) return i;
    return std::nullopt;
}

TauClosure tau_closure(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap, bool check_gl_dim) {
    if (n == 0) throw Error("InvalidArgument", "tau_n needs n >= 1");
    if (check_gl_dim) {
        auto g = global_dimension(a);
        if (!g || *g > n)
            throw Error("GlobalDimensionTooLarge",
                        "gl.dim " + (g ? std::to_string(*g) : std::string(">cap")) + " > " + std::to_string(n));
    }
    TauClosure c;
    c.alg = a;
    c.n = n;
    std::set<std::string> names;
    auto add_object = [&](Representation m, std::size_t layer, int root) {
        ClosureObject o;
        o.module = std::move(m);
        o.layer = layer;
        o.root = root;
        std::string base = "I" + vertex_label(a, root);
        if (layer > 0) base = "t" + std::to_string(layer) + "." + base;
        std::string name = base;
        for (int k = 2; names.count(name); ++k) name = base + "#" + std::to_string(k);
        names.insert(name);
        o.name = name;
        c.objects.push_back(std::move(o));
        return c.objects.size() - 1;
    };
    std::vector<Fingerprint> fps;
    std::vector<std::size_t> frontier;
    for (int x = 0; x < a->num_vertices(); ++x) {
        frontier.push_back(add_object(injective(a, x), 0, x));
        fps.push_back(fingerprint(c.objects.back().module));
    }
    // Discover every object reachable by tau_n.
    for (std::size_t round = 0; !frontier.empty(); ++round) {
        if (round >= layer_cap)
            throw Error("LayerCapExceeded", "no zero layer within " + std::to_string(layer_cap) +
                                                " applications; possibly not tau_n-finite");
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            Representation t = tau(c.objects[idx].module, n);
            if (t.is_zero()) continue;
            Decomposition d = decompose(t);
            if (d.summands.size() != 1) c.tau_indecomposable = false;
            for (const auto& s : d.summands) {
                Fingerprint fs = fingerprint(s.module);
                std::optional<std::size_t> hit;
                for (std::size_t j = 0; j < c.objects.size() && !hit; ++j)
                    if (fps[j] == fs && is_isomorphic_indecomposable(c.objects[j].module, s.module)) hit = j;
                if (!hit) {
                    hit = add_object(s.module, c.objects[idx].layer + 1, c.objects[idx].root);
                    fps.push_back(fs);
                    next.push_back(*hit);
                }
                c.objects[idx].tau.push_back(*hit);
            }
        }
        frontier = next;
    }
    // Layers from the tau graph: layer i+1 = summands of tau_n of layer i.
    std::vector<std::size_t> cur;
    for (std::size_t i = 0; i < c.objects.size(); ++i)
        if (c.objects[i].layer == 0) cur.push_back(i);
    while (!cur.empty()) {
        if (c.layers.size() >= layer_cap)
            throw Error("LayerCapExceeded", "tau_n^i(D Lambda) nonzero for i = " + std::to_string(layer_cap) +
                                                "; not tau_n-finite");
        c.layers.push_back(cur);
        std::set<std::size_t> nxt;
        for (auto i : cur)
            for (auto j : c.objects[i].tau) nxt.insert(j);
        cur.assign(nxt.begin(), nxt.end());
    }
    c.tau_finite = true;
    std::vector<int> seen(c.objects.size(), 0);
    for (const auto& l : c.layers)
        for (auto i : l) ++seen[i];
    for (int s : seen)
        if (s != 1) c.layers_disjoint = false;
    // ell by memoized recursion; the tau graph is acyclic here.
    std::vector<int> ell(c.objects.size(), -1);
    std::function<std::size_t(std::size_t)> get = [&](std::size_t i) -> std::size_t {
        if (ell[i] >= 0) return (std::size_t)ell[i];
        std::size_t e = 0;
        for (auto j : c.objects[i].tau) e = std::max(e, get(j) + 1);
        ell[i] = (int)e;
        return e;
    };
    for (std::size_t i = 0; i < c.objects.size(); ++i) c.objects[i].ell = get(i);
    return c;
}

RigidityReport is_n_rigid(const std::vector<Representation>& modules, std::size_t n) {
    RigidityReport r;
    if (n <= 1) return r;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        ProjResolution res = min_projective_resolution(modules[i], n);
        for (std::size_t j = 0; j < modules.size(); ++j) {
            auto e = ext_dims(res, modules[j], n - 1);
            for (std::size_t d = 1; d < n; ++d)
                if (e[d] != 0) {
                    r.rigid = false;
                    r.violations.push_back({i, j, d, e[d]});
                }
        }
    }
    return r;
}

// --- Auslander-Reiten quiver ----------------------------------------------

namespace {

Matrix columns_of(const std::vector<Vec>& cols, std::size_t len) {
    return cols.empty() ? Matrix(len, 0) : Matrix::from_columns(cols, len);
}

std::size_t flat_len(const Representation& x, const Representation& y) {
    std::size_t s = 0;
    for (std::size_t v = 0; v < x.dims.size(); ++v) s += x.dims[v] * y.dims[v];
    return s;
}

// Path bases of Hom(X, Y) for a directed category.
struct PathBasis {
    std::vector<Path> paths;
    std::vector<RepMorphism> evals;
    CoordinateSolver solver;
};

}  // namespace

ARQuiver ar_quiver(const TauClosure& c, bool with_tau_minus) {
    const std::size_t N = c.objects.size();
    const auto& M = c.objects;
    ARQuiver ar;
    std::vector<std::vector<std::vector<RepMorphism>>> H(N, std::vector<std::vector<RepMorphism>>(N));
    ar.hom_dims.assign(N, std::vector<std::size_t>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            H[i][j] = hom_basis(M[i].module, M[j].module);
            ar.hom_dims[i][j] = H[i][j].size();
        }
    for (std::size_t i = 0; i < N; ++i)
        if (ar.hom_dims[i][i] != 1)
            throw Error("NotDirected", "End(" + M[i].name + ") has dimension " + std::to_string(ar.hom_dims[i][i]));
    // Linear extension of the Hom order, smallest index first.
    {
        std::vector<std::size_t> indeg(N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (i != j && ar.hom_dims[i][j]) ++indeg[j];
        std::set<std::size_t> ready;
        for (std::size_t i = 0; i < N; ++i)
            if (!indeg[i]) ready.insert(i);
        while (!ready.empty()) {
            std::size_t i = *ready.begin();
            ready.erase(ready.begin());
            ar.order.push_back(i);
            for (std::size_t j = 0; j < N; ++j)
                if (i != j && ar.hom_dims[i][j] && --indeg[j] == 0) ready.insert(j);
        }
        if (ar.order.size() != N) throw Error("NotDirected", "nonzero Hom spaces form a cycle");
    }
    std::vector<std::size_t> pos(N);
    for (std::size_t k = 0; k < N; ++k) pos[ar.order[k]] = k;

    Quiver& q = ar.presentation.quiver;
    for (const auto& o : M) q.add_vertex(o.name);

    // Irreducible maps Z -> Y complement J^2(Z,Y) = sum over arrows c: Z -> W
    // of Hom(W,Y) f_c inside Hom(Z,Y).
    std::vector<std::pair<std::size_t, std::size_t>> arrow_ends;
    for (std::size_t y : ar.order) {
        for (std::size_t z = 0; z < N; ++z) {
            if (z == y || !ar.hom_dims[z][y]) continue;
            std::size_t len = flat_len(M[z].module, M[y].module);
            std::vector<Vec> j2;
            for (std::size_t a = 0; a < arrow_ends.size(); ++a) {
                if (arrow_ends[a].first != z) continue;
                std::size_t w = arrow_ends[a].second;
                for (const auto& h : H[w][y]) j2.push_back(flatten(compose(h, ar.arrow_maps[a])));
            }
            std::vector<Vec> hom;
            for (const auto& h : H[z][y]) hom.push_back(flatten(h));
            auto keep = independent_extension(columns_of(j2, len), columns_of(hom, len));
            for (std::size_t k = 0; k < keep.size(); ++k) {
                std::string name = M[z].name + ">" + M[y].name;
                if (keep.size() > 1) name += "#" + std::to_string(k + 1);
                q.add_arrow(name, (int)z, (int)y);
                arrow_ends.push_back({z, y});
                ar.arrow_maps.push_back(H[z][y][keep[k]]);
            }
        }
    }

    // Path bases S(X,Y) and minimal relations, X from the end of the order.
    std::vector<std::vector<PathBasis>> S(N, std::vector<PathBasis>(N));
    std::vector<std::vector<Matrix>> ker(N, std::vector<Matrix>(N));
    // Coordinates of the columns (b, s) for Phi_{X,Y}: s runs over S(X, source b).
    auto block_sizes = [&](std::size_t x, std::size_t y) {
        std::vector<std::size_t> sz;
        for (int b : q.arrows_in((int)y)) sz.push_back(S[x][q.arrow(b).from].paths.size());
        return sz;
    };
    for (auto xi = ar.order.rbegin(); xi != ar.order.rend(); ++xi) {
        const std::size_t x = *xi;
        for (std::size_t y : ar.order) {
            if (pos[y] < pos[x]) continue;
            PathBasis& pb = S[x][y];
            std::size_t len = flat_len(M[x].module, M[y].module);
            if (y == x) {
                pb.paths.push_back(Path::trivial((int)x));
                pb.evals.push_back(identity(M[x].module));
                pb.solver = CoordinateSolver(columns_of({flatten(pb.evals[0])}, len));
                ker[x][y] = Matrix(0, 0);
                continue;
            }
            std::vector<Vec> cols;
            std::vector<Path> cand;
            std::vector<RepMorphism> cand_eval;
            for (int b : q.arrows_in((int)y)) {
                const PathBasis& pre = S[x][q.arrow(b).from];
                for (std::size_t s = 0; s < pre.paths.size(); ++s) {
                    RepMorphism e = compose(ar.arrow_maps[b], pre.evals[s]);
                    cols.push_back(flatten(e));
                    cand.push_back(pre.paths[s].then(Path::of_arrow(q, b)));
                    cand_eval.push_back(std::move(e));
                }
            }
            Matrix Phi = columns_of(cols, len);
            auto keep = independent_extension(Matrix(len, 0), Phi);
            if (keep.size() != ar.hom_dims[x][y])
                throw std::logic_error("ar_quiver: paths do not span Hom(" + M[x].name + ", " + M[y].name + ")");
            for (auto k : keep) {
                pb.paths.push_back(cand[k]);
                pb.evals.push_back(cand_eval[k]);
            }
            if (!keep.empty()) {
                std::vector<Vec> bc;
                for (const auto& e : pb.evals) bc.push_back(flatten(e));
                pb.solver = CoordinateSolver(columns_of(bc, len));
            }
            const std::size_t m = cols.size();
            Matrix K = m == 0 ? Matrix(0, 0) : (len == 0 ? Matrix::identity(m) : kernel_basis(Phi));
            ker[x][y] = K;
            if (K.cols() == 0) continue;
            // Kernel elements already generated by relations starting at a
            // successor X' of X: precompose with the arrow X -> X'.
            auto sizes = block_sizes(x, y);
            std::vector<Vec> pushed;
            for (int a : q.arrows_out((int)x)) {
                std::size_t x2 = q.arrow(a).to;
                const Matrix& K2 = ker[x2][y];
                if (K2.cols() == 0) continue;
                auto sizes2 = block_sizes(x2, y);
                for (std::size_t col = 0; col < K2.cols(); ++col) {
                    Vec out(m);
                    std::size_t off2 = 0, off = 0;
                    auto ins = q.arrows_in((int)y);
                    for (std::size_t bi = 0; bi < ins.size(); ++bi) {
                        std::size_t yp = q.arrow(ins[bi]).from;
                        RepMorphism h = zero_morphism(M[x].module, M[yp].module);
                        for (std::size_t s = 0; s < sizes2[bi]; ++s) {
                            const Rational& k = K2(off2 + s, col);
                            if (!k.is_zero())
                                h = add(h, scale(compose(S[x2][yp].evals[s], ar.arrow_maps[a]), k));
                        }
                        if (sizes[bi] == 0) {
                            if (!is_zero(h)) throw std::logic_error("ar_quiver: nonzero map into empty Hom");
                        } else {
                            auto cc = S[x][yp].solver.coords(flatten(h));
                            if (!cc) throw std::logic_error("ar_quiver: path basis does not span");
                            for (std::size_t s = 0; s < sizes[bi]; ++s) out[off + s] = (*cc)[s];
                        }
                        off2 += sizes2[bi];
                        off += sizes[bi];
                    }
                    pushed.push_back(out);
                }
            }
            auto fresh = independent_extension(columns_of(pushed, m), K);
            for (auto k : fresh) {
                Relation r;
                for (std::size_t t = 0; t < m; ++t)
                    if (!K(t, k).is_zero()) r.terms.push_back({K(t, k), cand[t]});
                ar.presentation.relations.push_back(normalize(r));
            }
        }
    }

    for (std::size_t i = 0; i < N; ++i)
        if (auto t = c.tau_of(i)) ar.presentation.tau[(int)i] = (int)*t;

    if (with_tau_minus) {
        std::map<std::size_t, Representation> tminus;
        auto tm = [&](std::size_t i) -> const Representation& {
            auto it = tminus.find(i);
            if (it == tminus.end()) it = tminus.emplace(i, tau(M[i].module, c.n, TauDirection::Inverse)).first;
            return it->second;
        };
        for (int a = 0; a < q.num_arrows(); ++a) {
            std::size_t src = q.arrow(a).from, y = q.arrow(a).to;
            auto x = c.tau_inverse_of(src);
            auto y2 = c.tau_inverse_of(y);
            if (!x || !y2) continue;
            auto phi = find_isomorphism_indecomposable(M[*x].module, tm(src));
            auto psi = find_isomorphism_indecomposable(tm(y), M[*y2].module);
            if (!phi || !psi)
                throw Error("TauNotQuasiInverse", "tau^- tau does not return " + M[*x].name + " or " + M[*y2].name);
            RepMorphism g = tau_morphism(M[src].module, M[y].module, ar.arrow_maps[a], c.n, TauDirection::Inverse);
            RepMorphism g2 = compose(*psi, compose(g, *phi));
            LinComb comb;
            const PathBasis& pb = S[*x][*y2];
            if (pb.paths.empty()) {
                if (!is_zero(g2)) throw std::logic_error("ar_quiver: tau^- image outside the path basis");
            } else {
                auto cc = pb.solver.coords(flatten(g2));
                if (!cc) throw std::logic_error("ar_quiver: tau^- image outside the path basis");
                for (std::size_t s = 0; s < cc->size(); ++s)
                    if (!(*cc)[s].is_zero()) comb.terms.push_back({(*cc)[s], pb.paths[s]});
            }
            ar.tau_minus[a] = comb;
        }
    }
    validate(ar.presentation);
    return ar;
}

ConeAlgebra cone_algebra(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap) {
    ConeAlgebra out;
    out.closure = tau_closure(a, n, layer_cap);
    out.ar = ar_quiver(out.closure, true);
    out.gamma = build_algebra(out.ar.presentation.opposite());
    return out;
}

// --- completeness ------------------------------------------------------------

CompletenessReport verify_n_complete(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap) {
    CompletenessReport r;
    r.n = n;
    r.gl_dim = global_dimension(a);
    r.gl_dim_ok = r.gl_dim && *r.gl_dim <= n;
    if (!r.gl_dim_ok) {
        r.reason = "GlobalDimensionTooLarge";
        return r;
    }
    try {
        r.closure = tau_closure(a, n, layer_cap, false);
    } catch (const Error& e) {
        if (e.code() != "LayerCapExceeded") throw;
        r.reason = "LayerCapExceeded: " + std::string(e.what());
        return r;
    }
    const TauClosure& c = *r.closure;
    r.tau_finite = c.tau_finite;
    for (const auto& l : c.layers) r.layer_sizes.push_back(l.size());
    r.p_matches_pd = true;
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
        bool p = c.objects[i].tau.empty();
        (p ? r.p_objects : r.mp_objects).push_back(i);
        auto pd = proj_dim(c.objects[i].module, n);
        if (p != (pd && *pd < n)) r.p_matches_pd = false;
    }
    std::vector<Representation> ps;
    for (auto i : r.p_objects) ps.push_back(c.objects[i].module);
    Representation T = direct_sum(ps, a);
    r.tilting = is_tilting(T);
    r.clause_a = r.tilting.is_tilting && r.p_matches_pd;

    r.absolutely = r.p_objects.size() == (std::size_t)a->num_vertices();
    for (const auto& p : ps) {
        auto pd = proj_dim(p, 0);
        if (!pd || *pd != 0) r.absolutely = false;
    }

    StdModules sm = std_modules(a);
    Representation reg = direct_sum(sm.projectives, a);
    r.clause_c = true;
    for (auto i : r.mp_objects) {
        std::vector<std::size_t> row;
        if (n > 1) {
            ProjResolution res = min_projective_resolution(c.objects[i].module, n);
            auto e = ext_dims(res, reg, n - 1);
            for (std::size_t d = 1; d < n; ++d) {
                row.push_back(e[d]);
                if (e[d]) r.clause_c = false;
            }
        }
        r.ext_table.push_back(row);
    }

    auto mods = c.modules();
    r.rigidity = is_n_rigid(mods, n);
    r.t_and_dual_in_add_m = in_add(direct_sum(T, direct_sum(sm.injectives, a)), mods);
    r.m_in_t_perp = true;
    for (const auto& m : mods)
        if (!perp_membership(T, m)) r.m_in_t_perp = false;
    try {
        ARQuiver ar = ar_quiver(c, false);
        AlgebraPtr gamma = build_algebra(ar.presentation.opposite());
        r.gl_dim_end = global_dimension(gamma);
    } catch (const Error& e) {
        r.reason = e.code() + ": " + e.what();
    }
    r.clause_b = r.rigidity.rigid && r.t_and_dual_in_add_m && r.m_in_t_perp && r.gl_dim_end &&
                 *r.gl_dim_end <= n + 1;
    r.complete = r.gl_dim_ok && r.tau_finite && r.clause_a && r.clause_b && r.clause_c;
    if (r.reason.empty()) {
        if (!r.clause_a) r.reason = "clause A fails: " + r.tilting.reason;
        else if (!r.clause_b) r.reason = "clause B fails";
        else if (!r.clause_c) r.reason = "clause C fails";
    }
    return r;
}

// --- presentation isomorphism ---------------------------------------------

namespace {

struct PresData {
    int n = 0;
    std::vector<std::vector<int>> mult;
    std::vector<std::vector<std::size_t>> dims;
    std::vector<int> tau;
    std::vector<std::vector<long>> invariant;
};

PresData pres_data(const Presentation& p, std::size_t cap) {
    PresData d;
    d.n = p.quiver.num_vertices();
    d.mult.assign(d.n, std::vector<int>(d.n, 0));
    for (const auto& a : p.quiver.arrows()) ++d.mult[a.from][a.to];
    AlgebraPtr A = build_algebra(p, cap);
    d.dims.assign(d.n, std::vector<std::size_t>(d.n, 0));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) d.dims[i][j] = A->dim(i, j);
    d.tau.assign(d.n, -1);
    for (const auto& [x, y] : p.tau) d.tau[x] = y;
    for (int v = 0; v < d.n; ++v) {
        std::vector<long> inv;
        inv.push_back((long)p.quiver.arrows_in(v).size());
        inv.push_back((long)p.quiver.arrows_out(v).size());
        long fwd = 0, back = 0;
        for (int u = v; d.tau[u] >= 0 && fwd <= d.n; u = d.tau[u]) ++fwd;
        for (auto u = p.tau_inverse_of(v); u && back <= d.n; u = p.tau_inverse_of(*u)) ++back;
        inv.push_back(fwd);
        inv.push_back(back);
        inv.push_back((long)d.dims[v][v]);
        std::vector<long> row, col;
        for (int w = 0; w < d.n; ++w) {
            row.push_back((long)d.dims[v][w]);
            col.push_back((long)d.dims[w][v]);
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        inv.insert(inv.end(), row.begin(), row.end());
        inv.push_back(-1);
        inv.insert(inv.end(), col.begin(), col.end());
        d.invariant.push_back(inv);
    }
    return d;
}

}  // namespace

IsoResult presentation_isomorphic(const Presentation& computed, const Presentation& predicted,
                                  std::size_t length_cap) {
    IsoResult r;
    if (computed.quiver.num_vertices() != predicted.quiver.num_vertices()) {
        r.diagnostic = "vertex counts differ: " + std::to_string(computed.quiver.num_vertices()) + " vs " +
                       std::to_string(predicted.quiver.num_vertices());
        return r;
    }
    if (computed.quiver.num_arrows() != predicted.quiver.num_arrows()) {
        r.diagnostic = "arrow counts differ: " + std::to_string(computed.quiver.num_arrows()) + " vs " +
                       std::to_string(predicted.quiver.num_arrows());
        return r;
    }
    PresData A = pres_data(computed, length_cap), B = pres_data(predicted, length_cap);
    const int n = A.n;
    std::vector<std::vector<int>> cand(n);
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w)
            if (A.invariant[u] == B.invariant[w]) cand[u].push_back(w);
        if (cand[u].empty()) {
            r.diagnostic = "no vertex matches the invariants of " + computed.quiver.vertex(u);
            return r;
        }
    }
    std::vector<int> map(n, -1), used(n, 0), assigned;
    std::size_t best = 0, steps = 0;
    const std::size_t budget = 20000000;
    auto consistent = [&](int u, int w) {
        for (int u2 : assigned) {
            int w2 = map[u2];
            if (A.mult[u][u2] != B.mult[w][w2] || A.mult[u2][u] != B.mult[w2][w]) return false;
            if (A.dims[u][u2] != B.dims[w][w2] || A.dims[u2][u] != B.dims[w2][w]) return false;
            if ((A.tau[u] == u2) != (B.tau[w] == w2) || (A.tau[u2] == u) != (B.tau[w2] == w)) return false;
        }
        if ((A.tau[u] == u) != (B.tau[w] == w)) return false;
        return A.mult[u][u] == B.mult[w][w];
    };
    // Next vertex: most constrained by already assigned neighbours.
    auto pick = [&]() {
        int best_u = -1;
        long best_score = -1;
        for (int u = 0; u < n; ++u) {
            if (map[u] >= 0) continue;
            long score = 0;
            for (int u2 : assigned) score += A.mult[u][u2] + A.mult[u2][u] + (A.dims[u][u2] || A.dims[u2][u]);
            score = score * (n + 1) + (n - (long)cand[u].size());
            if (score > best_score) {
                best_score = score;
                best_u = u;
            }
        }
        return best_u;
    };
    std::function<bool()> search = [&]() -> bool {
        if ((int)assigned.size() == n) return true;
        if (++steps > budget) return false;
        int u = pick();
        for (int w : cand[u]) {
            if (used[w] || !consistent(u, w)) continue;
            map[u] = w;
            used[w] = 1;
            assigned.push_back(u);
            best = std::max(best, assigned.size());
            if (search()) return true;
            assigned.pop_back();
            used[w] = 0;
            map[u] = -1;
        }
        return false;
    };
    if (search()) {
        r.isomorphic = true;
        r.bijection = map;
        return r;
    }
    r.diagnostic = steps > budget ? "search budget exhausted" : "no isomorphism";
    r.diagnostic += "; best partial match covers " + std::to_string(best) + " of " + std::to_string(n) + " vertices";
    return r;
}

}  // namespace hart
