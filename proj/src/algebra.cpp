#include "hart/algebra.hpp"

#include <algorithm>
#include <map>

namespace hart {

namespace {

constexpr std::size_t kPathBudget = 200000;

void check_relations(const Presentation& p) {
    try {
        validate(p);
    } catch (const QuiverError& e) {
        throw Error("InconsistentRelation", e.what());
    }
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        for (const auto& [c, path] : p.relations[i].terms)
            if (path.length() < 2)
                throw Error("NotAdmissible", "relation " + std::to_string(i) + " has the term " +
                                                 path_string(p.quiver, path) + " of length < 2");
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.push_back({(int)k, v[k]});
    return s;
}

}  // namespace

class AlgebraBuilder {
public:
    AlgebraBuilder(Algebra& a, std::size_t cap) : A(a), cap_(cap) {}

    int new_element(int i, int j, const Path& p) {
        int g = (int)A.elems_.size();
        BasisElement e;
        e.source = i;
        e.target = j;
        e.local = (int)A.pair_[i * A.n_ + j].size();
        e.path = p;
        A.elems_.push_back(e);
        A.pair_[i * A.n_ + j].push_back(g);
        A.right_.emplace_back(A.quiver().arrows_out(j).size());
        return g;
    }

    void set_right(int g, int arrow, SparseVec v) { A.right_[g][A.arrow_pos_[arrow]] = std::move(v); }

    // Acyclic quivers: build each projective vertex by vertex along a
    // topological order. The space at j is spanned by (p, b) with p a basis
    // path ending at the source of b; relations ending at j cut it down.
    void build_acyclic(const std::vector<int>& topo) {
        const Quiver& q = A.quiver();
        const int n = A.n_;
        std::vector<std::vector<int>> rel_by_target(n);
        for (std::size_t r = 0; r < A.pres_.relations.size(); ++r)
            rel_by_target[A.pres_.relations[r].terms[0].second.target].push_back((int)r);
        for (int i = 0; i < n; ++i) {
            new_element(i, i, Path::trivial(i));
            for (int j : topo) {
                if (j == i) continue;
                struct WElem {
                    int p;
                    int b;
                    Path path;
                };
                std::vector<WElem> W;
                for (int b : q.arrows_in(j))
                    for (int p : A.basis(i, q.arrow(b).from)) {
                        Path path = A.elems_[p].path;
                        path.arrows.push_back(b);
                        path.target = j;
                        W.push_back({p, b, path});
                    }
                if (W.empty()) continue;
                // Columns ordered from the largest path down, so pivots are
                // leading terms and the remaining columns are normal forms.
                std::vector<int> order(W.size());
                for (std::size_t k = 0; k < W.size(); ++k) order[k] = (int)k;
                std::sort(order.begin(), order.end(), [&](int x, int y) { return W[y].path < W[x].path; });
                std::vector<int> colof(W.size());
                for (std::size_t c = 0; c < order.size(); ++c) colof[order[c]] = (int)c;
                std::map<std::pair<int, int>, int> windex;
                for (std::size_t k = 0; k < W.size(); ++k) windex[{W[k].p, W[k].b}] = (int)k;

                std::vector<Vec> rows;
                for (int r : rel_by_target[j]) {
                    const Relation& rel = A.pres_.relations[r];
                    int s = rel.terms[0].second.source;
                    for (int p : A.basis(i, s)) {
                        Vec row(W.size());
                        bool nz = false;
                        for (const auto& [c, w] : rel.terms) {
                            Path prefix{w.source, q.arrow(w.arrows.back()).from,
                                        std::vector<int>(w.arrows.begin(), w.arrows.end() - 1)};
                            Vec unit(A.dim(i, s));
                            unit[A.elems_[p].local] = 1;
                            Vec v = A.times_path(i, unit, prefix);
                            const auto& bl = A.basis(i, prefix.target);
                            for (std::size_t k = 0; k < v.size(); ++k) {
                                if (v[k].is_zero()) continue;
                                int col = colof[windex.at({bl[k], w.arrows.back()})];
                                row[col] += c * v[k];
                                nz = true;
                            }
                        }
                        if (nz) rows.push_back(std::move(row));
                    }
                }
                RrefResult red;
                if (!rows.empty()) red = rref(Matrix::from_rows(rows));
                std::vector<bool> pivot(W.size(), false);
                std::vector<int> pivot_row(W.size(), -1);
                for (std::size_t r = 0; r < red.rank; ++r) {
                    pivot[red.pivots[r]] = true;
                    pivot_row[red.pivots[r]] = (int)r;
                }
                // Normal forms in increasing path order.
                std::vector<int> nf_cols;
                for (int c = (int)W.size() - 1; c >= 0; --c)
                    if (!pivot[c]) nf_cols.push_back(c);
                std::vector<int> local_of_col(W.size(), -1);
                for (std::size_t k = 0; k < nf_cols.size(); ++k) {
                    const WElem& we = W[order[nf_cols[k]]];
                    new_element(i, j, we.path);
                    local_of_col[nf_cols[k]] = (int)k;
                }
                for (std::size_t k = 0; k < W.size(); ++k) {
                    int c = colof[k];
                    SparseVec v;
                    if (!pivot[c]) {
                        v.push_back({local_of_col[c], Rational(1)});
                    } else {
                        int r = pivot_row[c];
                        for (int f : nf_cols) {
                            const Rational& x = red.reduced(r, f);
                            if (!x.is_zero()) v.push_back({local_of_col[f], -x});
                        }
                        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                    }
                    set_right(W[k].p, W[k].b, std::move(v));
                }
            }
        }
    }

    // Quivers with oriented cycles: truncate at length L, compute the ideal
    // modulo paths of length >= L with lowest-degree leading terms, and stop
    // once every path of length L-1 lies in the ideal.
    void build_general() {
        const Quiver& q = A.quiver();
        const int n = A.n_;
        for (int i = 0; i < n; ++i) {
            bool done = false;
            for (std::size_t L = 2; L <= cap_ + 1 && !done; ++L) {
                std::vector<std::vector<Path>> paths(n);
                std::size_t total = 0;
                std::vector<Path> frontier{Path::trivial(i)};
                for (std::size_t len = 0; len < L && !frontier.empty(); ++len) {
                    for (const auto& p : frontier) paths[p.target].push_back(p);
                    total += frontier.size();
                    if (total > kPathBudget)
                        throw Error("DimensionCapExceeded", "path enumeration from vertex " + q.vertex(i) +
                                                                " exceeds the search budget");
                    std::vector<Path> next;
                    for (const auto& p : frontier)
                        for (int a : q.arrows_out(p.target)) {
                            Path e = p;
                            e.arrows.push_back(a);
                            e.target = q.arrow(a).to;
                            next.push_back(std::move(e));
                        }
                    frontier = std::move(next);
                }
                std::vector<std::map<std::vector<int>, int>> col(n);
                for (int j = 0; j < n; ++j) {
                    std::sort(paths[j].begin(), paths[j].end());
                    for (std::size_t k = 0; k < paths[j].size(); ++k) col[j][paths[j][k].arrows] = (int)k;
                }
                // Paths from arbitrary vertices, needed for the right factor.
                std::vector<std::vector<std::vector<Path>>> from(n, std::vector<std::vector<Path>>(n));
                for (int s = 0; s < n; ++s) {
                    std::vector<Path> fr{Path::trivial(s)};
                    for (std::size_t len = 0; len < L && !fr.empty(); ++len) {
                        for (const auto& p : fr) from[s][p.target].push_back(p);
                        std::vector<Path> next;
                        for (const auto& p : fr)
                            for (int a : q.arrows_out(p.target)) {
                                Path e = p;
                                e.arrows.push_back(a);
                                e.target = q.arrow(a).to;
                                next.push_back(std::move(e));
                            }
                        fr = std::move(next);
                    }
                }
                std::vector<std::vector<Vec>> rows(n);
                for (const auto& rel : A.pres_.relations) {
                    int s = rel.terms[0].second.source, t = rel.terms[0].second.target;
                    std::size_t minlen = SIZE_MAX;
                    for (const auto& term : rel.terms) minlen = std::min(minlen, term.second.length());
                    for (const auto& p : paths[s]) {
                        if (p.length() + minlen >= L) continue;
                        for (int j = 0; j < n; ++j)
                            for (const auto& r : from[t][j]) {
                                if (p.length() + minlen + r.length() >= L) continue;
                                Vec row(paths[j].size());
                                bool nz = false;
                                for (const auto& [c, w] : rel.terms) {
                                    if (p.length() + w.length() + r.length() >= L) continue;
                                    std::vector<int> full = p.arrows;
                                    full.insert(full.end(), w.arrows.begin(), w.arrows.end());
                                    full.insert(full.end(), r.arrows.begin(), r.arrows.end());
                                    row[col[j].at(full)] += c;
                                    nz = true;
                                }
                                if (nz) rows[j].push_back(std::move(row));
                            }
                    }
                }
                std::vector<RrefResult> red(n);
                bool stable = true;
                for (int j = 0; j < n; ++j) {
                    if (!rows[j].empty()) red[j] = rref(Matrix::from_rows(rows[j]));
                    std::vector<bool> piv(paths[j].size(), false);
                    for (auto c : red[j].pivots) piv[c] = true;
                    for (std::size_t k = 0; k < paths[j].size(); ++k)
                        if (paths[j][k].length() == L - 1 && !piv[k]) stable = false;
                }
                if (!stable) continue;
                done = true;
                // Basis = non-pivot paths; right action by reduction.
                std::vector<std::vector<int>> local(n);
                std::vector<std::vector<int>> prow(n);
                for (int j = 0; j < n; ++j) {
                    local[j].assign(paths[j].size(), -1);
                    prow[j].assign(paths[j].size(), -1);
                    for (std::size_t r = 0; r < red[j].rank; ++r) prow[j][red[j].pivots[r]] = (int)r;
                    int cnt = 0;
                    for (std::size_t k = 0; k < paths[j].size(); ++k)
                        if (prow[j][k] < 0) {
                            local[j][k] = cnt++;
                            new_element(i, j, paths[j][k]);
                        }
                }
                for (int j = 0; j < n; ++j)
                    for (int g : std::vector<int>(A.basis(i, j))) {
                        for (int b : q.arrows_out(j)) {
                            int k = q.arrow(b).to;
                            std::vector<int> ext = A.elems_[g].path.arrows;
                            ext.push_back(b);
                            SparseVec v;
                            auto it = col[k].find(ext);
                            if (it != col[k].end()) {
                                int c = it->second;
                                if (prow[k][c] < 0) {
                                    v.push_back({local[k][c], Rational(1)});
                                } else {
                                    int r = prow[k][c];
                                    for (std::size_t f = 0; f < paths[k].size(); ++f)
                                        if (prow[k][f] < 0 && !red[k].reduced(r, f).is_zero())
                                            v.push_back({local[k][f], -red[k].reduced(r, f)});
                                }
                            }
                            set_right(g, b, std::move(v));
                        }
                    }
            }
            if (!done)
                throw Error("DimensionCapExceeded", "normal-form basis from vertex " + q.vertex(i) +
                                                        " did not stabilize below length " + std::to_string(cap_));
        }
    }

private:
    Algebra& A;
    std::size_t cap_;
};

void Algebra::finish_indexing() {
    const Quiver& q = quiver();
    idem_.assign(n_, -1);
    arrow_elem_.assign(q.num_arrows(), -1);
    max_len_ = 0;
    for (std::size_t g = 0; g < elems_.size(); ++g) {
        const auto& e = elems_[g];
        max_len_ = std::max(max_len_, e.path.length());
        if (e.path.length() == 0) idem_[e.source] = (int)g;
        if (e.path.length() == 1) arrow_elem_[e.path.arrows[0]] = (int)g;
    }
    for (int v = 0; v < n_; ++v)
        if (idem_[v] < 0) throw Error("DimensionCapExceeded", "idempotent missing from the basis");
    for (int a = 0; a < q.num_arrows(); ++a)
        if (arrow_elem_[a] < 0) throw Error("NotAdmissible", "arrow " + q.arrow(a).name + " vanishes");
}

AlgebraPtr build_algebra(const Presentation& p, std::size_t length_cap) {
    if (length_cap < 2) throw Error("DimensionCapExceeded", "length cap must be at least 2");
    check_relations(p);
    std::shared_ptr<Algebra> A(new Algebra());
    A->pres_ = p;
    A->n_ = p.quiver.num_vertices();
    A->pair_.assign((std::size_t)A->n_ * A->n_, {});
    A->arrow_pos_.assign(p.quiver.num_arrows(), -1);
    for (int v = 0; v < A->n_; ++v) {
        const auto& outs = p.quiver.arrows_out(v);
        for (std::size_t k = 0; k < outs.size(); ++k) A->arrow_pos_[outs[k]] = (int)k;
    }
    AlgebraBuilder b(*A, length_cap);
    auto topo = p.quiver.topological_order();
    if (topo)
        b.build_acyclic(*topo);
    else
        b.build_general();
    A->finish_indexing();
    return A;
}

AlgebraPtr path_algebra(const Quiver& q, std::size_t length_cap) {
    Presentation p;
    p.quiver = q;
    return build_algebra(p, length_cap);
}

const SparseVec& Algebra::times_arrow(int g, int a) const {
    const auto& e = elems_[g];
    if (quiver().arrow(a).from != e.target) throw std::logic_error("times_arrow: arrow does not compose");
    return right_[g][arrow_pos_[a]];
}

Vec Algebra::times_path(int i, const Vec& v, const Path& q) const {
    Vec cur = v;
    int at = q.source;
    for (int a : q.arrows) {
        int to = quiver().arrow(a).to;
        Vec next(dim(i, to));
        const auto& bl = basis(i, at);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (cur[k].is_zero()) continue;
            for (const auto& [idx, c] : right_[bl[k]][arrow_pos_[a]]) next[idx] += cur[k] * c;
        }
        cur = std::move(next);
        at = to;
    }
    return cur;
}

const Vec& Algebra::product(int g, int h) const {
    std::uint64_t key = ((std::uint64_t)(std::uint32_t)g << 32) | (std::uint32_t)h;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = product_cache_.find(key);
        if (it != product_cache_.end()) return it->second;
    }
    const auto& eg = elems_[g];
    const auto& eh = elems_[h];
    if (eg.target != eh.source) throw std::logic_error("product of non-composable basis elements");
    Vec unit(dim(eg.source, eg.target));
    unit[eg.local] = 1;
    Vec v = times_path(eg.source, unit, eh.path);
    std::lock_guard<std::mutex> lk(mu_);
    return product_cache_.emplace(key, std::move(v)).first->second;
}

Vec Algebra::multiply(int i, int j, int k, const Vec& u, const Vec& w) const {
    Vec out(dim(i, k));
    const auto& bu = basis(i, j);
    const auto& bw = basis(j, k);
    for (std::size_t x = 0; x < u.size(); ++x) {
        if (u[x].is_zero()) continue;
        for (std::size_t y = 0; y < w.size(); ++y) {
            if (w[y].is_zero()) continue;
            Rational f = u[x] * w[y];
            const Vec& p = product(bu[x], bw[y]);
            for (std::size_t z = 0; z < p.size(); ++z)
                if (!p[z].is_zero()) out[z] += f * p[z];
        }
    }
    return out;
}

Vec Algebra::reduce(const Path& p) const {
    Vec unit(dim(p.source, p.source));
    unit[elems_[idem_[p.source]].local] = 1;
    return times_path(p.source, unit, p);
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (auto back = op_of_.lock()) return back;
        if (op_) return op_;
    }
    std::shared_ptr<Algebra> op(new Algebra());
    op->pres_ = pres_.opposite();
    op->n_ = n_;
    op->pair_.assign((std::size_t)n_ * n_, {});
    const Quiver& oq = op->pres_.quiver;
    op->arrow_pos_.assign(oq.num_arrows(), -1);
    for (int v = 0; v < n_; ++v) {
        const auto& outs = oq.arrows_out(v);
        for (std::size_t k = 0; k < outs.size(); ++k) op->arrow_pos_[outs[k]] = (int)k;
    }
    op->elems_.resize(elems_.size());
    for (std::size_t g = 0; g < elems_.size(); ++g) {
        const auto& e = elems_[g];
        BasisElement oe;
        oe.source = e.target;
        oe.target = e.source;
        oe.local = e.local;
        oe.path = Path{e.target, e.source, std::vector<int>(e.path.arrows.rbegin(), e.path.arrows.rend())};
        op->elems_[g] = oe;
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) op->pair_[j * n_ + i] = pair_[i * n_ + j];
    op->right_.resize(elems_.size());
    for (std::size_t g = 0; g < elems_.size(); ++g) {
        const auto& oe = op->elems_[g];
        const auto& outs = oq.arrows_out(oe.target);
        op->right_[g].resize(outs.size());
        for (std::size_t k = 0; k < outs.size(); ++k) {
            int b = outs[k];  // b: k' -> target(oe) in the original quiver
            int kk = quiver().arrow(b).from;
            Vec unit(dim(kk, oe.target));
            unit[elems_[arrow_elem_[b]].local] = 1;
            Vec v = times_path(kk, unit, elems_[g].path);
            op->right_[g][k] = to_sparse(v);
        }
    }
    op->finish_indexing();
    op->op_of_ = shared_from_this();
    std::lock_guard<std::mutex> lk(mu_);
    if (!op_) op_ = op;
    return op_;
}

}  // namespace hart
