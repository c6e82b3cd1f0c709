#include "hart/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "hart/examples.hpp"
#include "hart/tau.hpp"

namespace hart {

std::vector<std::string> dynkin_type(const Quiver& q) {
    const int n = q.num_vertices();
    std::vector<std::vector<int>> adj(n);
    std::map<std::pair<int, int>, int> edges;
    for (const auto& a : q.arrows()) {
        if (a.from == a.to) throw Error("NotDynkin", "loop at " + q.vertex(a.from));
        auto key = std::minmax(a.from, a.to);
        if (++edges[key] > 1) throw Error("NotDynkin", "multiple edge " + q.vertex(a.from) + " - " + q.vertex(a.to));
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::string> types;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> verts{s};
        comp[s] = s;
        for (std::size_t k = 0; k < verts.size(); ++k)
            for (int w : adj[verts[k]])
                if (comp[w] < 0) {
                    comp[w] = s;
                    verts.push_back(w);
                }
        std::size_t e = 0;
        for (int v : verts) e += adj[v].size();
        e /= 2;
        const std::size_t m = verts.size();
        if (e != m - 1) throw Error("NotDynkin", "underlying graph has a cycle");
        std::vector<int> branch;
        for (int v : verts) {
            if (adj[v].size() > 3) throw Error("NotDynkin", "vertex of degree > 3");
            if (adj[v].size() == 3) branch.push_back(v);
        }
        if (branch.empty()) {
            types.push_back("A" + std::to_string(m));
            continue;
        }
        if (branch.size() > 1) throw Error("NotDynkin", "two branch points");
        std::vector<int> arms;
        for (int w : adj[branch[0]]) {
            int len = 1, prev = branch[0], cur = w;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            types.push_back("D" + std::to_string(m));
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
            types.push_back("E" + std::to_string(m));
        else
            throw Error("NotDynkin", "arms do not give a Dynkin diagram");
    }
    return types;
}

std::vector<std::size_t> ell_values(const Quiver& q) {
    dynkin_type(q);
    auto A = path_algebra(q);
    TauClosure c = tau_closure(A, 1);
    std::vector<std::size_t> out(q.num_vertices());
    for (auto i : c.layers[0]) out[c.objects[i].root] = c.objects[i].ell;
    return out;
}

std::vector<SimplexPoint> simplex(std::size_t n, long ell) {
    std::vector<SimplexPoint> out;
    SimplexPoint p(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == n) {
            out.push_back(p);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            p[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (ell >= 0) rec(0, ell);
    return out;
}

namespace {

std::string coord_string(const SimplexPoint& l) {
    std::string s = "[";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + "]";
}

class FamilyBuilder {
public:
    FamilyBuilder(const Quiver& q, std::size_t n, std::vector<std::size_t> ell, FamilyKind kind, long lo, long hi)
        : q_(q), n_(n), ell_(std::move(ell)), kind_(kind), lo_(lo), hi_(hi) {}

    FamilyPresentation build() {
        // Vertices ordered by x, then by l in lexicographic order.
        for (int x = 0; x < q_.num_vertices(); ++x) {
            std::vector<SimplexPoint> pts;
            if (kind_ == FamilyKind::Cone) {
                pts = simplex(n_, (long)ell_[x]);
            } else {
                for (const auto& p : simplex(n_ - 1, (long)ell_[x]))
                    for (long t = lo_; t <= hi_; ++t) {
                        SimplexPoint l = p;
                        l.push_back(t);
                        pts.push_back(l);
                    }
            }
            for (const auto& l : pts) {
                int v = out_.presentation.quiver.add_vertex(q_.vertex(x) + coord_string(l));
                vid_[{x, l}] = v;
                out_.coords.push_back({x, l});
            }
        }
        for (std::size_t v = 0; v < out_.coords.size(); ++v) {
            const auto& [x, l] = out_.coords[v];
            for (int a : q_.arrows_in(x))  // (a*, l): (x,l) -> (w,l)
                add_arrow(q_.arrow(a).name + "*" + coord_string(l), x, l, q_.arrow(a).from, l, {'*', a});
            for (int b : q_.arrows_out(x))  // (b, l): (x,l) -> (y, l+v_1)
                add_arrow(q_.arrow(b).name + coord_string(l), x, l, q_.arrow(b).to, shift(l, 1), {'b', b});
            for (std::size_t i = 2; i <= n_; ++i)
                add_arrow(q_.vertex(x) + coord_string(l) + "_" + std::to_string(i), x, l, x, shift(l, i),
                          {'i', (int)i});
        }
        emit_relations();
        for (std::size_t v = 0; v < out_.coords.size(); ++v) {
            const auto& [x, l] = out_.coords[v];
            SimplexPoint t = l;
            t[n_ - 1] += 1;
            auto it = vid_.find({x, t});
            if (it != vid_.end()) out_.presentation.tau[(int)v] = it->second;
        }
        validate(out_.presentation);
        return out_;
    }

private:
    using Key = std::pair<int, SimplexPoint>;
    using Label = std::pair<char, int>;

    SimplexPoint shift(SimplexPoint l, std::size_t i) const {
        // v_1 = -e_1, v_i = e_{i-1} - e_i
        if (i == 1) {
            l[0] -= 1;
        } else {
            l[i - 2] += 1;
            l[i - 1] -= 1;
        }
        return l;
    }

    void add_arrow(const std::string& name, int x, const SimplexPoint& l, int y, const SimplexPoint& m, Label lab) {
        auto s = vid_.find({x, l});
        auto t = vid_.find({y, m});
        if (s == vid_.end() || t == vid_.end()) return;
        int id = out_.presentation.quiver.add_arrow(name, s->second, t->second);
        aid_[{lab, {x, l}}] = id;
        out_.arrows.push_back({lab.first, lab.second, x, l});
    }

    std::optional<int> arrow(Label lab, int x, const SimplexPoint& l) const {
        auto it = aid_.find({lab, {x, l}});
        if (it == aid_.end()) return std::nullopt;
        return it->second;
    }

    // Two-step path or nothing when an arrow is missing.
    std::optional<Path> path2(std::optional<int> first, std::optional<int> second) const {
        if (!first || !second) return std::nullopt;
        const auto& Q = out_.presentation.quiver;
        Path p{Q.arrow(*first).from, Q.arrow(*second).to, {*first, *second}};
        if (Q.arrow(*first).to != Q.arrow(*second).from) throw std::logic_error("family: path does not compose");
        return p;
    }

    void relation(std::optional<Path> lhs, std::vector<std::optional<Path>> more_lhs, std::optional<Path> rhs,
                  std::vector<std::optional<Path>> more_rhs) {
        LinComb r;
        more_lhs.push_back(lhs);
        more_rhs.push_back(rhs);
        for (const auto& p : more_lhs)
            if (p) r.terms.push_back({Rational(1), *p});
        for (const auto& p : more_rhs)
            if (p) r.terms.push_back({Rational(-1), *p});
        r = normalize(r);
        if (!r.empty()) out_.presentation.relations.push_back(r);
    }

    void emit_relations() {
        for (const auto& [x, l] : out_.coords) {
            for (std::size_t i = 2; i <= n_; ++i) {
                SimplexPoint li = shift(l, i);
                // (w,l)_i (a*,l) = (a*,l+v_i) (x,l)_i for a: w -> x
                for (int a : q_.arrows_in(x)) {
                    int w = q_.arrow(a).from;
                    relation(path2(arrow({'*', a}, x, l), arrow({'i', (int)i}, w, l)), {},
                             path2(arrow({'i', (int)i}, x, l), arrow({'*', a}, x, li)), {});
                }
                // (y,l+v_1)_i (b,l) = (b,l+v_i) (x,l)_i for b: x -> y
                for (int b : q_.arrows_out(x)) {
                    int y = q_.arrow(b).to;
                    relation(path2(arrow({'b', b}, x, l), arrow({'i', (int)i}, y, shift(l, 1))), {},
                             path2(arrow({'i', (int)i}, x, l), arrow({'b', b}, x, li)), {});
                }
                // (x,l+v_j)_i (x,l)_j = (x,l+v_i)_j (x,l)_i for 1 < j < i
                for (std::size_t j = 2; j < i; ++j)
                    relation(path2(arrow({'i', (int)j}, x, l), arrow({'i', (int)i}, x, shift(l, j))), {},
                             path2(arrow({'i', (int)i}, x, l), arrow({'i', (int)j}, x, li)), {});
            }
            // Mesh: sum_{a: w -> x} (a,l)(a*,l) = sum_{b: x -> y} (b*,l+v_1)(b,l)
            std::vector<std::optional<Path>> lhs, rhs;
            for (int a : q_.arrows_in(x)) {
                int w = q_.arrow(a).from;
                lhs.push_back(path2(arrow({'*', a}, x, l), arrow({'b', a}, w, l)));
            }
            for (int b : q_.arrows_out(x)) {
                int y = q_.arrow(b).to;
                rhs.push_back(path2(arrow({'b', b}, x, l), arrow({'*', b}, y, shift(l, 1))));
            }
            relation(std::nullopt, lhs, std::nullopt, rhs);
        }
    }

    const Quiver& q_;
    std::size_t n_;
    std::vector<std::size_t> ell_;
    FamilyKind kind_;
    long lo_, hi_;
    FamilyPresentation out_;
    std::map<Key, int> vid_;
    std::map<std::pair<Label, Key>, int> aid_;
};

}  // namespace

FamilyPresentation build_family(const Quiver& q, std::size_t n, FamilyKind kind, long lo, long hi) {
    if (n == 0) throw Error("InvalidArgument", "families need n >= 1");
    if (kind == FamilyKind::Cylinder && lo > hi) throw Error("InvalidArgument", "empty window");
    FamilyBuilder b(q, n, ell_values(q), kind, lo, hi);
    return b.build();
}

TauMinusArrowMap family_tau_minus(const FamilyPresentation& f) {
    std::map<std::tuple<char, int, int, SimplexPoint>, int> index;
    for (std::size_t a = 0; a < f.arrows.size(); ++a) {
        const auto& fa = f.arrows[a];
        index[{fa.kind, fa.index, fa.x, fa.l}] = (int)a;
    }
    const Presentation& p = f.presentation;
    TauMinusArrowMap out;
    for (std::size_t a = 0; a < f.arrows.size(); ++a) {
        const auto& fa = f.arrows[a];
        if (!p.tau_inverse_of(p.quiver.arrow((int)a).from)) continue;
        SimplexPoint l = fa.l;
        l.back() -= 1;
        LinComb c;
        auto it = index.find({fa.kind, fa.index, fa.x, l});
        if (it != index.end() && p.tau_inverse_of(p.quiver.arrow((int)a).to))
            c.terms.push_back({Rational(1), Path::of_arrow(p.quiver, it->second)});
        out[(int)a] = c;
    }
    return out;
}

TowerLevel tower(int m, std::size_t n) {
    if (m < 1 || n < 1) throw Error("InvalidArgument", "tower needs m >= 1 and n >= 1");
    TowerLevel t;
    Presentation a = examples::linear_a(m);
    t.presentation = n == 1 ? a : build_family(a.quiver, n - 1).presentation.opposite();
    t.algebra = build_algebra(t.presentation);
    return t;
}

}  // namespace hart
