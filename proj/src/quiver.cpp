#include "hart/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hart {

int Quiver::add_vertex(const std::string& name) {
    if (vindex_.count(name)) throw QuiverError("duplicate vertex '" + name + "'");
    int id = (int)vertices_.size();
    vertices_.push_back(name);
    vindex_[name] = id;
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Quiver::add_arrow(const std::string& name, int from, int to) {
    if (aindex_.count(name)) throw QuiverError("duplicate arrow '" + name + "'");
    if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices())
        throw QuiverError("arrow '" + name + "' has an unknown endpoint");
    int id = (int)arrows_.size();
    arrows_.push_back({name, from, to});
    aindex_[name] = id;
    out_[from].push_back(id);
    in_[to].push_back(id);
    return id;
}

int Quiver::add_arrow(const std::string& name, const std::string& from, const std::string& to) {
    auto f = find_vertex(from), t = find_vertex(to);
    if (!f) throw QuiverError("arrow '" + name + "': unknown vertex '" + from + "'");
    if (!t) throw QuiverError("arrow '" + name + "': unknown vertex '" + to + "'");
    return add_arrow(name, *f, *t);
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
    auto it = aindex_.find(name);
    if (it == aindex_.end()) return std::nullopt;
    return it->second;
}

int Quiver::vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw QuiverError("unknown vertex '" + name + "'");
    return *v;
}

int Quiver::arrow_index(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) throw QuiverError("unknown arrow '" + name + "'");
    return *a;
}

std::optional<std::vector<int>> Quiver::topological_order() const {
    const int n = num_vertices();
    std::vector<int> indeg(n, 0);
    for (const auto& a : arrows_) ++indeg[a.to];
    std::vector<int> order, stack;
    // Smallest index first keeps the order deterministic and natural.
    std::set<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int a : out_[v])
            if (--indeg[arrows_[a].to] == 0) ready.insert(arrows_[a].to);
    }
    if ((int)order.size() != n) return std::nullopt;
    return order;
}

Quiver Quiver::opposite() const {
    Quiver q;
    for (const auto& v : vertices_) q.add_vertex(v);
    for (const auto& a : arrows_) q.add_arrow(a.name, a.to, a.from);
    return q;
}

Path Path::of_arrow(const Quiver& q, int a) { return Path{q.arrow(a).from, q.arrow(a).to, {a}}; }

Path Path::then(const Path& next) const {
    if (target != next.source) throw QuiverError("paths do not compose");
    Path p = *this;
    p.target = next.target;
    p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
    return p;
}

bool Path::operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    if (source != o.source) return source < o.source;
    return target < o.target;
}

std::string path_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertex(p.source);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "," : "") + q.arrow(p.arrows[i]).name;
    return s;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrows) {
    if (arrows.empty()) throw QuiverError("make_path needs at least one arrow");
    Path p = Path::of_arrow(q, q.arrow_index(arrows[0]));
    for (std::size_t i = 1; i < arrows.size(); ++i) p = p.then(Path::of_arrow(q, q.arrow_index(arrows[i])));
    return p;
}

std::optional<int> Presentation::tau_of(int v) const {
    auto it = tau.find(v);
    if (it == tau.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Presentation::tau_inverse_of(int v) const {
    for (const auto& [x, y] : tau)
        if (y == v) return x;
    return std::nullopt;
}

Presentation Presentation::opposite() const {
    Presentation op;
    op.quiver = quiver.opposite();
    for (const auto& r : relations) {
        Relation rr;
        for (const auto& [c, p] : r.terms) {
            Path q{p.target, p.source, std::vector<int>(p.arrows.rbegin(), p.arrows.rend())};
            rr.terms.push_back({c, q});
        }
        op.relations.push_back(rr);
    }
    // tau is not meaningful on the opposite side and is dropped.
    return op;
}

void validate(const Presentation& p) {
    const Quiver& q = p.quiver;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        if (r.terms.empty()) throw QuiverError("relation " + std::to_string(i) + " has no terms");
        int s = r.terms[0].second.source, t = r.terms[0].second.target;
        for (const auto& [c, path] : r.terms) {
            if (c.is_zero()) throw QuiverError("relation " + std::to_string(i) + " has a zero coefficient");
            if (path.source != s || path.target != t)
                throw QuiverError("relation " + std::to_string(i) + " is not a combination of parallel paths");
            int at = path.source;
            for (int a : path.arrows) {
                if (a < 0 || a >= q.num_arrows()) throw QuiverError("relation uses an unknown arrow");
                if (q.arrow(a).from != at)
                    throw QuiverError("relation " + std::to_string(i) + " contains a path that does not compose");
                at = q.arrow(a).to;
            }
            if (at != path.target) throw QuiverError("relation path has inconsistent endpoints");
        }
    }
    std::set<int> images;
    for (const auto& [x, y] : p.tau) {
        if (x < 0 || x >= q.num_vertices() || y < 0 || y >= q.num_vertices())
            throw QuiverError("tau refers to an unknown vertex");
        if (!images.insert(y).second) throw QuiverError("tau is not injective");
    }
}

LinComb normalize(const LinComb& c) {
    std::vector<std::pair<Rational, Path>> terms;
    for (const auto& [k, p] : c.terms) {
        if (k.is_zero()) continue;
        auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.second == p; });
        if (it == terms.end())
            terms.push_back({k, p});
        else
            it->first += k;
    }
    LinComb out;
    for (auto& t : terms)
        if (!t.first.is_zero()) out.terms.push_back(std::move(t));
    std::stable_sort(out.terms.begin(), out.terms.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int source, int target, std::size_t max_length) {
    if (source < 0 || source >= q.num_vertices() || target < 0 || target >= q.num_vertices())
        throw QuiverError("enumerate_paths: unknown vertex");
    std::vector<Path> out;
    std::vector<Path> frontier{Path::trivial(source)};
    for (std::size_t len = 0; len <= max_length && !frontier.empty(); ++len) {
        for (const auto& p : frontier)
            if (p.target == target) out.push_back(p);
        if (len == max_length) break;
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (int a : q.arrows_out(p.target)) {
                Path e = p;
                e.arrows.push_back(a);
                e.target = q.arrow(a).to;
                next.push_back(std::move(e));
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string layered_name(const std::string& base, long layer) { return base + "|" + std::to_string(layer); }

std::string translation_arrow_name(const std::string& base, long layer) {
    return "t(" + base + ")|" + std::to_string(layer);
}

namespace {

// Shared construction for cone and cylinder. `exists(x, l)` decides vertex
// membership; translation arrows are added where `has_translation(x, l)`.
struct LayerBuilder {
    const Presentation& in;
    std::map<std::pair<int, long>, int> vid;
    std::map<std::pair<int, long>, int> aid;    // (input arrow, layer) -> arrow
    std::map<std::pair<int, long>, int> tid;    // (input vertex, layer) -> translation arrow
    LayeredPresentation out;

    explicit LayerBuilder(const Presentation& p) : in(p) {}

    std::optional<int> vertex(int x, long l) const {
        auto it = vid.find({x, l});
        if (it == vid.end()) return std::nullopt;
        return it->second;
    }

    // Transport of a path of the input quiver to layer l; nullopt when some
    // vertex or arrow is missing there (a zero symbol).
    std::optional<Path> lift(const Path& p, long l) const {
        auto s = vertex(p.source, l);
        auto t = vertex(p.target, l);
        if (!s || !t) return std::nullopt;
        Path q{*s, *t, {}};
        for (int a : p.arrows) {
            auto it = aid.find({a, l});
            if (it == aid.end()) return std::nullopt;
            q.arrows.push_back(it->second);
        }
        return q;
    }

    std::optional<int> translation(int x, long l) const {
        auto it = tid.find({x, l});
        if (it == tid.end()) return std::nullopt;
        return it->second;
    }
};

void add_vertices_and_arrows(LayerBuilder& b, const std::vector<std::pair<int, long>>& verts) {
    const Quiver& q = b.in.quiver;
    Quiver& nq = b.out.presentation.quiver;
    for (const auto& [x, l] : verts) {
        int v = nq.add_vertex(layered_name(q.vertex(x), l));
        b.vid[{x, l}] = v;
        b.out.origin.push_back({x, l});
    }
    // Translation arrows first in each layer, then layered copies of arrows;
    // the order only affects naming-independent indices.
    for (const auto& [x, l] : verts) {
        auto tx = b.in.tau_of(x);
        if (!tx) continue;
        auto target = b.vertex(*tx, l - 1);
        if (!target) continue;
        b.tid[{x, l}] = nq.add_arrow(translation_arrow_name(q.vertex(x), l), b.vid[{x, l}], *target);
    }
    std::set<long> layers;
    for (const auto& v : verts) layers.insert(v.second);
    for (long l : layers)
        for (int a = 0; a < q.num_arrows(); ++a) {
            auto s = b.vertex(q.arrow(a).from, l), t = b.vertex(q.arrow(a).to, l);
            if (s && t) b.aid[{a, l}] = nq.add_arrow(layered_name(q.arrow(a).name, l), *s, *t);
        }
}

void add_relation(LayerBuilder& b, const LinComb& c) {
    LinComb r = normalize(c);
    if (!r.empty()) b.out.presentation.relations.push_back(r);
}

void check_tau_minus(const Presentation& p, const TauMinusArrowMap& tm) {
    for (const auto& [a, comb] : tm) {
        if (a < 0 || a >= p.quiver.num_arrows()) throw QuiverError("tau-minus map refers to an unknown arrow");
        auto x = p.tau_inverse_of(p.quiver.arrow(a).from);
        if (!x) throw QuiverError("tau-minus map given for arrow '" + p.quiver.arrow(a).name +
                                  "' whose source is not a translate");
        auto y = p.tau_inverse_of(p.quiver.arrow(a).to);
        for (const auto& [k, path] : comb.terms) {
            if (!y || path.source != *x || path.target != *y)
                throw QuiverError("tau-minus image of arrow '" + p.quiver.arrow(a).name +
                                  "' is not a combination of paths x -> tau^-(y)");
        }
    }
}

// Relations (Y,l)_1 (tau^- a, l) = (a, l-1) (X, l)_1 for a: tau X -> Y.
void add_square_relations(LayerBuilder& b, const TauMinusArrowMap& tm, long l) {
    const Quiver& q = b.in.quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        auto X = b.in.tau_inverse_of(q.arrow(a).from);
        if (!X) continue;
        auto src = b.vertex(*X, l);
        if (!src) continue;
        int Y = q.arrow(a).to;
        LinComb rel;
        // Right-hand side: (X,l)_1 then (a,l-1).
        auto t1 = b.translation(*X, l);
        auto al = b.aid.find({a, l - 1});
        if (t1 && al != b.aid.end()) {
            Path p{*src, q.arrow(a).to, {*t1, al->second}};
            p.target = b.out.presentation.quiver.arrow(al->second).to;
            rel.terms.push_back({Rational(-1), p});
        }
        // Left-hand side: (tau^- a, l) then (tau^- Y, l)_1.
        auto tY = b.in.tau_inverse_of(Y);
        auto it = tm.find(a);
        if (tY && it != tm.end()) {
            auto t2 = b.translation(*tY, l);
            if (t2)
                for (const auto& [k, path] : it->second.terms) {
                    auto lp = b.lift(path, l);
                    if (!lp) continue;
                    Path full = *lp;
                    full.arrows.push_back(*t2);
                    full.target = b.out.presentation.quiver.arrow(*t2).to;
                    rel.terms.push_back({k, full});
                }
        }
        add_relation(b, rel);
    }
}

}  // namespace

LayeredPresentation cone(const Presentation& p, const TauMinusArrowMap& tau_minus) {
    validate(p);
    check_tau_minus(p, tau_minus);
    const Quiver& q = p.quiver;
    LayerBuilder b(p);
    // Vertices (x,l) with tau^l x defined, ordered by layer then input order.
    std::vector<std::pair<int, long>> verts;
    std::vector<int> cur(q.num_vertices());
    std::vector<bool> alive(q.num_vertices(), true);
    for (int x = 0; x < q.num_vertices(); ++x) cur[x] = x;
    for (long l = 0;; ++l) {
        bool any = false;
        for (int x = 0; x < q.num_vertices(); ++x)
            if (alive[x]) {
                verts.push_back({x, l});
                any = true;
            }
        if (!any) break;
        for (int x = 0; x < q.num_vertices(); ++x) {
            if (!alive[x]) continue;
            auto t = p.tau_of(cur[x]);
            if (!t)
                alive[x] = false;
            else
                cur[x] = *t;
            if (l > q.num_vertices() + 1) throw QuiverError("cone: translation has a cycle");
        }
    }
    std::sort(verts.begin(), verts.end(), [](const auto& a, const auto& c) {
        return a.second != c.second ? a.second < c.second : a.first < c.first;
    });
    add_vertices_and_arrows(b, verts);
    long max_layer = verts.empty() ? -1 : verts.back().second;
    for (long l = 0; l <= max_layer; ++l) {
        for (const auto& r : p.relations) {
            LinComb t;
            for (const auto& [k, path] : r.terms) {
                auto lp = b.lift(path, l);
                if (lp) t.terms.push_back({k, *lp});
            }
            add_relation(b, t);
        }
        if (l > 0) add_square_relations(b, tau_minus, l);
    }
    for (const auto& [x, l] : verts) {
        auto up = b.vertex(x, l + 1);
        if (up) b.out.presentation.tau[b.vid[{x, l}]] = *up;
    }
    return b.out;
}

LayeredPresentation cylinder(const Presentation& p, const TauMinusArrowMap& tau_minus, long lo, long hi) {
    validate(p);
    check_tau_minus(p, tau_minus);
    if (lo > hi) throw QuiverError("cylinder: empty window");
    const Quiver& q = p.quiver;
    LayerBuilder b(p);
    std::vector<std::pair<int, long>> verts;
    for (long l = lo; l <= hi; ++l)
        for (int x = 0; x < q.num_vertices(); ++x) verts.push_back({x, l});
    add_vertices_and_arrows(b, verts);
    for (long l = lo; l <= hi; ++l) {
        for (const auto& r : p.relations) {
            LinComb t;
            for (const auto& [k, path] : r.terms) {
                auto lp = b.lift(path, l);
                if (lp) t.terms.push_back({k, *lp});
            }
            add_relation(b, t);
        }
        // (Y,l)_1 (a,l) = 0 for a: X -> Y with X outside Q_P.
        for (int a = 0; a < q.num_arrows(); ++a) {
            int X = q.arrow(a).from, Y = q.arrow(a).to;
            if (p.tau_of(X)) continue;
            auto al = b.aid.find({a, l});
            auto ty = b.translation(Y, l);
            if (al == b.aid.end() || !ty) continue;
            Path path{b.vid[{X, l}], b.out.presentation.quiver.arrow(*ty).to, {al->second, *ty}};
            add_relation(b, LinComb{{{Rational(1), path}}});
        }
        add_square_relations(b, tau_minus, l);
    }
    for (const auto& [x, l] : verts) {
        auto up = b.vertex(x, l + 1);
        if (up) b.out.presentation.tau[b.vid[{x, l}]] = *up;
    }
    return b.out;
}

}  // namespace hart
