#include "hart/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

namespace hart {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw Error("SchemaError", where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema(where, std::string("missing \"") + key + "\"");
    return j.at(key);
}

std::string need_string(const Json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        schema(where, e.what());
    }
    schema(where, "expected a rational as \"p/q\" or an integer");
}

std::size_t positive_size(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) schema(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t env_cap(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long x = std::strtoll(v, &end, 10);
    if (*end || x <= 0) throw Error("ConfigError", std::string(name) + " must be a positive integer, got '" + v + "'");
    return (std::size_t)x;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

Json dims_json(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto d : v) a.push_back(d);
    return a;
}

Json index_list(const std::vector<std::size_t>& v) { return dims_json(v); }

}  // namespace

RunConfig apply_env(RunConfig c) {
    c.length_cap = env_cap("HART_LENGTH_CAP", c.length_cap);
    c.layer_cap = env_cap("HART_LAYER_CAP", c.layer_cap);
    return c;
}

Window parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("ConfigError", "window must be lo:hi, got '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = s.substr(0, colon), b = s.substr(colon + 1);
        Window w{std::stol(a, &p1), std::stol(b, &p2)};
        if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing characters");
        if (w.lo > w.hi) throw Error("ConfigError", "window lo > hi in '" + s + "'");
        return w;
    } catch (const std::logic_error&) {
        throw Error("ConfigError", "window must be lo:hi, got '" + s + "'");
    }
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "text") return OutputFormat::Text;
    throw Error("ConfigError", "format must be json, dot or text, got '" + s + "'");
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.find("syntax error");
        if (pos != std::string::npos) what = what.substr(pos);
        throw Error("ParseError", source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IOError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Presentation& p) {
    const Quiver& q = p.quiver;
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : q.vertices()) j["vertices"].push_back(v);
    j["arrows"] = Json::array();
    for (const auto& a : q.arrows())
        j["arrows"].push_back(Json{{"name", a.name}, {"from", q.vertex(a.from)}, {"to", q.vertex(a.to)}});
    j["relations"] = Json::array();
    for (const auto& r : p.relations) {
        Json terms = Json::array();
        for (const auto& [c, path] : r.terms) {
            if (path.arrows.empty()) throw Error("SchemaError", "relation term with a trivial path");
            Json names = Json::array();
            for (int a : path.arrows) names.push_back(q.arrow(a).name);
            terms.push_back(Json{{"coef", c.str()}, {"path", names}});
        }
        j["relations"].push_back(Json{{"terms", terms}});
    }
    j["tau"] = Json::object();
    for (const auto& [x, y] : p.tau) j["tau"][q.vertex(x)] = q.vertex(y);
    return j;
}

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object()) schema("/", "expected an object");
    Presentation p;
    const Json& vs = need(j, "vertices", "/");
    if (!vs.is_array()) schema("/vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string where = "/vertices/" + std::to_string(i);
        std::string name = need_string(vs[i], where);
        if (p.quiver.find_vertex(name)) schema(where, "duplicate vertex '" + name + "'");
        p.quiver.add_vertex(name);
    }
    const Json& as = need(j, "arrows", "/");
    if (!as.is_array()) schema("/arrows", "expected an array");
    for (std::size_t i = 0; i < as.size(); ++i) {
        std::string where = "/arrows/" + std::to_string(i);
        std::string name = need_string(need(as[i], "name", where), where + "/name");
        std::string from = need_string(need(as[i], "from", where), where + "/from");
        std::string to = need_string(need(as[i], "to", where), where + "/to");
        if (p.quiver.find_arrow(name)) schema(where, "duplicate arrow '" + name + "'");
        if (!p.quiver.find_vertex(from)) schema(where + "/from", "unknown vertex '" + from + "'");
        if (!p.quiver.find_vertex(to)) schema(where + "/to", "unknown vertex '" + to + "'");
        p.quiver.add_arrow(name, from, to);
    }
    if (j.contains("relations")) {
        const Json& rs = j.at("relations");
        if (!rs.is_array()) schema("/relations", "expected an array");
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::string where = "/relations/" + std::to_string(i);
            const Json& ts = need(rs[i], "terms", where);
            if (!ts.is_array() || ts.empty()) schema(where + "/terms", "expected a nonempty array");
            Relation r;
            for (std::size_t k = 0; k < ts.size(); ++k) {
                std::string tw = where + "/terms/" + std::to_string(k);
                Rational c = rational_of(need(ts[k], "coef", tw), tw + "/coef");
                const Json& path = need(ts[k], "path", tw);
                if (!path.is_array() || path.empty()) schema(tw + "/path", "expected a nonempty array of arrow names");
                std::vector<std::string> names;
                for (std::size_t m = 0; m < path.size(); ++m) {
                    std::string pw = tw + "/path/" + std::to_string(m);
                    names.push_back(need_string(path[m], pw));
                    if (!p.quiver.find_arrow(names.back())) schema(pw, "unknown arrow '" + names.back() + "'");
                }
                try {
                    r.terms.emplace_back(c, make_path(p.quiver, names));
                } catch (const std::exception& e) {
                    schema(tw + "/path", e.what());
                }
            }
            p.relations.push_back(std::move(r));
        }
    }
    if (j.contains("tau")) {
        const Json& t = j.at("tau");
        if (!t.is_object()) schema("/tau", "expected an object");
        for (const auto& [x, y] : t.items()) {
            std::string where = "/tau/" + x;
            std::string yn = need_string(y, where);
            auto xi = p.quiver.find_vertex(x), yi = p.quiver.find_vertex(yn);
            if (!xi) schema(where, "unknown vertex '" + x + "'");
            if (!yi) schema(where, "unknown vertex '" + yn + "'");
            p.tau[*xi] = *yi;
        }
    }
    try {
        validate(p);
    } catch (const QuiverError& e) {
        schema("/", e.what());
    }
    return p;
}

std::size_t length_cap_of(const Json& j, std::size_t fallback) {
    if (!j.is_object() || !j.contains("length_cap")) return fallback;
    std::size_t c = positive_size(j.at("length_cap"), "/length_cap");
    if (c == 0) schema("/length_cap", "must be positive");
    return c;
}

Json to_json(const Representation& x) {
    const Quiver& q = x.alg->quiver();
    Json j;
    j["dims"] = Json::object();
    for (int v = 0; v < q.num_vertices(); ++v) j["dims"][q.vertex(v)] = x.dims[v];
    j["maps"] = Json::object();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Matrix& m = x.maps[a];
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(row);
        }
        j["maps"][q.arrow(a).name] = rows;
    }
    return j;
}

Representation representation_from_json(const Json& j, const AlgebraPtr& a) {
    const Quiver& q = a->quiver();
    Representation x;
    x.alg = a;
    x.dims.assign(q.num_vertices(), 0);
    const Json& dims = need(j, "dims", "/");
    if (!dims.is_object()) schema("/dims", "expected an object keyed by vertex");
    for (const auto& [v, d] : dims.items()) {
        auto vi = q.find_vertex(v);
        if (!vi) schema("/dims/" + v, "unknown vertex '" + v + "'");
        x.dims[*vi] = positive_size(d, "/dims/" + v);
    }
    for (int k = 0; k < q.num_arrows(); ++k) {
        const Arrow& ar = q.arrow(k);
        x.maps.emplace_back(x.dims[ar.to], x.dims[ar.from]);
    }
    if (j.contains("maps")) {
        const Json& maps = j.at("maps");
        if (!maps.is_object()) schema("/maps", "expected an object keyed by arrow");
        for (const auto& [name, m] : maps.items()) {
            std::string where = "/maps/" + name;
            auto ai = q.find_arrow(name);
            if (!ai) schema(where, "unknown arrow '" + name + "'");
            Matrix& out = x.maps[*ai];
            if (!m.is_array() || m.size() != out.rows())
                schema(where, "expected " + std::to_string(out.rows()) + " rows");
            for (std::size_t r = 0; r < out.rows(); ++r) {
                if (!m[r].is_array() || m[r].size() != out.cols())
                    schema(where + "/" + std::to_string(r), "expected " + std::to_string(out.cols()) + " entries");
                for (std::size_t c = 0; c < out.cols(); ++c)
                    out(r, c) = rational_of(m[r][c], where + "/" + std::to_string(r) + "/" + std::to_string(c));
            }
        }
    }
    if (!is_valid(x)) throw Error("InvalidModule", "the matrices do not satisfy the relations");
    return x;
}

std::string to_dot(const Presentation& p, const std::string& graph_name) {
    const Quiver& q = p.quiver;
    std::vector<std::string> names = q.vertices();
    std::sort(names.begin(), names.end());
    struct Edge {
        std::string from, to, label;
        bool tau;
        bool operator<(const Edge& o) const {
            return std::tie(tau, from, to, label) < std::tie(o.tau, o.from, o.to, o.label);
        }
    };
    std::vector<Edge> edges;
    for (const auto& a : q.arrows()) edges.push_back({q.vertex(a.from), q.vertex(a.to), a.name, false});
    for (const auto& [x, y] : p.tau) edges.push_back({q.vertex(x), q.vertex(y), "", true});
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "digraph " << quote(graph_name) << " {\n";
    for (const auto& v : names) os << "  " << quote(v) << ";\n";
    for (const auto& e : edges) {
        os << "  " << quote(e.from) << " -> " << quote(e.to);
        if (e.tau)
            os << " [style=dashed, constraint=false];\n";
        else
            os << " [label=" << quote(e.label) << "];\n";
    }
    os << "}\n";
    return os.str();
}

Json to_json(const Fingerprint& f) {
    return Json{{"dims", dims_json(f.dims)}, {"top", dims_json(f.top)}, {"socle", dims_json(f.socle)}};
}

Json to_json(const TauClosure& c, bool with_modules) {
    Json j;
    j["n"] = c.n;
    j["tau_finite"] = c.tau_finite;
    j["layers_disjoint"] = c.layers_disjoint;
    j["tau_indecomposable"] = c.tau_indecomposable;
    j["layer_sizes"] = Json::array();
    for (const auto& l : c.layers) j["layer_sizes"].push_back(l.size());
    j["objects"] = Json::array();
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
        const auto& o = c.objects[i];
        Json e;
        e["index"] = i;
        e["name"] = o.name;
        e["layer"] = o.layer;
        e["root"] = c.alg->quiver().vertex(o.root);
        e["ell"] = o.ell;
        e["tau"] = index_list(o.tau);
        e["fingerprint"] = to_json(fingerprint(o.module));
        if (with_modules) e["module"] = to_json(o.module);
        j["objects"].push_back(e);
    }
    return j;
}

std::string verdict(const CompletenessReport& r) {
    std::string n = std::to_string(r.n);
    if (!r.complete) return "not " + n + "-complete: " + r.reason;
    if (r.absolutely) return "absolutely " + n + "-complete";
    return n + "-complete; not absolute; P(M) = add T";
}

Json to_json(const CompletenessReport& r) {
    Json j;
    j["n"] = r.n;
    j["verdict"] = verdict(r);
    j["complete"] = r.complete;
    j["absolutely"] = r.absolutely;
    j["reason"] = r.reason;
    j["gl_dim"] = r.gl_dim ? Json(*r.gl_dim) : Json(nullptr);
    j["gl_dim_ok"] = r.gl_dim_ok;
    j["tau_finite"] = r.tau_finite;
    j["layer_sizes"] = dims_json(r.layer_sizes);
    j["p_objects"] = index_list(r.p_objects);
    j["mp_objects"] = index_list(r.mp_objects);
    j["p_matches_pd"] = r.p_matches_pd;
    j["clause_a"] = {{"pass", r.clause_a},
                     {"tilting", r.tilting.is_tilting},
                     {"pd", r.tilting.pd ? Json(*r.tilting.pd) : Json(nullptr)},
                     {"self_orthogonal", r.tilting.self_orthogonal},
                     {"coresolution_ok", r.tilting.coresolution_ok},
                     {"reason", r.tilting.reason}};
    Json viol = Json::array();
    for (const auto& v : r.rigidity.violations)
        viol.push_back(Json{{"x", v.x}, {"y", v.y}, {"degree", v.degree}, {"dim", v.dim}});
    j["clause_b"] = {{"pass", r.clause_b},
                     {"rigid", r.rigidity.rigid},
                     {"rigidity_violations", viol},
                     {"t_and_dual_in_add_m", r.t_and_dual_in_add_m},
                     {"m_in_t_perp", r.m_in_t_perp},
                     {"gl_dim_end", r.gl_dim_end ? Json(*r.gl_dim_end) : Json(nullptr)}};
    Json table = Json::array();
    for (const auto& row : r.ext_table) table.push_back(dims_json(row));
    j["clause_c"] = {{"pass", r.clause_c}, {"ext_table", table}};
    if (r.closure) {
        j["closure"] = to_json(*r.closure);
        Json t = Json::array();
        for (auto i : r.p_objects) t.push_back(to_json(fingerprint(r.closure->objects[i].module)));
        j["T"] = t;
    }
    return j;
}

Json to_json(const UClosure& u, const WindowReport& w) {
    Json j;
    j["n"] = u.n;
    j["window"] = {u.window.lo, u.window.hi};
    j["gl_dim_end"] = u.gl_dim_end ? Json(*u.gl_dim_end) : Json(nullptr);
    j["objects"] = Json::array();
    for (const auto& o : u.objects)
        j["objects"].push_back(Json{{"name", o.name},
                                    {"shift", o.shift},
                                    {"power", o.power},
                                    {"fingerprint", to_json(fingerprint(o.module))}});
    j["pass"] = w.pass;
    j["checked_pairs"] = w.checked_pairs;
    Json viol = Json::array();
    for (const auto& v : w.violations)
        viol.push_back(Json{{"x", v.x_name}, {"y", v.y_name}, {"degree", v.degree}, {"dim", v.dim}});
    j["hom_violations"] = viol;
    Json stab = Json::array();
    for (const auto& s : w.stability)
        stab.push_back(Json{{"object", u.objects.at(s.object).name},
                            {"direction", s.direction},
                            {"boundary", s.boundary}});
    j["stability"] = stab;
    j["boundary_flags"] = w.boundary_flags;
    return j;
}

}  // namespace hart
