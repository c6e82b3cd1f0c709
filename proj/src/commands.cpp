#include "hart/commands.hpp"

#include <sstream>

#include "hart/examples.hpp"

namespace hart {

namespace {

std::string vec_string(const std::vector<std::size_t>& v) {
    bool small = true;
    for (auto d : v) small = small && d < 10;
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!small && i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string fp_string(const Fingerprint& f) {
    return "dims " + vec_string(f.dims) + " top " + vec_string(f.top) + " socle " + vec_string(f.socle);
}

Json header(const char* command, const RunConfig& cfg) {
    Json j;
    j["command"] = command;
    j["seed"] = cfg.seed;
    j["length_cap"] = cfg.length_cap;
    j["layer_cap"] = cfg.layer_cap;
    return j;
}

void merge(Json& into, const Json& from) {
    for (const auto& [k, v] : from.items()) into[k] = v;
}

const char* yes(bool b) { return b ? "pass" : "fail"; }

std::string sizes_string(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

CommandResult cmd_check(const Presentation& p, std::size_t n, const RunConfig& cfg) {
    auto a = build_algebra(p, cfg.length_cap);
    return check_result(verify_n_complete(a, n, cfg.layer_cap), cfg);
}

CommandResult check_result(const CompletenessReport& r, const RunConfig& cfg) {
    CommandResult out;
    out.report = header("check", cfg);
    merge(out.report, to_json(r));
    std::ostringstream os;
    os << "gl.dim " << (r.gl_dim ? std::to_string(*r.gl_dim) : std::string("> cap")) << ", layers "
       << sizes_string(r.layer_sizes) << "\n";
    os << "(A) " << yes(r.clause_a) << ", (B) " << yes(r.clause_b) << ", (C) " << yes(r.clause_c) << "\n";
    os << verdict(r) << "\n";
    if (r.complete && !r.absolutely && r.closure)
        for (auto i : r.p_objects) os << "T: " << fp_string(fingerprint(r.closure->objects[i].module)) << "\n";
    out.text = os.str();
    out.exit_code = r.complete ? 0 : 1;
    return out;
}

CommandResult cmd_closure(const Presentation& p, std::size_t n, const RunConfig& cfg, bool with_modules) {
    auto a = build_algebra(p, cfg.length_cap);
    return closure_result(tau_closure(a, n, cfg.layer_cap, false), cfg, with_modules);
}

CommandResult closure_result(const TauClosure& c, const RunConfig& cfg, bool with_modules) {
    CommandResult out;
    out.report = header("closure", cfg);
    merge(out.report, to_json(c, with_modules));
    std::ostringstream os;
    os << "layers " << sizes_string([&] {
        std::vector<std::size_t> s;
        for (const auto& l : c.layers) s.push_back(l.size());
        return s;
    }()) << "\n";
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
        const auto& o = c.objects[i];
        os << o.layer << " " << o.name << " ell " << o.ell << " " << fp_string(fingerprint(o.module)) << "\n";
    }
    out.text = os.str();
    auto ar = ar_quiver(c, false);
    out.dot = to_dot(ar.presentation, "M");
    return out;
}

CommandResult cmd_quiver(const Presentation& p, std::size_t n, const RunConfig& cfg) {
    auto out = cmd_closure(p, n, cfg);
    out.report["command"] = "quiver";
    out.text = out.dot;
    return out;
}

CommandResult cmd_cone(const Presentation& p, std::size_t n, const RunConfig& cfg) {
    auto a = build_algebra(p, cfg.length_cap);
    return cone_result(cone_algebra(a, n, cfg.layer_cap), cfg);
}

CommandResult cone_result(const ConeAlgebra& c, const RunConfig& cfg) {
    auto gl = global_dimension(c.gamma);
    std::size_t n = c.closure.n;
    CommandResult out;
    out.report = header("cone", cfg);
    out.report["n"] = n;
    out.report["simples"] = c.gamma->num_vertices();
    out.report["dimension"] = c.gamma->dim();
    out.report["gl_dim"] = gl ? Json(*gl) : Json(nullptr);
    out.report["algebra"] = to_json(c.gamma->presentation());
    std::ostringstream os;
    os << "cone: " << c.gamma->num_vertices() << " simples, dimension " << c.gamma->dim() << ", gl.dim "
       << (gl ? std::to_string(*gl) : std::string("> cap")) << "\n";
    out.text = os.str();
    out.dot = to_dot(c.gamma->presentation(), "Gamma");
    return out;
}

CommandResult cmd_tower(int m, std::size_t n_max, const RunConfig& cfg) {
    if (m < 1 || n_max < 1) throw Error("ConfigError", "tower needs m >= 1 and n_max >= 1");
    auto base = examples::linear_a(m);
    CommandResult out;
    out.report = header("tower", cfg);
    out.report["m"] = m;
    out.report["levels"] = Json::array();
    std::ostringstream os;
    bool ok = true;
    AlgebraPtr level = build_algebra(base, cfg.length_cap);
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto r = verify_n_complete(level, n, cfg.layer_cap);
        auto c = cone_algebra(level, n, cfg.layer_cap);
        auto fam = build_family(base.quiver, n);
        auto iso = presentation_isomorphic(c.ar.presentation, fam.presentation, cfg.length_cap);
        bool pass = r.complete && iso.isomorphic;
        ok = ok && pass;
        Json l;
        l["n"] = n;
        l["simples"] = level->num_vertices();
        l["verdict"] = verdict(r);
        l["complete"] = r.complete;
        l["cone_vertices"] = c.gamma->num_vertices();
        l["cone_arrows"] = c.gamma->quiver().num_arrows();
        l["cone_relations"] = c.gamma->presentation().relations.size();
        l["family_vertices"] = fam.presentation.quiver.num_vertices();
        l["isomorphic_to_family"] = iso.isomorphic;
        l["diagnostic"] = iso.diagnostic;
        l["pass"] = pass;
        out.report["levels"].push_back(l);
        os << "level " << n << ": " << level->num_vertices() << " simples, " << verdict(r) << "; cone "
           << c.gamma->num_vertices() << " vertices, " << c.gamma->presentation().relations.size()
           << " relations, " << (iso.isomorphic ? "isomorphic to" : "differs from") << " Q^(" << n << ")\n";
        level = c.gamma;
    }
    out.report["pass"] = ok;
    out.text = os.str();
    out.exit_code = ok ? 0 : 1;
    return out;
}

CommandResult cmd_family(const Quiver& q, std::size_t n, FamilyKind kind, long lo, long hi, const RunConfig& cfg) {
    auto f = build_family(q, n, kind, lo, hi);
    CommandResult out;
    out.report = header("family", cfg);
    out.report["n"] = n;
    out.report["kind"] = kind == FamilyKind::Cone ? "cone" : "cylinder";
    if (kind == FamilyKind::Cylinder) out.report["window"] = {lo, hi};
    out.report["types"] = dynkin_type(q);
    out.report["vertices"] = f.presentation.quiver.num_vertices();
    out.report["presentation"] = to_json(f.presentation);
    std::ostringstream os;
    os << "Q^(" << n << "): " << f.presentation.quiver.num_vertices() << " vertices, "
       << f.presentation.quiver.num_arrows() << " arrows, " << f.presentation.relations.size() << " relations\n";
    out.text = os.str();
    out.dot = to_dot(f.presentation, "Q" + std::to_string(n));
    return out;
}

CommandResult cmd_derived(const Presentation& p, std::size_t n, const RunConfig& cfg) {
    auto a = build_algebra(p, cfg.length_cap);
    auto u = u_closure(a, n, cfg.window);
    return derived_result(u, verify_ct_window(u.objects, n, u.window), cfg);
}

CommandResult derived_result(const UClosure& u, const WindowReport& w, const RunConfig& cfg) {
    CommandResult out;
    out.report = header("derived", cfg);
    merge(out.report, to_json(u, w));
    std::ostringstream os;
    os << "window [" << u.window.lo << "," << u.window.hi << "]: " << u.objects.size() << " objects, "
       << w.checked_pairs << " pairs, " << w.violations.size() << " violations, " << w.boundary_flags
       << " boundary flags: " << yes(w.pass) << "\n";
    for (const auto& v : w.violations)
        os << "Hom(" << v.x_name << ", " << v.y_name << "[" << v.degree << "]) = " << v.dim << "\n";
    out.text = os.str();
    out.exit_code = w.pass ? 0 : 1;
    return out;
}

}  // namespace hart
