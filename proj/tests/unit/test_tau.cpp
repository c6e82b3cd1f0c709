#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hart/examples.hpp"
#include "hart/tau.hpp"

using namespace hart;

namespace {

std::vector<std::size_t> layer_sizes(const TauClosure& c) {
    std::vector<std::size_t> out;
    for (const auto& l : c.layers) out.push_back(l.size());
    return out;
}

// Coxeter transformation on dimension vectors of a hereditary algebra:
// dim tau X = -(dim X) C^{-1} C^T for non-projective indecomposable X.
std::vector<long> coxeter(const AlgebraPtr& a, const std::vector<std::size_t>& d) {
    const int n = a->num_vertices();
    Matrix C(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C(i, j) = Rational((long)a->dim(i, j));
    Matrix row(1, n);
    for (int i = 0; i < n; ++i) row(0, i) = Rational((long)d[i]);
    Matrix t = row * (*inverse(C)) * C.transpose();
    std::vector<long> out;
    for (int i = 0; i < n; ++i) out.push_back(-std::stol(t(0, i).str()));
    return out;
}

std::vector<long> as_long(const std::vector<std::size_t>& d) { return std::vector<long>(d.begin(), d.end()); }

bool same_morphism(const RepMorphism& f, const RepMorphism& g) {
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        if (f.maps[v] != g.maps[v]) return false;
    return true;
}

}  // namespace

TEST_CASE("tau_1 of S1 over kA2 is S2") {
    auto A = build_algebra(examples::linear_a(2));
    auto t = tau(simple(A, 0), 1);
    CHECK(t.dims == std::vector<std::size_t>{0, 1});
    CHECK(is_isomorphic(t, simple(A, 1)));
    CHECK(tau(projective(A, 0), 1).is_zero());
    CHECK(tau(projective(A, 1), 3).is_zero());
    auto back = tau(simple(A, 1), 1, TauDirection::Inverse);
    CHECK(is_isomorphic(back, simple(A, 0)));
}

TEST_CASE("tau_1 agrees with the Coxeter transformation on hereditary algebras") {
    for (auto pres : {examples::linear_a(4), examples::d4(), examples::linear_a(5)}) {
        auto A = build_algebra(pres);
        auto c = tau_closure(A, 1);
        for (const auto& o : c.objects) {
            auto t = tau(o.module, 1);
            if (t.is_zero()) {
                CHECK(proj_dim(o.module, 1) == std::optional<std::size_t>(0));
                continue;
            }
            CHECK(as_long(t.dims) == coxeter(A, o.module.dims));
        }
    }
}

TEST_CASE("Hom(Y, tau_n X) has the dimension of Ext^n(X, Y) when gl.dim <= n") {
    std::mt19937 rng(7);
    int checked = 0;
    struct Inst {
        Presentation p;
        std::size_t n;
    };
    for (auto inst : {Inst{examples::linear_a(3), 1}, Inst{examples::d4(), 1}, Inst{examples::auslander_a3(), 2},
                      Inst{examples::lambda_prime(), 2}}) {
        auto A = build_algebra(inst.p);
        for (int t = 0; t < 12; ++t) {
            auto x = hart::testing::random_module(A, rng);
            auto y = hart::testing::random_module(A, rng);
            auto tx = tau(x, inst.n);
            auto ty = tau(y, inst.n, TauDirection::Inverse);
            std::size_t e = ext_dim(x, y, inst.n);
            CHECK(hom_dim(y, tx) == e);
            CHECK(hom_dim(ty, x) == e);
            ++checked;
        }
    }
    CHECK(checked == 48);
}

TEST_CASE("tau on morphisms is functorial") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto random_hom = [&](const Representation& x, const Representation& y) {
        RepMorphism f = zero_morphism(x, y);
        for (const auto& b : hom_basis(x, y)) f = add(f, scale(b, Rational(coef(rng))));
        return f;
    };
    for (auto pres : {examples::auslander_a3(), examples::lambda_prime()}) {
        auto A = build_algebra(pres);
        for (int t = 0; t < 12; ++t) {
            auto x = hart::testing::random_module(A, rng);
            auto y = direct_sum(x, hart::testing::random_module(A, rng));
            auto z = direct_sum(y, hart::testing::random_module(A, rng));
            for (auto dir : {TauDirection::Forward, TauDirection::Inverse}) {
                auto tx = tau(x, 2, dir);
                CHECK(same_morphism(tau_morphism(x, x, identity(x), 2, dir), identity(tx)));
                auto f = random_hom(x, y), g = random_hom(y, z);
                auto tf = tau_morphism(x, y, f, 2, dir);
                auto tg = tau_morphism(y, z, g, 2, dir);
                CHECK(is_morphism(tx, tau(y, 2, dir), tf));
                CHECK(same_morphism(compose(tg, tf), tau_morphism(x, z, compose(g, f), 2, dir)));
                CHECK(same_morphism(add(tf, tf), tau_morphism(x, y, add(f, f), 2, dir)));
            }
        }
    }
}

TEST_CASE("closures of the small examples") {
    auto A4 = build_algebra(examples::linear_a(4));
    auto c4 = tau_closure(A4, 1);
    CHECK(layer_sizes(c4) == std::vector<std::size_t>{4, 3, 2, 1});
    CHECK(c4.objects.size() == 10);
    CHECK(c4.tau_finite);
    CHECK(c4.layers_disjoint);
    std::vector<std::size_t> ell;
    for (auto i : c4.layers[0]) ell.push_back(c4.objects[i].ell);
    CHECK(ell == std::vector<std::size_t>{3, 2, 1, 0});

    auto L = build_algebra(examples::auslander_a3());
    auto c = tau_closure(L, 2);
    CHECK(layer_sizes(c) == std::vector<std::size_t>{6, 3, 1});
    std::vector<std::vector<std::size_t>> dims1;
    for (auto i : c.layers[1]) dims1.push_back(c.objects[i].module.dims);
    std::sort(dims1.begin(), dims1.end());
    CHECK(dims1 == std::vector<std::vector<std::size_t>>{
                       {0, 0, 0, 0, 1, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 0}});
    CHECK(c.objects[c.layers[2][0]].module.dims == std::vector<std::size_t>{0, 0, 0, 0, 0, 1});

    auto Lp = build_algebra(examples::lambda_prime());
    auto cp = tau_closure(Lp, 2);
    CHECK(layer_sizes(cp) == std::vector<std::size_t>{6, 3});

    auto D = build_algebra(examples::d4());
    auto cd = tau_closure(D, 1);
    CHECK(cd.objects.size() == 12);
    for (auto i : cd.layers[0]) CHECK(cd.objects[i].ell == 2);

    CHECK_THROWS_WITH_AS(tau_closure(L, 1), doctest::Contains("gl.dim"), Error);
}

TEST_CASE("closure structure: quasi-inverse, ell bijection and Hom vanishing") {
    struct Inst {
        Presentation p;
        std::size_t n;
    };
    for (auto inst : {Inst{examples::linear_a(4), 1}, Inst{examples::d4(), 1}, Inst{examples::auslander_a3(), 2},
                      Inst{examples::lambda_prime(), 2}}) {
        auto A = build_algebra(inst.p);
        auto c = tau_closure(A, inst.n);
        CHECK(c.tau_indecomposable);
        for (std::size_t i = 0; i < c.objects.size(); ++i) {
            const auto& X = c.objects[i].module;
            auto t = tau(X, inst.n);
            if (!t.is_zero()) CHECK(is_isomorphic(tau(t, inst.n, TauDirection::Inverse), X));
            if (c.objects[i].layer > 0) {
                auto u = tau(X, inst.n, TauDirection::Inverse);
                CHECK(is_isomorphic(tau(u, inst.n), X));
            }
        }
        // I -> tau^{ell_I} I hits every object of P(M) exactly once.
        std::vector<int> hits(c.objects.size(), 0);
        for (auto i : c.layers[0]) {
            std::size_t j = i;
            for (std::size_t k = 0; k < c.objects[i].ell; ++k) j = *c.tau_of(j);
            CHECK(c.objects[j].tau.empty());
            ++hits[j];
        }
        for (std::size_t j = 0; j < c.objects.size(); ++j) CHECK(hits[j] == (c.objects[j].tau.empty() ? 1 : 0));
        for (std::size_t i = 0; i < c.objects.size(); ++i)
            for (std::size_t j = 0; j < c.objects.size(); ++j)
                if (c.objects[i].layer < c.objects[j].layer)
                    CHECK(hom_dim(c.objects[i].module, c.objects[j].module) == 0);
    }
}

TEST_CASE("n-rigidity") {
    auto A = build_algebra(examples::linear_a(2));
    CHECK(is_n_rigid({simple(A, 0), simple(A, 1)}, 1).rigid);
    auto r = is_n_rigid({simple(A, 0), simple(A, 1)}, 2);
    CHECK_FALSE(r.rigid);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].x == 0);
    CHECK(r.violations[0].y == 1);
    CHECK(r.violations[0].degree == 1);
    auto L = build_algebra(examples::auslander_a3());
    CHECK(is_n_rigid(tau_closure(L, 2).modules(), 2).rigid);
}

TEST_CASE("completeness verdicts") {
    for (int m = 1; m <= 5; ++m) {
        auto r = verify_n_complete(build_algebra(examples::linear_a(m)), 1);
        CHECK(r.complete);
        CHECK(r.absolutely);
    }
    auto L = build_algebra(examples::auslander_a3());
    auto r = verify_n_complete(L, 2);
    CHECK(r.complete);
    CHECK(r.absolutely);
    CHECK(r.gl_dim_end <= std::optional<std::size_t>(3));

    auto Lp = build_algebra(examples::lambda_prime());
    auto rp = verify_n_complete(Lp, 2);
    CHECK(rp.complete);
    CHECK_FALSE(rp.absolutely);
    std::vector<Representation> ps;
    for (auto i : rp.p_objects) ps.push_back(rp.closure->objects[i].module);
    auto rad3 = top_rad_soc(projective(Lp, 2)).rad.module;
    auto T = direct_sum({projective(Lp, 0), projective(Lp, 1), projective(Lp, 2), simple(Lp, 3), simple(Lp, 4), rad3},
                        Lp);
    CHECK(ps.size() == 6);
    CHECK(is_isomorphic(direct_sum(ps, Lp), T));

    auto bad = verify_n_complete(L, 1);
    CHECK_FALSE(bad.complete);
    CHECK(bad.reason == "GlobalDimensionTooLarge");
}

TEST_CASE("AR quiver of mod kA_m") {
    auto A2 = build_algebra(examples::linear_a(2));
    auto ar2 = ar_quiver(tau_closure(A2, 1));
    CHECK(ar2.presentation.quiver.num_vertices() == 3);
    CHECK(ar2.presentation.quiver.num_arrows() == 2);
    CHECK(ar2.presentation.relations.size() == 1);
    CHECK(ar2.presentation.tau.size() == 1);

    auto A4 = build_algebra(examples::linear_a(4));
    auto c = tau_closure(A4, 1);
    auto ar = ar_quiver(c);
    CHECK(ar.presentation.quiver.num_vertices() == 10);
    CHECK(ar.presentation.quiver.num_arrows() == 12);
    CHECK(ar.presentation.relations.size() == 6);
    CHECK(ar.presentation.tau.size() == 6);

    Presentation one;
    one.quiver.add_vertex("1");
    auto k = build_algebra(one);
    auto ark = ar_quiver(tau_closure(k, 3));
    CHECK(ark.presentation.quiver.num_vertices() == 1);
    CHECK(ark.presentation.quiver.num_arrows() == 0);
}

TEST_CASE("extracted presentations reproduce every Hom dimension") {
    struct Inst {
        Presentation p;
        std::size_t n;
    };
    for (auto inst : {Inst{examples::linear_a(4), 1}, Inst{examples::d4(), 1}, Inst{examples::auslander_a3(), 2},
                      Inst{examples::lambda_prime(), 2}}) {
        auto A = build_algebra(inst.p);
        auto ar = ar_quiver(tau_closure(A, inst.n));
        auto P = build_algebra(ar.presentation);
        const int N = P->num_vertices();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) CHECK(P->dim(i, j) == ar.hom_dims[i][j]);
        for (const auto& r : ar.presentation.relations)
            for (const auto& t : r.terms) CHECK(t.second.length() >= 2);
    }
}

TEST_CASE("cone algebra of kA2 is the Auslander algebra") {
    auto A2 = build_algebra(examples::linear_a(2));
    auto ca = cone_algebra(A2, 1);
    CHECK(ca.gamma->num_vertices() == 3);
    CHECK(global_dimension(ca.gamma) == std::optional<std::size_t>(2));
    CHECK(verify_n_complete(ca.gamma, 2).complete);
}

TEST_CASE("cone of the mod kA4 quiver presents the closure of its cone algebra") {
    auto A4 = build_algebra(examples::linear_a(4));
    auto ca = cone_algebra(A4, 1);
    CHECK(ca.gamma->num_vertices() == 10);
    auto predicted = cone(ca.ar.presentation, ca.ar.tau_minus);
    CHECK(predicted.presentation.quiver.num_vertices() == 20);
    auto c2 = tau_closure(ca.gamma, 2);
    CHECK(c2.objects.size() == 20);
    auto ar2 = ar_quiver(c2, false);
    auto iso = presentation_isomorphic(ar2.presentation, predicted.presentation);
    CHECK_MESSAGE(iso.isomorphic, iso.diagnostic);
}

TEST_CASE("presentation isomorphism") {
    auto a3 = examples::linear_a(3);
    auto self = presentation_isomorphic(a3, a3);
    CHECK(self.isomorphic);
    CHECK(self.bijection == std::vector<int>{0, 1, 2});
    auto no = presentation_isomorphic(a3, examples::d4());
    CHECK_FALSE(no.isomorphic);
    CHECK(no.diagnostic.find("vertex counts") != std::string::npos);
    // Same quiver, different relations: Hom dimensions tell them apart.
    Presentation with_zero = a3;
    with_zero.relations.push_back(LinComb{{{Rational(1), make_path(a3.quiver, {"a1", "a2"})}}});
    CHECK_FALSE(presentation_isomorphic(a3, with_zero).isomorphic);
    // Relabelled copy.
    Presentation r;
    r.quiver.add_vertex("z");
    r.quiver.add_vertex("y");
    r.quiver.add_vertex("x");
    r.quiver.add_arrow("p", "x", "y");
    r.quiver.add_arrow("q", "y", "z");
    auto rel = presentation_isomorphic(a3, r);
    CHECK(rel.isomorphic);
    CHECK(rel.bijection == std::vector<int>{2, 1, 0});
}
