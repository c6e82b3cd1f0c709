#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hart/examples.hpp"
#include "hart/rep.hpp"

using namespace hart;

namespace {

using Dims = std::vector<std::size_t>;

AlgebraPtr a2() { return build_algebra(examples::linear_a(2)); }

}  // namespace

TEST_CASE("standard modules over kA2") {
    auto A = a2();
    auto s = std_modules(A);
    CHECK(s.projectives[0].dims == Dims{1, 1});
    CHECK(s.projectives[1].dims == Dims{0, 1});
    CHECK(s.injectives[0].dims == Dims{1, 0});
    CHECK(s.injectives[1].dims == Dims{1, 1});
    for (const auto& x : s.projectives) CHECK(is_valid(x));
    for (const auto& x : s.injectives) CHECK(is_valid(x));
    CHECK(hom_dim(s.projectives[0], s.simples[0]) == 1);
    CHECK(hom_dim(s.simples[0], s.projectives[0]) == 0);
    for (const auto& x : {s.projectives[0], s.projectives[1], s.injectives[0]}) CHECK(hom_dim(x, x) == 1);
}

TEST_CASE("injectives of the Auslander algebra of A3") {
    auto A = build_algebra(examples::auslander_a3());
    auto s = std_modules(A);
    CHECK(s.injectives[0].dims == Dims{1, 0, 0, 0, 0, 0});
    CHECK(s.injectives[1].dims == Dims{1, 1, 0, 0, 0, 0});
    CHECK(s.injectives[2].dims == Dims{1, 1, 1, 0, 0, 0});
    CHECK(s.injectives[3].dims == Dims{0, 1, 0, 1, 0, 0});
    CHECK(s.injectives[4].dims == Dims{0, 1, 1, 1, 1, 0});
    CHECK(s.injectives[5].dims == Dims{0, 0, 1, 0, 1, 1});
    std::size_t total = 0;
    for (int i = 0; i < 6; ++i) {
        CHECK(is_valid(s.projectives[i]));
        CHECK(is_valid(s.injectives[i]));
        total += s.projectives[i].total_dim();
        CHECK(top_dims(s.projectives[i]) == s.simples[i].dims);
        CHECK(socle_dims(s.injectives[i]) == s.simples[i].dims);
    }
    CHECK(total == A->dim());
}

TEST_CASE("kernel, cokernel and image over kA2") {
    auto A = a2();
    auto P1 = projective(A, 0), P2 = projective(A, 1);
    auto H = hom_basis(P2, P1);
    REQUIRE(H.size() == 1);
    auto k = ker_coker_im(P2, P1, H[0]);
    CHECK(k.kernel.module.is_zero());
    CHECK(k.cokernel.module.dims == Dims{1, 0});
    CHECK(is_isomorphic(k.cokernel.module, simple(A, 0)));
    auto z = ker_coker_im(P1, P1, zero_morphism(P1, P1));
    CHECK(z.kernel.module.dims == P1.dims);
    CHECK(z.cokernel.module.dims == P1.dims);
    auto id = ker_coker_im(P1, P1, identity(P1));
    CHECK(id.kernel.module.is_zero());
    CHECK(id.cokernel.module.is_zero());
    auto t = top_rad_soc(P1);
    CHECK(is_isomorphic(t.rad.module, P2));
    CHECK(is_isomorphic(t.top.module, simple(A, 0)));
}

TEST_CASE("covers and envelopes") {
    auto A = a2();
    auto c = projective_cover(simple(A, 0));
    CHECK(c.proj.tops == std::vector<int>{0});
    CHECK(is_morphism(c.module, simple(A, 0), c.epi));
    auto e = injective_envelope(simple(A, 1));
    CHECK(e.socles == std::vector<int>{1});
    CHECK(is_isomorphic(e.module, injective(A, 1)));
    CHECK(is_morphism(simple(A, 1), e.module, e.mono));
    auto p = projective_cover(projective(A, 0));
    CHECK(p.proj.tops == std::vector<int>{0});
    CHECK(is_isomorphism(p.epi));
}

TEST_CASE("nakayama on maps between projectives") {
    auto A = a2();
    // The inclusion P2 -> P1 is the arrow a1 in basis(0, 1).
    PMap f;
    f.src.tops = {1};
    f.dst.tops = {0};
    f.entry = {{Vec{Rational(1)}}};
    auto nf = nakayama(A, f);
    CHECK(is_morphism(injective(A, 1), injective(A, 0), nf));
    auto k = ker_coker_im(injective(A, 1), injective(A, 0), nf);
    CHECK(k.cokernel.module.is_zero());
    PMap id;
    id.src.tops = id.dst.tops = {0};
    id.entry = {{Vec{Rational(1)}}};
    CHECK(is_isomorphism(nakayama(A, id)));
    for (const auto& m : nakayama(A, id).maps) CHECK(m.is_identity());
}

TEST_CASE("duality") {
    auto A = build_algebra(examples::auslander_a3());
    for (int i = 0; i < 6; ++i) {
        auto d = dualize(projective(A, i));
        CHECK(d.alg.get() == A->opposite().get());
        CHECK(is_valid(d));
        CHECK(is_isomorphic(d, injective(A->opposite(), i)));
        auto dd = dualize(d);
        CHECK(dd.alg.get() == A.get());
        CHECK(dd.maps == projective(A, i).maps);
        CHECK(dualize(simple(A, i)).dims == simple(A->opposite(), i).dims);
    }
}

TEST_CASE("decompose standard examples") {
    auto A = a2();
    auto D = injective_sum(A, {0, 1});
    auto d = decompose(D);
    CHECK(d.summands.size() == 2);
    CHECK(d.classes.size() == 2);
    auto S = simple(A, 0);
    auto dd = decompose(direct_sum(S, S));
    CHECK(dd.summands.size() == 2);
    REQUIRE(dd.classes.size() == 1);
    CHECK(dd.classes[0].members.size() == 2);

    auto L = build_algebra(examples::auslander_a3());
    auto DL = injective_sum(L, {0, 1, 2, 3, 4, 5});
    auto dl = decompose(DL);
    CHECK(dl.summands.size() == 6);
    CHECK(dl.classes.size() == 6);
}

TEST_CASE("property: decomposition invariants on random modules") {
    std::mt19937 rng(5);
    std::vector<AlgebraPtr> algs{build_algebra(examples::auslander_a3()), build_algebra(examples::lambda_prime()),
                                 build_algebra(examples::linear_a(4)), build_algebra(examples::d4())};
    for (int t = 0; t < 60; ++t) {
        const auto& A = algs[t % algs.size()];
        auto x = testing::random_module(A, rng);
        auto y = testing::random_module(A, rng);
        REQUIRE(is_valid(x));
        auto sum = direct_sum(x, y);
        auto d = decompose(sum);
        std::vector<std::size_t> acc(sum.dims.size(), 0);
        for (std::size_t i = 0; i < d.summands.size(); ++i) {
            const auto& s = d.summands[i];
            CHECK(is_indecomposable(s.module));
            CHECK(is_morphism(s.module, sum, s.inclusion));
            CHECK(is_morphism(sum, s.module, s.projection));
            for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += s.module.dims[v];
            for (std::size_t j = 0; j < d.summands.size(); ++j) {
                auto c = compose(d.summands[j].projection, s.inclusion);
                if (i == j)
                    for (const auto& m : c.maps) CHECK(m.is_identity());
                else
                    CHECK(is_zero(c));
            }
        }
        CHECK(acc == sum.dims);
        // Krull-Schmidt: the summand count is additive.
        CHECK(d.summands.size() == decompose(x).summands.size() + decompose(y).summands.size());
        CHECK(is_isomorphic(sum, direct_sum(y, x)));
        CHECK(hom_dim(x, sum) == hom_dim(x, x) + hom_dim(x, y));
        for (const auto& f : hom_basis(x, y)) CHECK(is_morphism(x, y, f));
    }
}
