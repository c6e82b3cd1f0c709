#include "doctest.h"
#include "hart/dynkin.hpp"
#include "hart/examples.hpp"
#include "hart/tau.hpp"

using namespace hart;

namespace {

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Quiver e6() {
    Quiver q;
    for (int i = 1; i <= 6; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "4");
    q.add_arrow("d", "4", "5");
    q.add_arrow("e", "6", "3");
    return q;
}

}  // namespace

TEST_CASE("Dynkin recognition") {
    CHECK(dynkin_type(examples::linear_a(4).quiver) == std::vector<std::string>{"A4"});
    CHECK(dynkin_type(examples::d4().quiver) == std::vector<std::string>{"D4"});
    CHECK(dynkin_type(e6()) == std::vector<std::string>{"E6"});
    Quiver cyc;
    cyc.add_vertex("1");
    cyc.add_vertex("2");
    cyc.add_vertex("3");
    cyc.add_arrow("a", "1", "2");
    cyc.add_arrow("b", "2", "3");
    cyc.add_arrow("c", "1", "3");
    CHECK_THROWS_WITH_AS(dynkin_type(cyc), doctest::Contains("cycle"), Error);
    Quiver kron;
    kron.add_vertex("1");
    kron.add_vertex("2");
    kron.add_arrow("a", "1", "2");
    kron.add_arrow("b", "1", "2");
    CHECK_THROWS_AS(ell_values(kron), Error);
    Quiver d4t;  // extended D4
    for (int i = 0; i < 5; ++i) d4t.add_vertex(std::to_string(i));
    for (int i = 1; i < 5; ++i) d4t.add_arrow("a" + std::to_string(i), std::to_string(i), "0");
    CHECK_THROWS_AS(dynkin_type(d4t), Error);
}

TEST_CASE("ell values") {
    CHECK(ell_values(examples::linear_a(4).quiver) == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(ell_values(examples::d4().quiver) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(ell_values(examples::linear_a(1).quiver) == std::vector<std::size_t>{0});
    // Number of indecomposables of a Dynkin quiver: sum of (ell_x + 1).
    auto e = ell_values(e6());
    std::size_t total = 0;
    for (auto l : e) total += l + 1;
    CHECK(total == 36);
}

TEST_CASE("simplices") {
    CHECK(simplex(2, 2).size() == 6);
    CHECK(simplex(3, 0) == std::vector<SimplexPoint>{{0, 0, 0}});
    CHECK(simplex(1, 1) == std::vector<SimplexPoint>{{0}, {1}});
    for (std::size_t n = 1; n <= 4; ++n)
        for (long l = 0; l <= 4; ++l) {
            auto s = simplex(n, l);
            CHECK((long)s.size() == binom(l + (long)n, (long)n));
            CHECK(std::is_sorted(s.begin(), s.end()));
        }
}

TEST_CASE("family vertex counts") {
    auto a4 = examples::linear_a(4).quiver;
    CHECK(build_family(a4, 1).presentation.quiver.num_vertices() == 10);
    CHECK(build_family(a4, 2).presentation.quiver.num_vertices() == 20);
    CHECK(build_family(a4, 3).presentation.quiver.num_vertices() == 35);
    CHECK(build_family(examples::d4().quiver, 2).presentation.quiver.num_vertices() == 24);
    CHECK(build_family(examples::d4().quiver, 1).presentation.quiver.num_vertices() == 12);
    auto cyl = build_family(a4, 1, FamilyKind::Cylinder, -1, 1);
    CHECK(cyl.presentation.quiver.num_vertices() == 12);
}

TEST_CASE("family Q^(1) is the AR quiver of mod kQ") {
    for (auto p : {examples::linear_a(3), examples::linear_a(4), examples::d4()}) {
        auto A = build_algebra(p);
        auto ar = ar_quiver(tau_closure(A, 1), false);
        auto fam = build_family(p.quiver, 1);
        auto iso = presentation_isomorphic(ar.presentation, fam.presentation);
        CHECK_MESSAGE(iso.isomorphic, iso.diagnostic);
    }
}

TEST_CASE("family Q^(n) is the cone of Q^(n-1)") {
    for (auto p : {examples::linear_a(3), examples::linear_a(4), examples::d4()}) {
        for (std::size_t n = 2; n <= 3; ++n) {
            auto prev = build_family(p.quiver, n - 1);
            auto c = cone(prev.presentation, family_tau_minus(prev));
            auto fam = build_family(p.quiver, n);
            auto iso = presentation_isomorphic(c.presentation, fam.presentation);
            CHECK_MESSAGE(iso.isomorphic, iso.diagnostic);
        }
    }
}

TEST_CASE("tower algebras") {
    auto t1 = tower(4, 1);
    CHECK(t1.algebra->dim() == 10);
    auto t2 = tower(2, 2);
    CHECK(t2.algebra->num_vertices() == 3);
    for (int m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK((long)tower(m, n).algebra->num_vertices() == binom(m + (long)n - 1, (long)n));
}
