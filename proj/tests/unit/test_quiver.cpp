#include "doctest.h"
#include "hart/examples.hpp"
#include "hart/quiver.hpp"

using namespace hart;

namespace {

// Auslander-Reiten quiver of kA2: P2 -> P1 -> S1 with the mesh relation and
// the translation S1 |-> P2.
Presentation ar_a2() {
    Presentation p;
    p.quiver.add_vertex("P2");
    p.quiver.add_vertex("P1");
    p.quiver.add_vertex("S1");
    p.quiver.add_arrow("f", "P2", "P1");
    p.quiver.add_arrow("g", "P1", "S1");
    p.relations.push_back(Relation{{{Rational(1), make_path(p.quiver, {"f", "g"})}}});
    p.tau[2] = 0;
    return p;
}

}  // namespace

TEST_CASE("enumerate_paths ordering") {
    Presentation a2 = examples::linear_a(2);
    auto ps = enumerate_paths(a2.quiver, 0, 1, 3);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].arrows == std::vector<int>{0});
    auto e = enumerate_paths(a2.quiver, 0, 0, 3);
    REQUIRE(e.size() == 1);
    CHECK(e[0].length() == 0);

    Presentation lam = examples::auslander_a3();
    auto p16 = enumerate_paths(lam.quiver, 0, 5, 10);
    CHECK(p16.size() == 2);
    CHECK(p16[0] < p16[1]);
    CHECK(enumerate_paths(lam.quiver, 0, 5, 3).empty());
}

TEST_CASE("validate rejects malformed relations") {
    Presentation p = examples::linear_a(3);
    Relation bad;
    bad.terms.push_back({Rational(1), make_path(p.quiver, {"a1"})});
    bad.terms.push_back({Rational(1), make_path(p.quiver, {"a1", "a2"})});
    p.relations.push_back(bad);
    CHECK_THROWS_AS(validate(p), QuiverError);
    Presentation z = examples::linear_a(3);
    z.relations.push_back(Relation{{{Rational(0), make_path(z.quiver, {"a1", "a2"})}}});
    CHECK_THROWS_AS(validate(z), QuiverError);
}

TEST_CASE("cone of the A2 translation quiver") {
    auto c = cone(ar_a2(), {});
    const auto& q = c.presentation.quiver;
    CHECK(q.num_vertices() == 4);
    CHECK(q.num_arrows() == 3);
    CHECK(q.find_arrow(translation_arrow_name("S1", 1)).has_value());
    CHECK(q.find_vertex(layered_name("S1", 1)).has_value());
    // One transported mesh relation plus the square with zero left side.
    CHECK(c.presentation.relations.size() == 2);
    CHECK(c.presentation.tau.size() == 1);
}

TEST_CASE("cone with empty translation keeps only layer 0") {
    Presentation p = examples::linear_a(3);
    auto c = cone(p, {});
    CHECK(c.presentation.quiver.num_vertices() == 3);
    CHECK(c.presentation.quiver.num_arrows() == 2);
    for (const auto& o : c.origin) CHECK(o.second == 0);
}

TEST_CASE("cylinder vertex counts and translation arrows") {
    auto one = cylinder(ar_a2(), {}, 0, 0);
    CHECK(one.presentation.quiver.num_vertices() == 3);
    CHECK(one.presentation.quiver.num_arrows() == 2);
    for (long w = 1; w <= 4; ++w) {
        auto c = cylinder(ar_a2(), {}, 0, w - 1);
        CHECK(c.presentation.quiver.num_vertices() == 3 * w);
        CHECK(c.presentation.quiver.num_arrows() == (std::size_t)(2 * w + (w - 1)));
    }
}

TEST_CASE("opposite presentation reverses paths") {
    Presentation p = examples::auslander_a3();
    Presentation op = p.opposite();
    CHECK(op.quiver.arrow(0).from == p.quiver.arrow(0).to);
    const auto& t = op.relations[1].terms[0].second;
    CHECK(t.source == p.relations[1].terms[0].second.target);
    CHECK(t.arrows.front() == p.relations[1].terms[0].second.arrows.back());
}
