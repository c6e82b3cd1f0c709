#include <cstdlib>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hart/dynkin.hpp"
#include "hart/examples.hpp"
#include "hart/io.hpp"

using namespace hart;

namespace {

// Structural equality, independent of the serializer.
bool same_presentation(const Presentation& a, const Presentation& b) {
    const Quiver &p = a.quiver, &q = b.quiver;
    if (p.vertices() != q.vertices() || p.num_arrows() != q.num_arrows()) return false;
    for (int k = 0; k < p.num_arrows(); ++k) {
        const auto &x = p.arrow(k), &y = q.arrow(k);
        if (x.name != y.name || x.from != y.from || x.to != y.to) return false;
    }
    if (a.relations.size() != b.relations.size() || a.tau != b.tau) return false;
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
        const auto &s = a.relations[r].terms, &t = b.relations[r].terms;
        if (s.size() != t.size()) return false;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (!(s[k].first == t[k].first) || !(s[k].second == t[k].second)) return false;
    }
    return true;
}

std::string error_of(const std::string& text) {
    try {
        parse_json(text, "f.json");
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("presentation JSON round trip") {
    std::vector<Presentation> ps = {examples::linear_a(4), examples::d4(), examples::auslander_a3(),
                                    examples::lambda_prime()};
    auto fam = build_family(examples::linear_a(3).quiver, 2);
    ps.push_back(fam.presentation);  // carries tau
    auto c = cone(fam.presentation, family_tau_minus(fam));
    ps.push_back(c.presentation);
    for (const auto& p : ps) {
        Json j = to_json(p);
        Presentation back = presentation_from_json(parse_json(dump(j)));
        CHECK(same_presentation(p, back));
        CHECK(dump(to_json(back)) == dump(j));
    }
    CHECK_FALSE(fam.presentation.tau.empty());
}

TEST_CASE("module JSON round trip on random modules") {
    std::mt19937 rng(7);
    for (auto p : {examples::linear_a(3), examples::auslander_a3(), examples::lambda_prime()}) {
        auto a = build_algebra(p);
        for (int t = 0; t < 20; ++t) {
            auto x = testing::random_module(a, rng);
            auto y = representation_from_json(parse_json(dump(to_json(x))), a);
            CHECK(y.dims == x.dims);
            CHECK(y.maps == x.maps);
        }
    }
}

TEST_CASE("module JSON accepts sparse input and rejects bad modules") {
    auto a = build_algebra(examples::linear_a(2));
    auto s = representation_from_json(parse_json(R"({"dims":{"2":1}})"), a);
    CHECK(s.dims == std::vector<std::size_t>{0, 1});
    auto p = representation_from_json(parse_json(R"({"dims":{"1":1,"2":1},"maps":{"a1":[["1/2"]]}})"), a);
    CHECK(p.maps[0](0, 0) == Rational(1, 2));
    CHECK_THROWS_WITH_AS(representation_from_json(parse_json(R"({"dims":{"1":1,"2":1},"maps":{"a1":[["1","2"]]}})"), a),
                         doctest::Contains("/maps/a1/0"), Error);
    CHECK_THROWS_WITH_AS(representation_from_json(parse_json(R"({"dims":{"9":1}})"), a),
                         doctest::Contains("unknown vertex"), Error);
    auto b = build_algebra(examples::linear_a(3));
    b = build_algebra(presentation_from_json(parse_json(R"({
        "vertices":["1","2","3"],
        "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}],
        "relations":[{"terms":[{"coef":"1","path":["a","b"]}]}]})")));
    CHECK_THROWS_WITH_AS(
        representation_from_json(parse_json(R"({"dims":{"1":1,"2":1,"3":1},"maps":{"a":[["1"]],"b":[["1"]]}})"), b),
        doctest::Contains("InvalidModule"), Error);
}

TEST_CASE("parse errors carry line and column") {
    CHECK(error_of("{\n  \"vertices\": [\"1\",\n  ]\n}").find("f.json:3:3") != std::string::npos);
    CHECK(error_of("{\"a\": 1,}").find("f.json:1:9") != std::string::npos);
    CHECK(error_of("[1, 2").find("ParseError") == 0);
    CHECK(error_of("{}").empty());
}

TEST_CASE("schema errors name the offending field") {
    CHECK_THROWS_WITH_AS(presentation_from_json(parse_json(R"({"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"x"}]})")),
                         doctest::Contains("/arrows/0/to"), Error);
    CHECK_THROWS_WITH_AS(presentation_from_json(parse_json(R"({"arrows":[]})")), doctest::Contains("vertices"), Error);
    CHECK_THROWS_WITH_AS(presentation_from_json(parse_json(R"({"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
        "relations":[{"terms":[{"coef":"1/0","path":["a"]}]}]})")),
                         doctest::Contains("/relations/0/terms/0/coef"), Error);
    CHECK(length_cap_of(parse_json(R"({"length_cap":7})"), 64) == 7);
    CHECK(length_cap_of(parse_json("{}"), 64) == 64);
}

TEST_CASE("DOT export is independent of input order") {
    Presentation p, q;
    p.quiver.add_vertex("b");
    p.quiver.add_vertex("a");
    p.quiver.add_vertex("c");
    p.quiver.add_arrow("x", "a", "b");
    p.quiver.add_arrow("y", "b", "c");
    p.tau[p.quiver.vertex_index("c")] = p.quiver.vertex_index("a");
    q.quiver.add_vertex("c");
    q.quiver.add_vertex("b");
    q.quiver.add_vertex("a");
    q.quiver.add_arrow("y", "b", "c");
    q.quiver.add_arrow("x", "a", "b");
    q.tau[q.quiver.vertex_index("c")] = q.quiver.vertex_index("a");
    CHECK(to_dot(p) == to_dot(q));
    CHECK(to_dot(p) ==
          "digraph \"Q\" {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -> \"b\" [label=\"x\"];\n"
          "  \"b\" -> \"c\" [label=\"y\"];\n  \"c\" -> \"a\" [style=dashed, constraint=false];\n}\n");
}

TEST_CASE("run configuration") {
    CHECK(parse_window("-2:2").lo == -2);
    CHECK(parse_window("-2:2").hi == 2);
    CHECK_THROWS_AS(parse_window("2:-2"), Error);
    CHECK_THROWS_AS(parse_window("1:x"), Error);
    CHECK_THROWS_AS(parse_window("3"), Error);
    CHECK(parse_format("dot") == OutputFormat::Dot);
    CHECK_THROWS_AS(parse_format("xml"), Error);
    setenv("HART_LAYER_CAP", "5", 1);
    CHECK(apply_env({}).layer_cap == 5);
    setenv("HART_LAYER_CAP", "0", 1);
    CHECK_THROWS_AS(apply_env({}), Error);
    unsetenv("HART_LAYER_CAP");
    CHECK(apply_env({}).layer_cap == kDefaultLayerCap);
}
