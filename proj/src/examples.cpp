#include "hart/examples.hpp"

namespace hart::examples {

namespace {

Relation rel(const Quiver& q, std::initializer_list<std::pair<int, std::vector<std::string>>> terms) {
    Relation r;
    for (const auto& [c, names] : terms) r.terms.push_back({Rational(c), make_path(q, names)});
    return r;
}

}  // namespace

Presentation linear_a(int m) {
    Presentation p;
    for (int i = 1; i <= m; ++i) p.quiver.add_vertex(std::to_string(i));
    for (int i = 1; i < m; ++i) p.quiver.add_arrow("a" + std::to_string(i), i - 1, i);
    return p;
}

Presentation d4() {
    Presentation p;
    for (int i = 1; i <= 4; ++i) p.quiver.add_vertex(std::to_string(i));
    p.quiver.add_arrow("a", "2", "1");
    p.quiver.add_arrow("b", "3", "1");
    p.quiver.add_arrow("c", "4", "1");
    return p;
}

Presentation auslander_a3() {
    Presentation p;
    Quiver& q = p.quiver;
    for (int i = 1; i <= 6; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a12", "1", "2");
    q.add_arrow("a23", "2", "3");
    q.add_arrow("a24", "2", "4");
    q.add_arrow("a35", "3", "5");
    q.add_arrow("a45", "4", "5");
    q.add_arrow("a56", "5", "6");
    p.relations.push_back(rel(q, {{1, {"a12", "a24"}}}));
    p.relations.push_back(rel(q, {{1, {"a23", "a35"}}, {-1, {"a24", "a45"}}}));
    p.relations.push_back(rel(q, {{1, {"a45", "a56"}}}));
    return p;
}

Presentation lambda_prime() {
    Presentation p;
    Quiver& q = p.quiver;
    for (int i = 1; i <= 6; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a13", "1", "3");
    q.add_arrow("a23", "2", "3");
    q.add_arrow("a34", "3", "4");
    q.add_arrow("a35", "3", "5");
    q.add_arrow("a46", "4", "6");
    q.add_arrow("a56", "5", "6");
    p.relations.push_back(rel(q, {{1, {"a13", "a34"}}}));
    p.relations.push_back(rel(q, {{1, {"a23", "a35"}}}));
    p.relations.push_back(rel(q, {{1, {"a34", "a46"}}, {-1, {"a35", "a56"}}}));
    return p;
}

}  // namespace hart::examples
