#include "hart/random.hpp"

namespace hart {

Representation random_module(const AlgebraPtr& a, std::mt19937& rng) {
    const int n = a->num_vertices();
    std::uniform_int_distribution<int> vert(0, n - 1), coef(-2, 2);
    int parts = 1 + rng() % 2;
    ProjObject p;
    for (int k = 0; k < parts; ++k) p.tops.push_back(vert(rng));
    bool inj = rng() % 2;
    Representation big = inj ? injective_sum(a, p.tops) : projective_sum(a, p);
    std::vector<Matrix> gens;
    int count = rng() % 3;
    for (int v = 0; v < n; ++v) gens.emplace_back(big.dims[v], 0);
    for (int t = 0; t < count; ++t) {
        int v = vert(rng);
        if (big.dims[v] == 0) continue;
        Vec g(big.dims[v]);
        for (auto& c : g) c = Rational(coef(rng));
        gens[v] = hstack(gens[v], Matrix::from_columns({g}, big.dims[v]));
    }
    if (inj) {
        auto s = generated_submodule(big, gens);
        if (s.module.is_zero()) return simple(a, p.tops[0]);
        return s.module;
    }
    auto sub = generated_submodule(big, gens);
    auto q = quotient(big, sub.map.maps);
    if (q.module.is_zero()) return simple(a, p.tops[0]);
    return q.module;
}

}  // namespace hart
