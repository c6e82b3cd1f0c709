#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hart/rep.hpp"

namespace hart {

// P_0 <- P_1 <- ... with diffs[k]: P_{k+1} -> P_k. `complete` means the
// last syzygy computed was zero, so the chain is the whole resolution.
struct ProjResolution {
    Representation module;
    std::vector<ProjObject> terms;
    std::vector<PMap> diffs;
    RepMorphism augmentation;  // P_0 -> X
    bool complete = false;
};

// I^0 -> I^1 -> ... with diffs[k]: I^k -> I^{k+1}.
struct InjResolution {
    Representation module;
    std::vector<std::vector<int>> terms;  // socle vertices of each I^k
    std::vector<RepMorphism> diffs;
    RepMorphism coaugmentation;  // X -> I^0
    bool complete = false;
};

// Terms P_0..P_length (fewer when a syzygy vanishes).
ProjResolution min_projective_resolution(const Representation& x, std::size_t length);
InjResolution min_injective_resolution(const Representation& x, std::size_t length);

// Each differential is radical (minimality) and consecutive composites vanish.
bool check_resolution(const ProjResolution& r);

// Ext^i(X, Y) from the cohomology of Hom(P_*(X), Y).
std::size_t ext_dim(const Representation& x, const Representation& y, std::size_t i);
// Same number from Hom(X, I^*(Y)), using Hom spaces of representations.
std::size_t ext_dim_injective(const Representation& x, const Representation& y, std::size_t i);

// Ext^i(X, Y) for i = 0..max_i from a resolution of X of length >= max_i+1
// (or a complete one).
std::vector<std::size_t> ext_dims(const ProjResolution& rx, const Representation& y, std::size_t max_i);

// Projective / injective dimension; nullopt when larger than `cap`.
std::optional<std::size_t> proj_dim(const Representation& x, std::size_t cap);
std::optional<std::size_t> inj_dim(const Representation& x, std::size_t cap);

struct HomologicalDims {
    std::optional<std::size_t> gl_dim;  // nullopt: exceeds the cap
    std::vector<std::optional<std::size_t>> pd_simple;
    std::size_t dom_dim = 0;
    bool dom_dim_infinite = false;
};

// Default cap: number of vertices (enough for acyclic quivers).
HomologicalDims homological_dimensions(const AlgebraPtr& a, std::optional<std::size_t> cap = std::nullopt);
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::optional<std::size_t> cap = std::nullopt);

// Indecomposable injectives that are also projective.
std::vector<bool> projective_injective_vertices(const AlgebraPtr& a);

enum class Side { Left, Right };

// Minimal add(G)-approximation. `gens` must be pairwise non-isomorphic
// indecomposables. Right: G' -> X; left: X -> G'.
struct Approximation {
    std::vector<std::size_t> summands;  // index into gens for each copy in `object`
    Representation object;
    RepMorphism map;
};
Approximation approximation(const Representation& x, const std::vector<Representation>& gens, Side side);

// Indecomposable summands of X up to isomorphism (one per class).
std::vector<Representation> basic_summands(const Representation& x);
// Every indecomposable summand of X is isomorphic to one of `gens`.
bool in_add(const Representation& x, const std::vector<Representation>& gens);

struct TiltingReport {
    bool is_tilting = false;
    std::optional<std::size_t> pd;
    bool self_orthogonal = false;
    bool coresolution_ok = false;
    std::vector<Representation> coresolution;  // T_0, T_1, ..., T_m
    std::string reason;
};
TiltingReport is_tilting(const Representation& t);

// Ext^i(T, X) = 0 for 0 < i <= bound, bound = pd T when finite.
bool perp_membership(const Representation& t, const Representation& x);

}  // namespace hart
