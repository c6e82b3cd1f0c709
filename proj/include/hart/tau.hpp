#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hart/homological.hpp"

namespace hart {

enum class TauDirection { Forward, Inverse };

// tau_n X = Ker(nu P_n -> nu P_{n-1}) from a minimal projective resolution;
// zero when pd X < n. The inverse is D tau_n D over the opposite algebra.
Representation tau(const Representation& x, std::size_t n, TauDirection dir = TauDirection::Forward);

// Action on a morphism f: X -> Y, as a map tau(X) -> tau(Y) between the
// representations returned by tau(). Built by lifting f to the minimal
// resolutions and restricting nu(f_n) to the kernels.
RepMorphism tau_morphism(const Representation& x, const Representation& y, const RepMorphism& f, std::size_t n,
                         TauDirection dir = TauDirection::Forward);

struct ClosureObject {
    Representation module;
    std::string name;
    std::size_t layer = 0;
    int root = 0;                      // X is a summand of tau^layer I_root
    std::vector<std::size_t> tau;      // indices of the summands of tau_n X
    std::size_t ell = 0;               // sup{i : tau_n^i X != 0}
    bool is_injective() const { return layer == 0; }
};

struct TauClosure {
    AlgebraPtr alg;
    std::size_t n = 1;
    std::vector<ClosureObject> objects;
    std::vector<std::vector<std::size_t>> layers;  // object indices per layer
    bool tau_finite = false;
    bool layers_disjoint = true;
    // tau_n of each X is zero or indecomposable.
    bool tau_indecomposable = true;

    Representation generator() const;
    std::vector<Representation> modules() const;
    std::optional<std::size_t> tau_of(std::size_t i) const;
    std::optional<std::size_t> tau_inverse_of(std::size_t i) const;
    std::optional<std::size_t> find(const Representation& x) const;
};

constexpr std::size_t kDefaultLayerCap = 64;

// Errors: GlobalDimensionTooLarge (when check_gl_dim), LayerCapExceeded.
TauClosure tau_closure(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap = kDefaultLayerCap,
                       bool check_gl_dim = true);

struct ExtViolation {
    std::size_t x = 0, y = 0, degree = 0, dim = 0;
};
struct RigidityReport {
    bool rigid = true;
    std::vector<ExtViolation> violations;
};
// Ext^i(X, Y) = 0 for all pairs and 0 < i < n.
RigidityReport is_n_rigid(const std::vector<Representation>& modules, std::size_t n);

// The Auslander-Reiten quiver of a closure with relations presenting the
// category add M. Vertex k is closure object k. Paths compose in traversal
// order, so a path X -> Z -> Y evaluates to (map Z->Y) after (map X->Z).
struct ARQuiver {
    Presentation presentation;
    std::vector<RepMorphism> arrow_maps;           // chosen irreducible maps
    std::vector<std::vector<std::size_t>> hom_dims;  // dim Hom(X_i, X_j)
    std::vector<std::size_t> order;                 // a linear extension of the Hom order
    TauMinusArrowMap tau_minus;                     // filled when requested
};

// Errors: NotDirected (a cycle of nonzero Hom spaces or End(X) != k),
// TauNotQuasiInverse.
ARQuiver ar_quiver(const TauClosure& c, bool with_tau_minus = true);

struct ConeAlgebra {
    AlgebraPtr gamma;      // End(M), built from the opposite presentation
    TauClosure closure;
    ARQuiver ar;           // vertex k of gamma <-> closure object k
};
ConeAlgebra cone_algebra(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap = kDefaultLayerCap);

struct CompletenessReport {
    std::size_t n = 1;
    std::optional<std::size_t> gl_dim;
    bool gl_dim_ok = false;
    bool tau_finite = false;
    std::vector<std::size_t> layer_sizes;
    std::vector<std::size_t> p_objects;    // P(M): tau_n X = 0
    std::vector<std::size_t> mp_objects;   // M_P: the others
    bool p_matches_pd = false;             // tau_n X = 0 iff pd X < n
    // (A_n)
    TiltingReport tilting;
    bool clause_a = false;
    // (B_n)
    RigidityReport rigidity;
    bool t_and_dual_in_add_m = false;
    bool m_in_t_perp = false;
    std::optional<std::size_t> gl_dim_end;
    bool clause_b = false;
    // (C_n): ext_table[k][i-1] = dim Ext^i(mp_objects[k], Lambda)
    std::vector<std::vector<std::size_t>> ext_table;
    bool clause_c = false;
    bool absolutely = false;
    bool complete = false;
    std::string reason;
    std::optional<TauClosure> closure;
};

CompletenessReport verify_n_complete(const AlgebraPtr& a, std::size_t n, std::size_t layer_cap = kDefaultLayerCap);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> bijection;  // computed vertex -> predicted vertex
    std::string diagnostic;
};
// Quiver isomorphism respecting arrow multiplicities and tau, certified by
// equal Hom dimensions of the two presented categories.
IsoResult presentation_isomorphic(const Presentation& computed, const Presentation& predicted,
                                  std::size_t length_cap = kDefaultLengthCap);

}  // namespace hart
