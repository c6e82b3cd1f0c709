#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hart/homological.hpp"

namespace hart {

// Bounded complex of arbitrary modules, cohomological grading:
// terms[i] sits in degree lo + i and diffs[i]: terms[i] -> terms[i+1].
struct ModuleComplex {
    AlgebraPtr alg;
    long lo = 0;
    std::vector<Representation> terms;
    std::vector<RepMorphism> diffs;

    long hi() const { return lo + (long)terms.size() - 1; }
    bool is_zero() const;
};

// Bounded complex of projectives, same grading, maps kept as PMaps.
struct PerfectComplex {
    AlgebraPtr alg;
    long lo = 0;
    std::vector<ProjObject> terms;
    std::vector<PMap> diffs;

    long hi() const { return lo + (long)terms.size() - 1; }
    bool is_zero() const;
    // Empty ProjObject outside [lo, hi].
    const ProjObject& term(long k) const;
};

// Degree k of a chain map P -> Q[m] is comps[k - lo]: P^k -> Q^{k+m}.
struct ChainMap {
    long lo = 0;
    long degree = 0;
    std::vector<PMap> comps;
};

ModuleComplex stalk(const Representation& x, long degree = 0);
ModuleComplex to_module_complex(const PerfectComplex& p);
PerfectComplex stalk_projective(const AlgebraPtr& a, const ProjObject& p, long degree = 0);

// The minimal projective resolution of X with P_0 in degree 0.
PerfectComplex resolution_complex(const Representation& x);

// X[s]: (X[s])^k = X^{k+s}, differential multiplied by (-1)^s.
PerfectComplex shift(const PerfectComplex& p, long s);
ModuleComplex shift(const ModuleComplex& c, long s);
PerfectComplex direct_sum(const PerfectComplex& p, const PerfectComplex& q);

// d^{k+1} d^k = 0 and every map is a module map.
bool is_complex(const ModuleComplex& c);
bool is_complex(const PerfectComplex& p);

// Cohomology H^k for k in [lo, hi] (index k - lo).
std::vector<Representation> cohomology(const ModuleComplex& c);
std::vector<Representation> cohomology(const PerfectComplex& p);

struct HomSpace {
    std::size_t dim = 0;
    std::vector<ChainMap> basis;  // representatives, filled on request
};

// Hom_K(P, Q[s]): cohomology in degree s of the Hom complex
// Hom^m = prod_k Hom(P^k, Q^{k+m}), D f = d_Q f - (-1)^m f d_P.
HomSpace hom_homotopy(const PerfectComplex& p, const PerfectComplex& q, long s, bool with_basis = false);
std::size_t hom_homotopy_dim(const PerfectComplex& p, const PerfectComplex& q, long s);

struct Replacement {
    PerfectComplex complex;
    std::vector<RepMorphism> quasi_iso;  // P^k -> C^k for k in [complex.lo, complex.hi]
};

// Quasi-isomorphic complex of projectives, built downward from the top
// degree: P^k covers the cycles of the mapping cone modulo boundaries.
// Errors: GlobalDimensionTooLarge when the construction does not stop
// within number-of-vertices + 2 degrees below the input.
Replacement projective_replacement(const ModuleComplex& c);

// Nakayama functor termwise: a complex of injectives.
ModuleComplex nakayama(const PerfectComplex& p);

// S = nu on projectives; S^{-1} = D S_op D.
PerfectComplex serre(const PerfectComplex& p);
PerfectComplex serre_inverse(const PerfectComplex& p);

// S_n^power = (S o [-n])^power; negative powers use serre_inverse.
PerfectComplex serre_shift(const PerfectComplex& p, std::size_t n, long power);

struct ShiftedModule {
    Representation module;
    long shift = 0;  // the object is module[shift], cohomology in degree -shift
};

// Direct sum of shifted modules, sorted by shift.
struct ShiftedModuleObject {
    std::vector<ShiftedModule> parts;
};

// X = sum_k H^k(X)[-k] when consecutive nonzero cohomology degrees are at
// least `gap` apart and gap >= gl.dim Lambda (the H^i = 0 for i outside nZ
// case is gap = n). Errors: SplitHypothesisViolated.
ShiftedModuleObject split_complex(const PerfectComplex& p, std::size_t gap);
// max(1, gl.dim Lambda). Errors: GlobalDimensionTooLarge.
std::size_t split_gap(const AlgebraPtr& a);
PerfectComplex to_complex(const ShiftedModuleObject& x, const AlgebraPtr& a);

struct Window {
    long lo = -2;
    long hi = 2;
};

struct WindowObject {
    Representation module;  // indecomposable
    long shift = 0;
    long power = 0;  // first power of S_n in whose image it was found
    std::string name;
};

struct UClosure {
    std::size_t n = 1;
    Window window;
    std::vector<WindowObject> objects;
    std::optional<std::size_t> gl_dim_end;  // for a tilting start object
};

// Indecomposable summands of S_n^p(Lambda) for p in the window.
// Errors: NotTauFinite, SplitHypothesisViolated.
UClosure u_closure(const AlgebraPtr& a, std::size_t n, Window window = {});

// Same from a tilting complex T. Supported when T has cohomology in one
// degree (a shifted tilting module, End(T) directed); requires Lambda
// tau_n-finite and gl.dim End(T) <= n.
// Errors: NotTauFinite, NotTilting, Unsupported, SplitHypothesisViolated.
UClosure u_closure(const PerfectComplex& t, std::size_t n, Window window = {});

struct HomViolation {
    std::size_t x = 0, y = 0;  // Hom(objects[x], objects[y][degree]) != 0
    long degree = 0;
    std::size_t dim = 0;
    std::string x_name, y_name;
};

struct StabilityIssue {
    std::size_t object = 0;
    int direction = 1;  // +1: S_n, -1: S_n^{-1}
    bool boundary = false;  // image would leave the window; not a failure
};

struct WindowReport {
    bool pass = false;
    std::size_t checked_pairs = 0;
    std::vector<HomViolation> violations;
    std::vector<StabilityIssue> stability;  // images not found among the objects
    std::size_t boundary_flags = 0;
};

// Hom(U, V[i]) = 0 for all ordered pairs and 0 < i < n, and each object's
// S_n^{+-1} image lies among the objects unless it leaves the window.
WindowReport verify_ct_window(const std::vector<WindowObject>& objects, std::size_t n, Window window);

}  // namespace hart
