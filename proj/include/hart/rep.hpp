#pragma once

#include <cstdint>
#include <vector>

#include "hart/algebra.hpp"

namespace hart {

constexpr std::uint64_t kDefaultSeed = 20240611;

// A right module given as a representation: a vector space per vertex and,
// for each arrow a: v -> w, a matrix of size dims[w] x dims[v].
struct Representation {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const std::vector<std::size_t>& dim_vector() const { return dims; }
};

// One matrix per vertex, dims_Y(v) x dims_X(v). Source and target are kept
// by the caller.
struct RepMorphism {
    std::vector<Matrix> maps;
};

Representation zero_rep(const AlgebraPtr& a);
Representation projective(const AlgebraPtr& a, int i);
Representation injective(const AlgebraPtr& a, int i);
Representation simple(const AlgebraPtr& a, int i);

struct StdModules {
    std::vector<Representation> projectives, injectives, simples;
};
StdModules std_modules(const AlgebraPtr& a);

// D: transpose every arrow matrix; the result lives over the opposite algebra.
Representation dualize(const Representation& x);
RepMorphism dualize(const RepMorphism& f);

// Matrix of the path action X(p) (traversal order: first arrow applied first).
Matrix evaluate(const Representation& x, const Path& p);
// Action of an algebra element given over basis(i, j) on X_i.
Matrix evaluate(const Representation& x, int i, int j, const Vec& u);

// Every relation acts by zero and the shapes are consistent.
bool is_valid(const Representation& x);
bool is_morphism(const Representation& x, const Representation& y, const RepMorphism& f);

Representation direct_sum(const Representation& x, const Representation& y);
Representation direct_sum(const std::vector<Representation>& xs, const AlgebraPtr& a);
// Inclusion of the k-th summand and projection onto it.
RepMorphism sum_inclusion(const std::vector<Representation>& xs, std::size_t k);
RepMorphism sum_projection(const std::vector<Representation>& xs, std::size_t k);

RepMorphism identity(const Representation& x);
RepMorphism zero_morphism(const Representation& x, const Representation& y);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const RepMorphism& f, const Rational& c);
bool is_zero(const RepMorphism& f);
bool is_isomorphism(const RepMorphism& f);
std::optional<RepMorphism> inverse(const RepMorphism& f);

// Flattened coordinates (vertex by vertex, row-major) and back.
Vec flatten(const RepMorphism& f);
RepMorphism unflatten(const Vec& v, const Representation& x, const Representation& y);

// Basis of Hom(X, Y); deterministic.
std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

struct Subobject {
    Representation module;
    RepMorphism map;  // inclusion (sub) or projection (quotient)
};

// Submodule spanned vertexwise by the given columns (must be closed under
// the arrows). Columns are reduced to a basis.
Subobject submodule(const Representation& x, const std::vector<Matrix>& spans);
// Smallest submodule containing the given vectors.
Subobject generated_submodule(const Representation& x, const std::vector<Matrix>& gens);
Subobject quotient(const Representation& x, const std::vector<Matrix>& sub_spans);

struct KerCokerIm {
    Subobject kernel;     // inclusion into the source
    Subobject image;      // inclusion into the target
    RepMorphism factor;   // source -> image
    Subobject cokernel;   // projection from the target
};
Subobject kernel(const Representation& x, const RepMorphism& f);
Subobject cokernel(const Representation& y, const RepMorphism& f);
KerCokerIm ker_coker_im(const Representation& x, const Representation& y, const RepMorphism& f);

// Vertexwise spans.
std::vector<Matrix> radical_spans(const Representation& x);
std::vector<Matrix> socle_spans(const Representation& x);

struct TopRadSoc {
    Subobject top;  // projection X -> top
    Subobject rad;  // inclusion rad -> X
    Subobject soc;  // inclusion soc -> X
};
TopRadSoc top_rad_soc(const Representation& x);
std::vector<std::size_t> top_dims(const Representation& x);
std::vector<std::size_t> socle_dims(const Representation& x);

// --- maps between sums of indecomposable projectives -------------------

// P = P_{tops[0]} + P_{tops[1]} + ...
struct ProjObject {
    std::vector<int> tops;
    bool empty() const { return tops.empty(); }
};

// entry[j][k] in span basis(dst.tops[j], src.tops[k]): the image of the
// generator e_{src.tops[k]} has component entry[j][k] in the j-th summand.
struct PMap {
    ProjObject src, dst;
    std::vector<std::vector<Vec>> entry;
};

Representation projective_sum(const AlgebraPtr& a, const ProjObject& p);
Representation injective_sum(const AlgebraPtr& a, const std::vector<int>& socles);
RepMorphism to_morphism(const AlgebraPtr& a, const PMap& f);
PMap compose(const AlgebraPtr& a, const PMap& g, const PMap& f);  // g after f
// Offset of block k inside projective_sum(...) at vertex z.
std::size_t block_offset(const AlgebraPtr& a, const std::vector<int>& tops, std::size_t k, int z);

// Nakayama functor on maps between projectives: a morphism
// injective_sum(src.tops) -> injective_sum(dst.tops).
RepMorphism nakayama(const AlgebraPtr& a, const PMap& f);

struct Cover {
    ProjObject proj;
    Representation module;  // projective_sum(proj)
    RepMorphism epi;
    std::vector<Vec> generators;  // generator k lives in X at proj.tops[k]
};
// Projective cover. Generators are unit vectors complementing the radical.
Cover projective_cover(const Representation& x);

struct Envelope {
    std::vector<int> socles;
    Representation module;  // injective_sum(socles)
    RepMorphism mono;
};
Envelope injective_envelope(const Representation& x);

// Morphisms of ProjObject type generated by vectors of a projective sum:
// gens[j] in P at vertex tops[j] becomes the PMap column j.
PMap pmap_from_generators(const AlgebraPtr& a, const ProjObject& target, const std::vector<int>& tops,
                          const std::vector<Vec>& gens);

// --- decomposition -------------------------------------------------------

struct Summand {
    Representation module;
    RepMorphism inclusion;   // summand -> X
    RepMorphism projection;  // X -> summand
};

struct IsoClass {
    std::size_t representative;       // index into summands
    std::vector<std::size_t> members; // all summands in the class
};

struct Decomposition {
    std::vector<Summand> summands;
    std::vector<IsoClass> classes;
};

Decomposition decompose(const Representation& x, std::uint64_t seed = kDefaultSeed);
bool is_indecomposable(const Representation& x);

// Basis of rad End(X), the kernel of the trace form on End(X).
std::vector<RepMorphism> radical_of_end(const Representation& x);

// Deterministic for indecomposables: X ~ Y iff some basis element of
// Hom(X,Y) is invertible. General modules are compared through decompose.
bool is_isomorphic(const Representation& x, const Representation& y);
bool is_isomorphic_indecomposable(const Representation& x, const Representation& y);
std::optional<RepMorphism> find_isomorphism_indecomposable(const Representation& x, const Representation& y);

// A compact invariant used for reporting and for pruning isomorphism tests.
struct Fingerprint {
    std::vector<std::size_t> dims, top, socle;
    bool operator==(const Fingerprint& o) const { return dims == o.dims && top == o.top && socle == o.socle; }
    bool operator<(const Fingerprint& o) const {
        if (dims != o.dims) return dims < o.dims;
        if (top != o.top) return top < o.top;
        return socle < o.socle;
    }
};
Fingerprint fingerprint(const Representation& x);

}  // namespace hart
