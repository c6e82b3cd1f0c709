#pragma once

#include <vector>

#include "hart/algebra.hpp"

namespace hart {

// Dynkin type of each connected component ("A4", "D4", "E6", ...), or
// Error("NotDynkin").
std::vector<std::string> dynkin_type(const Quiver& q);

// ell_x = sup{l : tau^l I_x != 0} over kQ, computed from the tau_1-closure.
std::vector<std::size_t> ell_values(const Quiver& q);

using SimplexPoint = std::vector<long>;

// Points l in Z^n with l_i >= 0 and sum <= ell, in lexicographic order.
std::vector<SimplexPoint> simplex(std::size_t n, long ell);

enum class FamilyKind { Cone, Cylinder };

// Arrow kinds: '*' for (a*, l), 'b' for (b, l), 'i' for (x, l)_i, where
// `index` is the arrow of Q or the number i.
struct FamilyArrow {
    char kind = 'b';
    int index = 0;
    int x = 0;
    SimplexPoint l;
};

struct FamilyPresentation {
    Presentation presentation;
    std::vector<std::pair<int, SimplexPoint>> coords;  // vertex -> (x, l)
    std::vector<FamilyArrow> arrows;                  // arrow -> its label
};

// The weak translation quiver Q^(n) (Cone) or the window lo <= l_n <= hi of
// Q~^(n) (Cylinder), with the commutativity and mesh relations. Vertices
// and arrows outside the quiver count as zero. tau_n(x, l) = (x, l + e_n).
FamilyPresentation build_family(const Quiver& q, std::size_t n, FamilyKind kind = FamilyKind::Cone, long lo = 0,
                                long hi = 0);

// tau_n^- on arrows: an arrow from tau_n(X) = (x, l) goes to the arrow of
// the same kind at l - e_n. Input for cone() and cylinder().
TauMinusArrowMap family_tau_minus(const FamilyPresentation& f);

struct TowerLevel {
    Presentation presentation;  // quiver with relations of T_m^(n)
    AlgebraPtr algebra;
};
// T_m^(1) = k A_m; T_m^(n) is the opposite of the presentation of Q^(n-1).
TowerLevel tower(int m, std::size_t n);

}  // namespace hart
