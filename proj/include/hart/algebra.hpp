#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hart/errors.hpp"
#include "hart/matrix.hpp"
#include "hart/quiver.hpp"

namespace hart {

// Sparse coordinate vector: (local index, coefficient), indices increasing.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct BasisElement {
    int source = 0;
    int target = 0;
    int local = 0;  // position inside basis(source, target)
    Path path;
};

constexpr std::size_t kDefaultLengthCap = 64;

// Finite-dimensional algebra kQ/I with a basis of normal-form paths.
// Products are read in traversal order: p*q means p followed by q. A right
// module is then a covariant representation of the quiver.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    const Presentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver; }
    int num_vertices() const { return pres_.quiver.num_vertices(); }
    std::size_t dim() const { return elems_.size(); }
    std::size_t max_path_length() const { return max_len_; }

    const std::vector<int>& basis(int i, int j) const { return pair_[i * n_ + j]; }
    std::size_t dim(int i, int j) const { return pair_[i * n_ + j].size(); }
    const BasisElement& element(int g) const { return elems_[g]; }

    // Basis element g times arrow a, over basis(source(g), target(a)).
    const SparseVec& times_arrow(int g, int a) const;

    // v (over basis(i,j)) times the path q starting at j.
    Vec times_path(int i, const Vec& v, const Path& q) const;
    // Product g*h of basis elements, dense over basis(source(g), target(h)).
    const Vec& product(int g, int h) const;
    // Product of two elements u over basis(i,j) and w over basis(j,k).
    Vec multiply(int i, int j, int k, const Vec& u, const Vec& w) const;
    // Normal form of an arbitrary path.
    Vec reduce(const Path& p) const;

    // Global index of the idempotent at v and of the arrow a.
    int idempotent(int v) const { return idem_[v]; }
    int arrow_element(int a) const { return arrow_elem_[a]; }

    std::shared_ptr<const Algebra> opposite() const;

private:
    friend std::shared_ptr<const Algebra> build_algebra(const Presentation&, std::size_t);
    friend class AlgebraBuilder;
    Algebra() = default;

    void finish_indexing();

    Presentation pres_;
    int n_ = 0;
    std::vector<BasisElement> elems_;
    std::vector<std::vector<int>> pair_;
    std::vector<std::vector<SparseVec>> right_;  // [g][position of arrow in arrows_out]
    std::vector<int> arrow_pos_;
    std::vector<int> idem_, arrow_elem_;
    std::size_t max_len_ = 0;

    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, Vec> product_cache_;
    mutable std::shared_ptr<const Algebra> op_;
    mutable std::weak_ptr<const Algebra> op_of_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Errors: NotAdmissible, InconsistentRelation, DimensionCapExceeded.
AlgebraPtr build_algebra(const Presentation& p, std::size_t length_cap = kDefaultLengthCap);

// Path algebra of a quiver without relations.
AlgebraPtr path_algebra(const Quiver& q, std::size_t length_cap = kDefaultLengthCap);

}  // namespace hart
