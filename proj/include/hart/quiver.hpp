#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hart/rational.hpp"

namespace hart {

struct Arrow {
    std::string name;
    int from = 0;
    int to = 0;
};

class Quiver {
public:
    Quiver() = default;

    int add_vertex(const std::string& name);
    int add_arrow(const std::string& name, int from, int to);
    int add_arrow(const std::string& name, const std::string& from, const std::string& to);

    int num_vertices() const { return (int)vertices_.size(); }
    int num_arrows() const { return (int)arrows_.size(); }
    const std::string& vertex(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_arrow(const std::string& name) const;
    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;

    const std::vector<int>& arrows_out(int v) const { return out_.at(v); }
    const std::vector<int>& arrows_in(int v) const { return in_.at(v); }

    // Topological order, or nullopt when there is an oriented cycle.
    std::optional<std::vector<int>> topological_order() const;
    bool is_acyclic() const { return topological_order().has_value(); }

    Quiver opposite() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_, aindex_;
    std::vector<std::vector<int>> out_, in_;
};

// Arrows are listed in traversal order: arrows[0] is traversed first.
// The empty path at v stands for the idempotent e_v.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    static Path trivial(int v) { return Path{v, v, {}}; }
    static Path of_arrow(const Quiver& q, int a);
    Path then(const Path& next) const;  // this path followed by `next`
    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
    bool operator<(const Path& o) const;  // (length, lexicographic arrow index)
};

std::string path_string(const Quiver& q, const Path& p);
// Path from arrow names in traversal order; must be nonempty.
Path make_path(const Quiver& q, const std::vector<std::string>& arrows);

// Formal linear combination of parallel paths.
struct LinComb {
    std::vector<std::pair<Rational, Path>> terms;
    bool empty() const { return terms.empty(); }
};

using Relation = LinComb;

// A quiver with relations, optionally carrying a partial translation
// tau: Q_P -> Q_I (a bijection between vertex subsets).
struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::map<int, int> tau;

    std::optional<int> tau_of(int v) const;
    std::optional<int> tau_inverse_of(int v) const;
    Presentation opposite() const;
};

class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks endpoints, parallelism, nonzero coefficients and tau injectivity.
void validate(const Presentation& p);

// Drops zero terms and merges equal paths; result may be empty.
LinComb normalize(const LinComb& c);

std::vector<Path> enumerate_paths(const Quiver& q, int source, int target, std::size_t max_length);

// For each arrow a: tau(x) -> y of the input, a combination of paths
// x -> tau^-(y) (ignored when y has no tau-preimage).
using TauMinusArrowMap = std::map<int, LinComb>;

// Layered vertex naming used by cone and cylinder: "x|l".
std::string layered_name(const std::string& base, long layer);
// Name of the translation arrow (x,l)_1.
std::string translation_arrow_name(const std::string& base, long layer);

struct LayeredPresentation {
    Presentation presentation;
    // For each new vertex index, the (input vertex, layer) it came from.
    std::vector<std::pair<int, long>> origin;
};

LayeredPresentation cone(const Presentation& p, const TauMinusArrowMap& tau_minus);

// Materializes the cylinder on layers lo..hi. Arrows or relation terms that
// would leave the window are dropped.
LayeredPresentation cylinder(const Presentation& p, const TauMinusArrowMap& tau_minus, long lo, long hi);

}  // namespace hart
