#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cech/closure_space.hpp"

namespace cech {

struct Digraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertex space with c({w}) = {w} plus the out-neighbors of w.
ClosureSpace graph_closure(const Digraph& g);

/// Abstract simplicial complex; simplices are sorted vertex-index sets and
/// the collection is closed under taking faces.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertex_labels,
                      const std::vector<std::vector<std::size_t>>& simplices);

    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    bool has(const std::vector<std::size_t>& sorted_simplex) const;

    /// Simplices with exactly k+1 vertices, in lexicographic order.
    std::vector<std::vector<std::size_t>> k_simplices(std::size_t k) const;

    std::string simplex_label(const std::vector<std::size_t>& s) const;

private:
    std::vector<std::string> vertex_labels_;
    std::set<std::vector<std::size_t>> simplices_;
};

/// Space of k-simplices: two k-simplices are adjacent when they share a
/// (k-1)-face of the complex or span a common (k+1)-simplex. There are no
/// (-1)-simplices, so for k=0 only the second clause can fire.
ClosureSpace skeleton_closure(const SimplicialComplex& sc, std::size_t k);

/// The n-point cycle where each point's closure is its radius-m arc. The
/// rows cover everything once 2m+1 >= n.
struct CyclicSpace {
    std::size_t n = 1;
    std::size_t m = 0;

    CyclicSpace(std::size_t n_, std::size_t m_);
    ClosureSpace space() const;
    bool is_indiscrete() const { return 2 * m + 1 >= n; }
    /// Winding numbers are well defined (steps have a unique signed
    /// representative) exactly when 2m < n.
    bool winding_defined() const { return 2 * m < n; }
    /// The arc structure makes the integers a covering model when
    /// 1 <= m and 3m < n.
    bool covering_regime() const { return m >= 1 && 3 * m < n; }
};

ClosureSpace cyclic_space(std::size_t n, std::size_t m);

/// Recognize a space whose rows are exactly the radius-m arcs in index
/// order. Recognition is representation-level: it sees the given point
/// order, not isomorphism classes.
std::optional<CyclicSpace> detect_cyclic(const ClosureSpace& space);

}  // namespace cech
