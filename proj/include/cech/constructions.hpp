#pragma once

#include "cech/closure_space.hpp"

namespace cech {

/// Subspace on the points of a: rows are c({x}) restricted to a, reindexed in
/// ascending order of the original indices. Labels are kept.
ClosureSpace subspace(const ClosureSpace& space, const PointSet& a);

/// Block-diagonal sum. Labels are prefixed "<summand index>/".
ClosureSpace disjoint_union(const std::vector<ClosureSpace>& spaces);

/// Binary product with rows c({(x,y)}) = c({x}) x c({y}). The pair (x,y) gets
/// index x*|b|+y and label "(lx,ly)". The row formula agrees with the
/// subbase description of the product because the minimal neighborhood of
/// (x,y) is N(x) x N(y); `product_subbase_closure` below keeps the subbase
/// route available as an independent oracle.
ClosureSpace product(const ClosureSpace& a, const ClosureSpace& b);

std::size_t product_index(const ClosureSpace& a, const ClosureSpace& b, std::size_t x,
                          std::size_t y);

/// Closure of `s` in the product computed straight from the subbase/filter
/// description: (u,v) lies in the closure iff N(u) x N(v) meets s. Quadratic
/// and only meant for cross-checking `product`.
PointSet product_subbase_closure(const ClosureSpace& a, const ClosureSpace& b, const PointSet& s);

/// A surjection from a space onto a fresh set of class labels.
struct QuotientMap {
    ClosureSpace source;
    std::vector<std::string> class_labels;
    std::vector<std::size_t> assign;  // class index per source point

    QuotientMap(ClosureSpace src, std::vector<std::string> classes,
                std::vector<std::size_t> assignment);
};

/// Quotient structure: row of a class y is f(c(f^{-1}({y}))). This is the
/// finest structure on the classes making the projection continuous.
ClosureSpace quotient(const QuotientMap& q);

SpaceMap quotient_projection(const QuotientMap& q);

}  // namespace cech
