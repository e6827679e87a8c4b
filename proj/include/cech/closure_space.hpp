#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/bitset.hpp"

namespace cech {

using PointSet = Bitset;

/// A finite set of labelled points together with a closure relation.
/// Row x holds c({x}); the closure of an arbitrary set is the union of the
/// rows of its members, which pins the empty-set and additivity axioms by
/// construction. Reflexivity is expected but not enforced here: `validate`
/// reports it, so defective inputs can be diagnosed instead of rejected.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class ClosureSpace {
public:
    ClosureSpace() = default;
    ClosureSpace(std::vector<std::string> labels, std::vector<PointSet> rows);

    static ClosureSpace discrete(std::vector<std::string> labels);
    static ClosureSpace indiscrete(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t x) const { return labels_.at(x); }
    std::size_t index_of(const std::string& label) const;

    /// c({x})
    const PointSet& row(std::size_t x) const { return rows_.at(x); }

    /// Least neighborhood of x: the column {a : x in c({a})}. Every
    /// neighborhood of x contains it, so it is a one-element local base.
    PointSet minimal_neighborhood(std::size_t x) const;

    PointSet closure(const PointSet& a) const;
    PointSet interior(const PointSet& a) const;

    bool is_closed(const PointSet& a) const;
    bool is_open(const PointSet& a) const;

    /// True iff a is contained in the interior of u.
    bool is_neighborhood(const PointSet& u, const PointSet& a) const;

    /// True iff closure is idempotent; on finite spaces it suffices to check
    /// c(c({x})) = c({x}) for every x.
    bool is_topological() const;

    /// First point whose singleton closure is not closed, if any.
    std::optional<std::size_t> topology_witness() const;

    /// Finest topological structure coarser than this one: the transitive
    /// closure of the relation (Warshall sweep).
    ClosureSpace tau_modification() const;

    /// Connected components of the symmetrized relation, each sorted
    /// ascending, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;
    bool is_connected() const;

    /// (c(A) n B) u (A n c(B)) empty.
    bool semi_separated(const PointSet& a, const PointSet& b) const;

    /// True iff the interiors of the family cover the space.
    bool is_interior_cover(const std::vector<PointSet>& family) const;

    bool is_indiscrete() const;

    PointSet empty_set() const { return PointSet(size()); }
    PointSet full_set() const { return PointSet::full(size()); }

    bool operator==(const ClosureSpace& o) const {
        return labels_ == o.labels_ && rows_ == o.rows_;
    }
    bool operator!=(const ClosureSpace& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<PointSet> rows_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::size_t> reflexivity_failures;  // points x with x not in c({x})
    bool additivity_structural = true;              // holds by representation
};

ValidationReport validate(const ClosureSpace& space);

/// True iff every row of c1 is contained in the corresponding row of c2.
/// Requires identical labels in identical order.
bool finer_than(const ClosureSpace& c1, const ClosureSpace& c2);

/// A total map between two finite closure spaces.
class SpaceMap {
public:
    SpaceMap(ClosureSpace domain, ClosureSpace codomain, std::vector<std::size_t> values);

    const ClosureSpace& domain() const { return domain_; }
    const ClosureSpace& codomain() const { return codomain_; }
    const std::vector<std::size_t>& values() const { return values_; }
    std::size_t operator()(std::size_t x) const { return values_.at(x); }

    PointSet image(const PointSet& a) const;
    PointSet preimage(const PointSet& b) const;

    /// f(c({x})) contained in c'({f(x)}) for every x; equivalent to full
    /// continuity on finite spaces by additivity.
    bool is_continuous() const;

    bool is_surjective() const;

private:
    ClosureSpace domain_;
    ClosureSpace codomain_;
    std::vector<std::size_t> values_;
};

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);  // g after f

}  // namespace cech
