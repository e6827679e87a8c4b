#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/closure_space.hpp"
#include "cech/paths.hpp"

namespace cech {

/// Sheets over one base point's minimal neighborhood: sheets[k] lists the
/// members (total-space indices, ascending) of the sheet through the k-th
/// fiber point.
struct Trivialization {
    std::size_t base_point;
    std::vector<std::size_t> fiber;              // ascending
    std::vector<std::vector<std::size_t>> sheets;
};

struct CoveringVerdict {
    bool covering = false;
    std::vector<Trivialization> trivializations;  // one per base point when covering
    std::optional<std::size_t> failing_base;
    std::string reason;
};

/// A surjective continuous candidate projection p : total -> base.
///
/// `is_covering` checks local triviality over the minimal neighborhoods
/// only. That is no loss: the minimal neighborhood N(b) is contained in
/// every neighborhood of b, a trivialization restricts to any smaller
/// neighborhood (the restriction of a homeomorphism to a saturated subspace
/// is a homeomorphism), and the family {N(b)} is itself an interior cover.
/// So triviality over some interior cover and triviality over every N(b)
/// coincide. Within p^{-1}(N(b)), a sheet decomposition must consist of
/// clopen pieces, i.e. unions of components of the symmetrized relation,
/// one fiber point each, each mapped bijectively onto N(b) with
/// c(x)-rows preserved (which is the homeomorphism criterion for bijections
/// on finite spaces).
class CoveringCandidate {
public:
    CoveringCandidate(ClosureSpace total, ClosureSpace base, std::vector<std::size_t> proj);

    const ClosureSpace& total() const { return map_.domain(); }
    const ClosureSpace& base() const { return map_.codomain(); }
    const SpaceMap& projection() const { return map_; }

    PointSet fiber(std::size_t b) const;
    bool fiber_discrete(std::size_t b) const;

    const CoveringVerdict& is_covering() const { return verdict_; }

private:
    CoveringVerdict check() const;

    SpaceMap map_;
    CoveringVerdict verdict_;
};

/// Unique lift of a valid base path starting at `start` in the total space.
/// Requires a verified covering; on anything else the step-local candidate
/// set can be empty or ambiguous and this reports that instead of choosing.
DiscretePath lift_path(const CoveringCandidate& cc, const DiscretePath& base_path,
                       std::size_t start);

enum class LiftCount { None, Unique, Multiple };

/// Exhaustively enumerate valid lifts with the given start (early exit after
/// two). Guarded by a size bound on the total space.
LiftCount lift_uniqueness_check(const CoveringCandidate& cc, const DiscretePath& base_path,
                                std::size_t start);

std::vector<DiscretePath> enumerate_lifts(const CoveringCandidate& cc,
                                          const DiscretePath& base_path, std::size_t start,
                                          std::size_t max_lifts);

}  // namespace cech
