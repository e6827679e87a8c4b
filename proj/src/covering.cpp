#include "cech/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "cech/constructions.hpp"

namespace cech {

namespace {
constexpr std::size_t kLiftEnumerationBound = 4096;  // max |total| for enumeration
}

CoveringCandidate::CoveringCandidate(ClosureSpace total, ClosureSpace base,
                                     std::vector<std::size_t> proj)
    : map_(std::move(total), std::move(base), std::move(proj)) {
    if (!map_.is_surjective())
        throw std::invalid_argument("covering projection must be surjective");
    if (!map_.is_continuous())
        throw std::invalid_argument("covering projection must be continuous");
    verdict_ = check();
}

PointSet CoveringCandidate::fiber(std::size_t b) const {
    if (b >= base().size()) throw std::out_of_range("base point out of range");
    return map_.preimage(PointSet::singleton(base().size(), b));
}

bool CoveringCandidate::fiber_discrete(std::size_t b) const {
    const auto f = fiber(b).to_indices();
    for (auto e : f)
        for (auto e2 : f)
            if (e != e2 && total().row(e).test(e2)) return false;
    return true;
}

namespace {

/// Components of the subspace on `points` under the symmetrized relation.
std::vector<std::vector<std::size_t>> subspace_components(const ClosureSpace& space,
                                                          const PointSet& points) {
    return [&] {
        const ClosureSpace sub = subspace(space, points);
        const auto idx = points.to_indices();
        std::vector<std::vector<std::size_t>> out;
        for (const auto& comp : sub.components()) {
            std::vector<std::size_t> named;
            named.reserve(comp.size());
            for (auto i : comp) named.push_back(idx[i]);
            out.push_back(std::move(named));
        }
        return out;
    }();
}

/// p restricted to `sheet` is a homeomorphism onto `u` iff it is a bijection
/// and carries subspace rows to subspace rows.
bool sheet_homeomorphic(const ClosureSpace& total, const ClosureSpace& base,
                        const std::vector<std::size_t>& proj,
                        const std::vector<std::size_t>& sheet, const PointSet& sheet_mask,
                        const PointSet& u_mask) {
    if (sheet.size() != u_mask.count()) return false;
    PointSet covered(base.size());
    for (auto e : sheet) {
        if (covered.test(proj[e])) return false;  // not injective
        covered.set(proj[e]);
    }
    if ((covered & u_mask) != covered || covered.count() != u_mask.count()) return false;
    for (auto e : sheet) {
        PointSet row_here = total.row(e) & sheet_mask;
        PointSet row_there = base.row(proj[e]) & u_mask;
        if (row_here.count() != row_there.count()) return false;
        PointSet image(base.size());
        for (auto y : row_here.to_indices()) image.set(proj[y]);
        if (image != row_there) return false;
    }
    return true;
}

struct SheetSearch {
    const ClosureSpace& total;
    const ClosureSpace& base;
    const std::vector<std::size_t>& proj;
    PointSet u_mask;
    std::vector<std::vector<std::size_t>> free_comps;  // components without fiber points

    /// Distribute fiber-free components over the seeded sheets, then verify
    /// each sheet maps homeomorphically onto the neighborhood.
    bool assign(std::size_t next, std::vector<std::vector<std::size_t>>& sheets) {
        if (next == free_comps.size()) {
            for (std::size_t k = 0; k < sheets.size(); ++k) {
                std::vector<std::size_t> members = sheets[k];
                std::sort(members.begin(), members.end());
                PointSet mask = PointSet::from_indices(total.size(), members);
                if (!sheet_homeomorphic(total, base, proj, members, mask, u_mask)) return false;
            }
            return true;
        }
        const std::size_t target = u_mask.count();
        for (std::size_t k = 0; k < sheets.size(); ++k) {
            if (sheets[k].size() + free_comps[next].size() > target) continue;
            auto& sheet = sheets[k];
            const std::size_t old = sheet.size();
            sheet.insert(sheet.end(), free_comps[next].begin(), free_comps[next].end());
            if (assign(next + 1, sheets)) return true;
            sheet.resize(old);
        }
        return false;
    }
};

}  // namespace

CoveringVerdict CoveringCandidate::check() const {
    const ClosureSpace& e = total();
    const ClosureSpace& b = base();
    const auto& proj = map_.values();
    CoveringVerdict v;

    for (std::size_t pt = 0; pt < b.size(); ++pt) {
        if (!fiber_discrete(pt)) {
            v.covering = false;
            v.failing_base = pt;
            v.reason = "fiber over " + b.label(pt) + " is not discrete";
            return v;
        }
        const PointSet u = b.minimal_neighborhood(pt);
        const PointSet pre = map_.preimage(u);
        const auto fiber_idx = fiber(pt).to_indices();
        const auto comps = subspace_components(e, pre);

        // Sheets are unions of components, one fiber point each.
        std::vector<std::vector<std::size_t>> seeded(fiber_idx.size());
        std::vector<std::vector<std::size_t>> free_comps;
        bool separated = true;
        for (const auto& comp : comps) {
            std::vector<std::size_t> hits;
            for (auto f : fiber_idx) {
                if (std::find(comp.begin(), comp.end(), f) != comp.end())
                    hits.push_back(static_cast<std::size_t>(
                        std::find(fiber_idx.begin(), fiber_idx.end(), f) - fiber_idx.begin()));
            }
            if (hits.size() > 1) {
                separated = false;
                break;
            }
            if (hits.size() == 1)
                seeded[hits[0]].insert(seeded[hits[0]].end(), comp.begin(), comp.end());
            else
                free_comps.push_back(comp);
        }
        if (!separated) {
            v.covering = false;
            v.failing_base = pt;
            v.reason = "preimage of the minimal neighborhood of " + b.label(pt) +
                       " keeps two fiber points connected";
            return v;
        }

        SheetSearch search{e, b, proj, u, free_comps};
        std::vector<std::vector<std::size_t>> sheets = seeded;
        if (!search.assign(0, sheets)) {
            v.covering = false;
            v.failing_base = pt;
            v.reason = "no sheet decomposition over the minimal neighborhood of " + b.label(pt);
            return v;
        }

        Trivialization t;
        t.base_point = pt;
        t.fiber = fiber_idx;
        for (auto& s : sheets) {
            std::sort(s.begin(), s.end());
            t.sheets.push_back(std::move(s));
        }
        v.trivializations.push_back(std::move(t));
    }
    v.covering = true;
    return v;
}

namespace {

std::vector<std::size_t> step_candidates(const CoveringCandidate& cc, std::size_t at,
                                         std::size_t next_base) {
    std::vector<std::size_t> out;
    for (auto e : cc.fiber(next_base).to_indices())
        if (step_ok(cc.total(), at, e)) out.push_back(e);
    return out;
}

}  // namespace

DiscretePath lift_path(const CoveringCandidate& cc, const DiscretePath& base_path,
                       std::size_t start) {
    if (base_path.space() != cc.base())
        throw std::invalid_argument("base path does not live on the base space");
    if (!base_path.valid()) throw std::invalid_argument("invalid base path");
    if (start >= cc.total().size()) throw std::out_of_range("start point out of range");
    if (cc.projection()(start) != base_path.start())
        throw std::invalid_argument("start point does not project onto the path start");
    if (!cc.is_covering().covering)
        throw std::invalid_argument("not a covering: lifts may be absent or ambiguous (" +
                                    cc.is_covering().reason + ")");

    std::vector<std::size_t> lifted{start};
    const auto& pts = base_path.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto cands = step_candidates(cc, lifted.back(), pts[i + 1]);
        if (cands.empty()) throw std::logic_error("no lift step over a verified covering");
        if (cands.size() > 1) throw std::logic_error("ambiguous lift over a verified covering");
        lifted.push_back(cands.front());
    }
    return DiscretePath(cc.total(), std::move(lifted));
}

std::vector<DiscretePath> enumerate_lifts(const CoveringCandidate& cc,
                                          const DiscretePath& base_path, std::size_t start,
                                          std::size_t max_lifts) {
    if (base_path.space() != cc.base())
        throw std::invalid_argument("base path does not live on the base space");
    if (!base_path.valid()) throw std::invalid_argument("invalid base path");
    if (start >= cc.total().size()) throw std::out_of_range("start point out of range");
    if (cc.total().size() > kLiftEnumerationBound)
        throw std::invalid_argument("total space exceeds the lift enumeration bound");

    std::vector<DiscretePath> out;
    if (cc.projection()(start) != base_path.start()) return out;

    const auto& pts = base_path.points();
    std::vector<std::vector<std::size_t>> stack{{start}};
    while (!stack.empty() && out.size() < max_lifts) {
        std::vector<std::size_t> cur = std::move(stack.back());
        stack.pop_back();
        if (cur.size() == pts.size()) {
            out.emplace_back(cc.total(), std::move(cur));
            continue;
        }
        for (auto e : step_candidates(cc, cur.back(), pts[cur.size()])) {
            std::vector<std::size_t> nxt = cur;
            nxt.push_back(e);
            stack.push_back(std::move(nxt));
        }
    }
    return out;
}

LiftCount lift_uniqueness_check(const CoveringCandidate& cc, const DiscretePath& base_path,
                                std::size_t start) {
    const auto lifts = enumerate_lifts(cc, base_path, start, 2);
    if (lifts.empty()) return LiftCount::None;
    return lifts.size() == 1 ? LiftCount::Unique : LiftCount::Multiple;
}

}  // namespace cech
