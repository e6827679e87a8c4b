#include "cech/closure_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cech {

ClosureSpace::ClosureSpace(std::vector<std::string> labels, std::vector<PointSet> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
    if (labels_.size() != rows_.size())
        throw std::invalid_argument("labels and closure rows must have equal length");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate point label: " + l);
    for (const auto& r : rows_)
        if (r.size() != labels_.size())
            throw std::invalid_argument("closure row has wrong universe size");
}

ClosureSpace ClosureSpace::discrete(std::vector<std::string> labels) {
    std::vector<PointSet> rows;
    rows.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        rows.push_back(PointSet::singleton(labels.size(), i));
    return ClosureSpace(std::move(labels), std::move(rows));
}

ClosureSpace ClosureSpace::indiscrete(std::vector<std::string> labels) {
    std::vector<PointSet> rows(labels.size(), PointSet::full(labels.size()));
    return ClosureSpace(std::move(labels), std::move(rows));
}

std::size_t ClosureSpace::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("unknown label: " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

PointSet ClosureSpace::minimal_neighborhood(std::size_t x) const {
    if (x >= size()) throw std::out_of_range("point index out of range");
    PointSet col(size());
    for (std::size_t a = 0; a < size(); ++a)
        if (rows_[a].test(x)) col.set(a);
    return col;
}

PointSet ClosureSpace::closure(const PointSet& a) const {
    if (a.size() != size()) throw std::invalid_argument("point set universe mismatch");
    PointSet out(size());
    for (auto x : a.to_indices()) out |= rows_[x];
    return out;
}

PointSet ClosureSpace::interior(const PointSet& a) const {
    return closure(a.complement()).complement();
}

bool ClosureSpace::is_closed(const PointSet& a) const { return closure(a) == a; }

bool ClosureSpace::is_open(const PointSet& a) const { return is_closed(a.complement()); }

bool ClosureSpace::is_neighborhood(const PointSet& u, const PointSet& a) const {
    return a.subset_of(interior(u));
}

bool ClosureSpace::is_topological() const { return !topology_witness().has_value(); }

std::optional<std::size_t> ClosureSpace::topology_witness() const {
    for (std::size_t x = 0; x < size(); ++x)
        if (closure(rows_[x]) != rows_[x]) return x;
    return std::nullopt;
}

ClosureSpace ClosureSpace::tau_modification() const {
    std::vector<PointSet> rows = rows_;
    for (std::size_t k = 0; k < size(); ++k)
        for (std::size_t x = 0; x < size(); ++x)
            if (rows[x].test(k)) rows[x] |= rows[k];
    return ClosureSpace(labels_, std::move(rows));
}

std::vector<std::vector<std::size_t>> ClosureSpace::components() const {
    const std::size_t n = size();
    // Symmetrize: x ~ y iff y in c({x}) or x in c({y}).
    std::vector<PointSet> adj(n, PointSet(n));
    for (std::size_t x = 0; x < n; ++x) {
        adj[x] |= rows_[x];
        for (auto y : rows_[x].to_indices()) adj[y].set(x);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        PointSet comp = PointSet::singleton(n, s);
        PointSet frontier = comp;
        while (frontier.any()) {
            PointSet next(n);
            for (auto x : frontier.to_indices()) next |= adj[x];
            next -= comp;
            comp |= next;
            frontier = next;
        }
        auto idx = comp.to_indices();
        for (auto i : idx) seen[i] = true;
        out.push_back(std::move(idx));
    }
    return out;
}

bool ClosureSpace::is_connected() const { return components().size() <= 1; }

bool ClosureSpace::semi_separated(const PointSet& a, const PointSet& b) const {
    return !closure(a).intersects(b) && !a.intersects(closure(b));
}

bool ClosureSpace::is_interior_cover(const std::vector<PointSet>& family) const {
    PointSet covered(size());
    for (const auto& u : family) covered |= interior(u);
    return covered == full_set();
}

bool ClosureSpace::is_indiscrete() const {
    const PointSet full = full_set();
    for (const auto& r : rows_)
        if (r != full) return false;
    return true;
}

ValidationReport validate(const ClosureSpace& space) {
    ValidationReport rep;
    for (std::size_t x = 0; x < space.size(); ++x)
        if (!space.row(x).test(x)) rep.reflexivity_failures.push_back(x);
    rep.ok = rep.reflexivity_failures.empty();
    return rep;
}

bool finer_than(const ClosureSpace& c1, const ClosureSpace& c2) {
    if (c1.labels() != c2.labels())
        throw std::invalid_argument("finer_than requires identical label lists");
    for (std::size_t x = 0; x < c1.size(); ++x)
        if (!c1.row(x).subset_of(c2.row(x))) return false;
    return true;
}

SpaceMap::SpaceMap(ClosureSpace domain, ClosureSpace codomain, std::vector<std::size_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw std::invalid_argument("map must assign a value to every domain point");
    for (auto v : values_)
        if (v >= codomain_.size())
            throw std::invalid_argument("map value out of codomain range");
}

PointSet SpaceMap::image(const PointSet& a) const {
    PointSet out(codomain_.size());
    for (auto x : a.to_indices()) out.set(values_[x]);
    return out;
}

PointSet SpaceMap::preimage(const PointSet& b) const {
    PointSet out(domain_.size());
    for (std::size_t x = 0; x < domain_.size(); ++x)
        if (b.test(values_[x])) out.set(x);
    return out;
}

bool SpaceMap::is_continuous() const {
    for (std::size_t x = 0; x < domain_.size(); ++x) {
        const PointSet& target = codomain_.row(values_[x]);
        for (auto y : domain_.row(x).to_indices())
            if (!target.test(values_[y])) return false;
    }
    return true;
}

bool SpaceMap::is_surjective() const {
    std::vector<bool> hit(codomain_.size(), false);
    for (auto v : values_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (f.codomain() != g.domain())
        throw std::invalid_argument("compose: codomain of f must equal domain of g");
    std::vector<std::size_t> vals(f.domain().size());
    for (std::size_t x = 0; x < vals.size(); ++x) vals[x] = g(f(x));
    return SpaceMap(f.domain(), g.codomain(), std::move(vals));
}

}  // namespace cech
