#include "cech/constructions.hpp"

#include <stdexcept>

namespace cech {

ClosureSpace subspace(const ClosureSpace& space, const PointSet& a) {
    if (a.size() != space.size()) throw std::invalid_argument("point set universe mismatch");
    const auto kept = a.to_indices();
    std::vector<std::size_t> new_index(space.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = i;

    std::vector<std::string> labels;
    labels.reserve(kept.size());
    for (auto x : kept) labels.push_back(space.label(x));

    std::vector<PointSet> rows;
    rows.reserve(kept.size());
    for (auto x : kept) {
        PointSet r(kept.size());
        PointSet cut = space.row(x) & a;
        for (auto y : cut.to_indices()) r.set(new_index[y]);
        rows.push_back(std::move(r));
    }
    return ClosureSpace(std::move(labels), std::move(rows));
}

ClosureSpace disjoint_union(const std::vector<ClosureSpace>& spaces) {
    std::size_t total = 0;
    for (const auto& s : spaces) total += s.size();

    std::vector<std::string> labels;
    std::vector<PointSet> rows;
    labels.reserve(total);
    rows.reserve(total);

    std::size_t offset = 0;
    for (std::size_t k = 0; k < spaces.size(); ++k) {
        const auto& s = spaces[k];
        for (std::size_t x = 0; x < s.size(); ++x) {
            labels.push_back(std::to_string(k) + "/" + s.label(x));
            PointSet r(total);
            for (auto y : s.row(x).to_indices()) r.set(offset + y);
            rows.push_back(std::move(r));
        }
        offset += s.size();
    }
    return ClosureSpace(std::move(labels), std::move(rows));
}

std::size_t product_index(const ClosureSpace& /*a*/, const ClosureSpace& b, std::size_t x,
                          std::size_t y) {
    return x * b.size() + y;
}

ClosureSpace product(const ClosureSpace& a, const ClosureSpace& b) {
    const std::size_t n = a.size() * b.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
            labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");

    std::vector<PointSet> rows;
    rows.reserve(n);
    for (std::size_t x = 0; x < a.size(); ++x) {
        const auto ra = a.row(x).to_indices();
        for (std::size_t y = 0; y < b.size(); ++y) {
            PointSet r(n);
            for (auto u : ra)
                for (auto v : b.row(y).to_indices()) r.set(u * b.size() + v);
            rows.push_back(std::move(r));
        }
    }
    return ClosureSpace(std::move(labels), std::move(rows));
}

PointSet product_subbase_closure(const ClosureSpace& a, const ClosureSpace& b, const PointSet& s) {
    const std::size_t n = a.size() * b.size();
    if (s.size() != n) throw std::invalid_argument("point set universe mismatch");
    PointSet out(n);
    for (std::size_t u = 0; u < a.size(); ++u) {
        const PointSet nu = a.minimal_neighborhood(u);
        for (std::size_t v = 0; v < b.size(); ++v) {
            const PointSet nv = b.minimal_neighborhood(v);
            bool meets = false;
            for (auto p : nu.to_indices()) {
                for (auto q : nv.to_indices()) {
                    if (s.test(p * b.size() + q)) {
                        meets = true;
                        break;
                    }
                }
                if (meets) break;
            }
            if (meets) out.set(u * b.size() + v);
        }
    }
    return out;
}

QuotientMap::QuotientMap(ClosureSpace src, std::vector<std::string> classes,
                         std::vector<std::size_t> assignment)
    : source(std::move(src)), class_labels(std::move(classes)), assign(std::move(assignment)) {
    if (assign.size() != source.size())
        throw std::invalid_argument("quotient assignment must cover every source point");
    std::vector<bool> hit(class_labels.size(), false);
    for (auto c : assign) {
        if (c >= class_labels.size())
            throw std::invalid_argument("quotient assignment class index out of range");
        hit[c] = true;
    }
    for (std::size_t c = 0; c < hit.size(); ++c)
        if (!hit[c])
            throw std::invalid_argument("quotient assignment not surjective: class " +
                                        class_labels[c] + " has no preimage");
}

ClosureSpace quotient(const QuotientMap& q) {
    const std::size_t m = q.class_labels.size();
    std::vector<PointSet> rows;
    rows.reserve(m);
    for (std::size_t y = 0; y < m; ++y) {
        PointSet pre(q.source.size());
        for (std::size_t x = 0; x < q.source.size(); ++x)
            if (q.assign[x] == y) pre.set(x);
        PointSet r(m);
        for (auto z : q.source.closure(pre).to_indices()) r.set(q.assign[z]);
        rows.push_back(std::move(r));
    }
    return ClosureSpace(q.class_labels, std::move(rows));
}

SpaceMap quotient_projection(const QuotientMap& q) {
    return SpaceMap(q.source, quotient(q), q.assign);
}

}  // namespace cech
