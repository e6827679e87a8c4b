#include "cech/persistence.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cech {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    /// Union keeping the smaller index as representative.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

struct Edge {
    double d;
    std::size_t i, j;
};

std::vector<Edge> sorted_edges(const MetricSpace& ms) {
    std::vector<Edge> edges;
    const std::size_t n = ms.size();
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({ms.dist(i, j), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return edges;
}

}  // namespace

std::size_t Barcode::alive_at(double r) const {
    std::size_t c = 0;
    for (const auto& b : bars)
        if (!b.death || *b.death > r) ++c;
    return c;
}

MergeTree dendrogram(const MetricSpace& ms) {
    const std::size_t n = ms.size();
    MergeTree tree;
    tree.n = n;
    if (n == 0) return tree;

    UnionFind uf(n);
    const auto edges = sorted_edges(ms);
    std::size_t k = 0;
    while (k < edges.size()) {
        const double radius = edges[k].d;
        // All pairs at this exact radius fuse together; chains at equal
        // radius join into one multiway event per resulting class.
        std::map<std::size_t, std::vector<std::size_t>> groups;  // new root -> old roots
        while (k < edges.size() && edges[k].d == radius) {
            const std::size_t ra = uf.find(edges[k].i);
            const std::size_t rb = uf.find(edges[k].j);
            if (ra != rb) {
                std::vector<std::size_t> olds;
                for (auto r : {ra, rb}) {
                    auto it = groups.find(r);
                    if (it == groups.end()) {
                        olds.push_back(r);
                    } else {
                        olds.insert(olds.end(), it->second.begin(), it->second.end());
                        groups.erase(it);
                    }
                }
                uf.unite(ra, rb);
                groups[uf.find(ra)] = std::move(olds);
            }
            ++k;
        }
        for (auto& [root, olds] : groups) {
            std::sort(olds.begin(), olds.end());
            tree.events.push_back({radius, std::move(olds)});
        }
    }
    return tree;
}

std::vector<std::size_t> MergeTree::partition_at(double r) const {
    std::vector<std::size_t> rep(n);
    std::iota(rep.begin(), rep.end(), std::size_t{0});
    UnionFind uf(n);
    for (const auto& ev : events) {
        if (ev.radius > r) break;
        for (std::size_t t = 1; t < ev.roots.size(); ++t) uf.unite(ev.roots[0], ev.roots[t]);
    }
    for (std::size_t i = 0; i < n; ++i) rep[i] = uf.find(i);
    return rep;
}

Barcode pi0_barcode(const MetricSpace& ms) {
    const MergeTree tree = dendrogram(ms);
    Barcode bc;
    std::size_t finite = 0;
    for (const auto& ev : tree.events) {
        for (std::size_t t = 1; t < ev.roots.size(); ++t) {
            bc.bars.push_back({0.0, ev.radius});
            ++finite;
        }
    }
    for (std::size_t c = finite; c < ms.size(); ++c) bc.bars.push_back({0.0, std::nullopt});
    std::sort(bc.bars.begin(), bc.bars.end(), [](const Barcode::Bar& a, const Barcode::Bar& b) {
        if (a.death.has_value() != b.death.has_value()) return !a.death.has_value();
        if (!a.death) return false;
        return *a.death > *b.death;
    });
    return bc;
}

namespace {

void newick_node(std::string& out, const MergeTree& tree, const MetricSpace& ms,
                 const std::vector<std::vector<std::size_t>>& children_of,
                 const std::vector<double>& radius_of, std::size_t node, double parent_radius) {
    const std::size_t n = tree.n;
    const bool leaf = node < n;
    if (leaf) {
        out += ms.labels()[node];
    } else {
        out += "(";
        const auto& kids = children_of[node - n];
        for (std::size_t t = 0; t < kids.size(); ++t) {
            if (t) out += ",";
            newick_node(out, tree, ms, children_of, radius_of, kids[t], radius_of[node - n]);
        }
        out += ")";
    }
    const double my_radius = leaf ? 0.0 : radius_of[node - n];
    if (parent_radius >= 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", parent_radius - my_radius);
        out += ":";
        out += buf;
    }
}

}  // namespace

std::string dendrogram_newick(const MergeTree& tree, const MetricSpace& ms) {
    // Node ids: 0..n-1 leaves, then one internal node per event.
    const std::size_t n = tree.n;
    std::vector<std::size_t> current(n);  // representative point -> current node id
    std::iota(current.begin(), current.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> children_of;
    std::vector<double> radius_of;

    UnionFind uf(n);
    for (const auto& ev : tree.events) {
        std::vector<std::size_t> kids;
        kids.reserve(ev.roots.size());
        for (auto r : ev.roots) kids.push_back(current[uf.find(r)]);
        for (std::size_t t = 1; t < ev.roots.size(); ++t) uf.unite(ev.roots[0], ev.roots[t]);
        children_of.push_back(std::move(kids));
        radius_of.push_back(ev.radius);
        current[uf.find(ev.roots[0])] = n + children_of.size() - 1;
    }

    std::vector<std::size_t> roots;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = uf.find(i);
        if (!seen[r]) {
            seen[r] = true;
            roots.push_back(current[r]);
        }
    }
    std::string out;
    for (std::size_t t = 0; t < roots.size(); ++t) {
        if (t) out += "\n";
        newick_node(out, tree, ms, children_of, radius_of, roots[t], -1.0);
        out += ";";
    }
    return out;
}

ComponentMap persistent_components(const MetricSpace& ms, double q, double r, double tol) {
    if (q > r && ms.diameter() > r + tol)
        throw std::invalid_argument(
            "persistent components need q <= r (the identity between scales is only "
            "continuous upward, unless the diameter is at most r)");

    const ClosureSpace at_q = metric_closure(ms, q, tol);
    const ClosureSpace at_r = metric_closure(ms, r, tol);
    ComponentMap out;
    out.from_classes = at_q.components();
    out.to_classes = at_r.components();

    std::vector<std::size_t> to_class_of(ms.size(), 0);
    for (std::size_t c = 0; c < out.to_classes.size(); ++c)
        for (auto p : out.to_classes[c]) to_class_of[p] = c;

    out.onto.reserve(out.from_classes.size());
    for (const auto& cls : out.from_classes) {
        const std::size_t target = to_class_of[cls.front()];
        for (auto p : cls)
            if (to_class_of[p] != target)
                throw std::logic_error("scale-q class split across scale-r classes");
        out.onto.push_back(target);
    }
    return out;
}

}  // namespace cech
