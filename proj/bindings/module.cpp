#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cech/constructions.hpp"
#include "cech/covering.hpp"
#include "cech/homotopy.hpp"
#include "cech/persistence.hpp"

namespace py = pybind11;
using namespace cech;

namespace {

PointSet to_pointset(const ClosureSpace& s, const std::vector<std::size_t>& idx) {
    return PointSet::from_indices(s.size(), idx);
}

std::vector<std::vector<std::size_t>> rows_of(const ClosureSpace& s) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.row(x).to_indices());
    return out;
}

MetricKind kind_of(const std::string& name) {
    if (name == "euclidean") return MetricKind::Euclidean;
    if (name == "circle") return MetricKind::Circle;
    throw std::invalid_argument("metric must be 'euclidean' or 'circle'");
}

const char* verdict_name(HomotopyVerdict v) {
    switch (v) {
        case HomotopyVerdict::Yes: return "yes";
        case HomotopyVerdict::No: return "no";
        default: return "unknown";
    }
}

}  // namespace

PYBIND11_MODULE(cechpy, m) {
    m.doc() = "Finite Cech closure spaces: continuity, homotopy, coverings, persistence";

    py::class_<ClosureSpace>(m, "Space")
        .def(py::init([](std::vector<std::string> labels,
                         const std::vector<std::vector<std::size_t>>& closure) {
                 std::vector<PointSet> rows;
                 rows.reserve(labels.size());
                 for (const auto& r : closure)
                     rows.push_back(PointSet::from_indices(labels.size(), r));
                 return ClosureSpace(std::move(labels), std::move(rows));
             }),
             py::arg("labels"), py::arg("closure"))
        .def_property_readonly("labels", &ClosureSpace::labels)
        .def_property_readonly("closure", &rows_of)
        .def("__len__", &ClosureSpace::size)
        .def("__eq__", [](const ClosureSpace& a, const ClosureSpace& b) { return a == b; })
        .def("closure_of",
             [](const ClosureSpace& s, const std::vector<std::size_t>& a) {
                 return s.closure(to_pointset(s, a)).to_indices();
             })
        .def("interior_of",
             [](const ClosureSpace& s, const std::vector<std::size_t>& a) {
                 return s.interior(to_pointset(s, a)).to_indices();
             })
        .def("is_open",
             [](const ClosureSpace& s, const std::vector<std::size_t>& a) {
                 return s.is_open(to_pointset(s, a));
             })
        .def("is_closed",
             [](const ClosureSpace& s, const std::vector<std::size_t>& a) {
                 return s.is_closed(to_pointset(s, a));
             })
        .def("is_neighborhood",
             [](const ClosureSpace& s, const std::vector<std::size_t>& u,
                const std::vector<std::size_t>& a) {
                 return s.is_neighborhood(to_pointset(s, u), to_pointset(s, a));
             })
        .def("minimal_neighborhood",
             [](const ClosureSpace& s, std::size_t x) {
                 return s.minimal_neighborhood(x).to_indices();
             })
        .def("is_topological", &ClosureSpace::is_topological)
        .def("tau", &ClosureSpace::tau_modification)
        .def("is_connected", &ClosureSpace::is_connected)
        .def("components", &ClosureSpace::components)
        .def("pi0", [](const ClosureSpace& s) { return pi0(s); })
        .def("is_indiscrete", &ClosureSpace::is_indiscrete)
        .def("semi_separated",
             [](const ClosureSpace& s, const std::vector<std::size_t>& a,
                const std::vector<std::size_t>& b) {
                 return s.semi_separated(to_pointset(s, a), to_pointset(s, b));
             })
        .def("is_interior_cover",
             [](const ClosureSpace& s, const std::vector<std::vector<std::size_t>>& family) {
                 std::vector<PointSet> sets;
                 sets.reserve(family.size());
                 for (const auto& f : family) sets.push_back(to_pointset(s, f));
                 return s.is_interior_cover(sets);
             })
        .def("validate", [](const ClosureSpace& s) {
            const auto rep = validate(s);
            return py::make_tuple(rep.ok, rep.reflexivity_failures);
        });

    m.def("finer_than", &finer_than, py::arg("c1"), py::arg("c2"));
    m.def(
        "is_continuous",
        [](const ClosureSpace& dom, const ClosureSpace& cod,
           const std::vector<std::size_t>& values) {
            return SpaceMap(dom, cod, values).is_continuous();
        },
        py::arg("domain"), py::arg("codomain"), py::arg("values"));

    m.def("discrete", &ClosureSpace::discrete, py::arg("labels"));
    m.def("indiscrete", &ClosureSpace::indiscrete, py::arg("labels"));
    m.def(
        "subspace",
        [](const ClosureSpace& s, const std::vector<std::size_t>& a) {
            return subspace(s, to_pointset(s, a));
        },
        py::arg("space"), py::arg("points"));
    m.def("disjoint_union", &disjoint_union, py::arg("spaces"));
    m.def("product", &product, py::arg("a"), py::arg("b"));
    m.def(
        "quotient",
        [](const ClosureSpace& src, std::vector<std::string> classes,
           std::vector<std::size_t> assign) {
            return quotient(QuotientMap(src, std::move(classes), std::move(assign)));
        },
        py::arg("space"), py::arg("classes"), py::arg("assign"));

    m.def(
        "metric_closure",
        [](const std::vector<std::vector<double>>& points, double r, const std::string& metric,
           double tol) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < points.size(); ++i)
                labels.push_back("p" + std::to_string(i));
            return metric_closure(MetricSpace::from_points(labels, points, kind_of(metric)), r,
                                  tol);
        },
        py::arg("points"), py::arg("r"), py::arg("metric") = "euclidean",
        py::arg("tol") = kDefaultTol);
    m.def(
        "qr_continuous",
        [](const std::vector<std::vector<double>>& dom,
           const std::vector<std::vector<double>>& cod, const std::vector<std::size_t>& values,
           double q, double r, const std::string& metric, double tol) {
            std::vector<std::string> dl, cl;
            for (std::size_t i = 0; i < dom.size(); ++i) dl.push_back("p" + std::to_string(i));
            for (std::size_t i = 0; i < cod.size(); ++i) cl.push_back("q" + std::to_string(i));
            const MetricMap f(MetricSpace::from_points(dl, dom, kind_of(metric)),
                              MetricSpace::from_points(cl, cod, kind_of(metric)), values);
            return qr_continuous(f, q, r, tol);
        },
        py::arg("domain_points"), py::arg("codomain_points"), py::arg("values"), py::arg("q"),
        py::arg("r"), py::arg("metric") = "euclidean", py::arg("tol") = kDefaultTol);

    m.def(
        "graph_closure",
        [](std::vector<std::string> vertices,
           std::vector<std::pair<std::size_t, std::size_t>> edges) {
            return graph_closure(Digraph{std::move(vertices), std::move(edges)});
        },
        py::arg("vertices"), py::arg("edges"));
    m.def(
        "skeleton_closure",
        [](std::vector<std::string> vertices, std::vector<std::vector<std::size_t>> simplices,
           std::size_t k) {
            return skeleton_closure(SimplicialComplex(std::move(vertices), simplices), k);
        },
        py::arg("vertices"), py::arg("simplices"), py::arg("k"));
    m.def("cyclic_space", &cyclic_space, py::arg("n"), py::arg("m"));

    m.def(
        "path_valid",
        [](const ClosureSpace& s, const std::vector<std::size_t>& pts) {
            return DiscretePath(s, pts).valid();
        },
        py::arg("space"), py::arg("points"));
    m.def(
        "star",
        [](const ClosureSpace& s, const std::vector<std::size_t>& a,
           const std::vector<std::size_t>& b) {
            return star(DiscretePath(s, a), DiscretePath(s, b)).points();
        },
        py::arg("space"), py::arg("a"), py::arg("b"));
    m.def(
        "winding",
        [](std::size_t n, std::size_t m, const std::vector<std::size_t>& pts) {
            const CyclicSpace cs(n, m);
            return winding(cs, DiscretePath(cs.space(), pts));
        },
        py::arg("n"), py::arg("m"), py::arg("points"));
    m.def(
        "wedge_word",
        [](std::size_t n1, std::size_t m1, std::size_t n2, std::size_t m2,
           const std::vector<std::size_t>& pts) {
            const WedgeSpace ws(CyclicSpace(n1, m1), CyclicSpace(n2, m2));
            return word_to_string(wedge_word(ws, DiscretePath(ws.space(), pts)));
        },
        py::arg("n1"), py::arg("m1"), py::arg("n2"), py::arg("m2"), py::arg("points"));
    m.def(
        "homotopic",
        [](const ClosureSpace& s, const std::vector<std::size_t>& a,
           const std::vector<std::size_t>& b, std::size_t cap) {
            const DiscretePath pa(s, a), pb(s, b);
            const auto res = homotopic(pa, pb, cap == 0 ? default_cap(pa, pb) : cap);
            return py::make_tuple(verdict_name(res.verdict), res.reason);
        },
        py::arg("space"), py::arg("a"), py::arg("b"), py::arg("cap") = 0);
    m.def(
        "wedge_homotopic",
        [](std::size_t n1, std::size_t m1, std::size_t n2, std::size_t m2,
           const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
           std::size_t cap) {
            const WedgeSpace ws(CyclicSpace(n1, m1), CyclicSpace(n2, m2));
            const DiscretePath pa(ws.space(), a), pb(ws.space(), b);
            HomotopyOptions opts;
            opts.cap = cap == 0 ? default_cap(pa, pb) : cap;
            opts.wedge = ws;
            const auto res = homotopic(pa, pb, opts);
            return py::make_tuple(verdict_name(res.verdict), res.reason);
        },
        py::arg("n1"), py::arg("m1"), py::arg("n2"), py::arg("m2"), py::arg("a"), py::arg("b"),
        py::arg("cap") = 0);
    m.def("null_contraction_exists", &null_contraction_exists, py::arg("space"), py::arg("cap"));

    m.def(
        "is_covering",
        [](const ClosureSpace& total, const ClosureSpace& base,
           const std::vector<std::size_t>& proj) {
            const CoveringCandidate cc(total, base, proj);
            const auto& v = cc.is_covering();
            return py::make_tuple(v.covering, v.reason);
        },
        py::arg("total"), py::arg("base"), py::arg("proj"));
    m.def(
        "lift_path",
        [](const ClosureSpace& total, const ClosureSpace& base,
           const std::vector<std::size_t>& proj, const std::vector<std::size_t>& path,
           std::size_t start) {
            const CoveringCandidate cc(total, base, proj);
            return lift_path(cc, DiscretePath(cc.base(), path), start).points();
        },
        py::arg("total"), py::arg("base"), py::arg("proj"), py::arg("path"), py::arg("start"));

    m.def(
        "pi0_barcode",
        [](const std::vector<std::vector<double>>& points, const std::string& metric) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < points.size(); ++i)
                labels.push_back("p" + std::to_string(i));
            const auto bc =
                pi0_barcode(MetricSpace::from_points(labels, points, kind_of(metric)));
            std::vector<std::pair<double, std::optional<double>>> bars;
            for (const auto& b : bc.bars) bars.emplace_back(b.birth, b.death);
            return bars;
        },
        py::arg("points"), py::arg("metric") = "euclidean");
    m.def(
        "persistent_components",
        [](const std::vector<std::vector<double>>& points, double q, double r,
           const std::string& metric) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < points.size(); ++i)
                labels.push_back("p" + std::to_string(i));
            const auto pm = persistent_components(
                MetricSpace::from_points(labels, points, kind_of(metric)), q, r);
            return py::make_tuple(pm.from_classes, pm.to_classes, pm.onto);
        },
        py::arg("points"), py::arg("q"), py::arg("r"), py::arg("metric") = "euclidean");
}
