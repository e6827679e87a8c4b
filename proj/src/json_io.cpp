#include "cech/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cech {

namespace {

const json& require(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw JsonError(std::string("missing field \"") + field + "\"");
    return j.at(field);
}

std::vector<std::string> string_list(const json& j, const char* field) {
    const json& arr = require(j, field);
    if (!arr.is_array()) throw JsonError(std::string("field \"") + field + "\" must be an array");
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string())
            throw JsonError(std::string("field \"") + field + "\" must contain strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<std::size_t> index_list(const json& arr, const char* field, std::size_t bound) {
    if (!arr.is_array()) throw JsonError(std::string("field \"") + field + "\" must be an array");
    std::vector<std::size_t> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw JsonError(std::string("field \"") + field +
                            "\" must contain nonnegative integers");
        const std::size_t i = v.get<std::size_t>();
        if (i >= bound)
            throw JsonError(std::string("field \"") + field + "\": index " + std::to_string(i) +
                            " out of range [0," + std::to_string(bound) + ")");
        out.push_back(i);
    }
    return out;
}

std::string dirname_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::size_t size_field(const json& j, const char* field) {
    const json& v = require(j, field);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw JsonError(std::string("field \"") + field + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

double round_sig(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(
                                                      std::log10(std::fabs(value)))));
    return std::round(value * mag) / mag;
}

json json_number(double value) { return json(round_sig(value)); }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw JsonError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// -- spaces ------------------------------------------------------------

json space_to_json(const ClosureSpace& space) {
    json rows = json::array();
    for (std::size_t x = 0; x < space.size(); ++x) rows.push_back(space.row(x).to_indices());
    return json{{"labels", space.labels()}, {"closure", std::move(rows)}};
}

ClosureSpace space_from_json(const json& j) {
    auto labels = string_list(j, "labels");
    const json& closure = require(j, "closure");
    if (!closure.is_array() || closure.size() != labels.size())
        throw JsonError("field \"closure\" must list one row per label");
    std::vector<PointSet> rows;
    rows.reserve(labels.size());
    for (const auto& row : closure)
        rows.push_back(PointSet::from_indices(labels.size(),
                                              index_list(row, "closure", labels.size())));
    return ClosureSpace(std::move(labels), std::move(rows));
}

SpaceDocument space_document_from_json(const json& j, const std::string& base_dir) {
    if (j.is_string())
        return space_document_from_json(load_json_file(base_dir + "/" + j.get<std::string>()),
                                        base_dir);
    if (!j.is_object()) throw JsonError("a space must be an object or a file path");
    if (j.contains("file")) {
        const std::string path = base_dir + "/" + require(j, "file").get<std::string>();
        return space_document_from_json(load_json_file(path), dirname_of(path));
    }
    SpaceDocument doc;
    if (j.contains("cyclic")) {
        const json& c = j.at("cyclic");
        doc.cyclic = CyclicSpace(size_field(c, "n"), size_field(c, "m"));
        doc.space = doc.cyclic->space();
        return doc;
    }
    if (j.contains("wedge")) {
        const json& w = j.at("wedge");
        doc.wedge = WedgeSpace(CyclicSpace(size_field(w, "n1"), size_field(w, "m1")),
                               CyclicSpace(size_field(w, "n2"), size_field(w, "m2")));
        doc.space = doc.wedge->space();
        return doc;
    }
    doc.space = space_from_json(j);
    return doc;
}

// -- quotients ----------------------------------------------------------

QuotientMap quotient_from_json(const json& j) {
    ClosureSpace src = space_from_json(require(j, "space"));
    auto classes = string_list(j, "classes");
    auto assign = index_list(require(j, "assign"), "assign", classes.size());
    return QuotientMap(std::move(src), std::move(classes), std::move(assign));
}

json quotient_to_json(const QuotientMap& q) {
    return json{{"space", space_to_json(q.source)},
                {"classes", q.class_labels},
                {"assign", q.assign}};
}

// -- metric spaces -------------------------------------------------------

MetricSpace metric_from_json(const json& j) {
    if (j.contains("dist")) {
        auto labels = string_list(j, "labels");
        const json& dist = require(j, "dist");
        if (!dist.is_array()) throw JsonError("field \"dist\" must be a matrix");
        std::vector<std::vector<double>> m;
        m.reserve(dist.size());
        for (const auto& row : dist) {
            if (!row.is_array()) throw JsonError("field \"dist\" must be a matrix");
            std::vector<double> r;
            for (const auto& v : row) {
                if (!v.is_number()) throw JsonError("field \"dist\" must contain numbers");
                r.push_back(v.get<double>());
            }
            m.push_back(std::move(r));
        }
        return MetricSpace::from_matrix(std::move(labels), std::move(m));
    }
    if (j.contains("points")) {
        const json& pts = j.at("points");
        if (!pts.is_array()) throw JsonError("field \"points\" must be an array");
        std::vector<std::vector<double>> coords;
        for (const auto& row : pts) {
            std::vector<double> c;
            for (const auto& v : row) {
                if (!v.is_number()) throw JsonError("field \"points\" must contain numbers");
                c.push_back(v.get<double>());
            }
            coords.push_back(std::move(c));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels = string_list(j, "labels");
        } else {
            for (std::size_t i = 0; i < coords.size(); ++i)
                labels.push_back("p" + std::to_string(i));
        }
        MetricKind kind = MetricKind::Euclidean;
        if (j.contains("metric")) {
            const std::string k = j.at("metric").get<std::string>();
            if (k == "circle")
                kind = MetricKind::Circle;
            else if (k != "euclidean")
                throw JsonError("field \"metric\" must be \"euclidean\" or \"circle\"");
        }
        return MetricSpace::from_points(std::move(labels), coords, kind);
    }
    throw JsonError("a metric space needs either \"dist\" or \"points\"");
}

json metric_to_json(const MetricSpace& ms) {
    json dist = json::array();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < ms.size(); ++k) row.push_back(json_number(ms.dist(i, k)));
        dist.push_back(std::move(row));
    }
    return json{{"labels", ms.labels()}, {"dist", std::move(dist)}};
}

MetricSpace pointcloud_from_csv(const std::string& text, bool labeled, MetricKind kind) {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coords;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const auto a = cell.find_first_not_of(" \t\r");
            const auto b = cell.find_last_not_of(" \t\r");
            cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
        }
        std::vector<double> row;
        std::size_t first = 0;
        if (labeled) {
            labels.push_back(cells.at(0));
            first = 1;
        } else {
            labels.push_back("p" + std::to_string(coords.size()));
        }
        for (std::size_t c = first; c < cells.size(); ++c) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cells[c], &used));
                if (used != cells[c].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw JsonError("CSV line " + std::to_string(lineno) + ": \"" + cells[c] +
                                "\" is not a number");
            }
        }
        coords.push_back(std::move(row));
    }
    return MetricSpace::from_points(std::move(labels), coords, kind);
}

// -- graphs / complexes ----------------------------------------------------

Digraph graph_from_json(const json& j) {
    Digraph g;
    g.vertices = string_list(j, "vertices");
    const json& edges = require(j, "edges");
    if (!edges.is_array()) throw JsonError("field \"edges\" must be an array of pairs");
    for (const auto& e : edges) {
        auto pair = index_list(e, "edges", g.vertices.size());
        if (pair.size() != 2) throw JsonError("field \"edges\" must contain pairs [u,v]");
        g.edges.emplace_back(pair[0], pair[1]);
    }
    return g;
}

SimplicialComplex complex_from_json(const json& j) {
    auto vertices = string_list(j, "vertices");
    const json& simplices = require(j, "simplices");
    if (!simplices.is_array()) throw JsonError("field \"simplices\" must be an array");
    std::vector<std::vector<std::size_t>> sx;
    for (const auto& s : simplices) sx.push_back(index_list(s, "simplices", vertices.size()));
    return SimplicialComplex(std::move(vertices), sx);
}

// -- paths ----------------------------------------------------------------

PathDocument path_from_json(const json& j, const std::string& base_dir) {
    SpaceDocument doc = space_document_from_json(require(j, "space"), base_dir);
    auto points = index_list(require(j, "points"), "points", doc.space.size());
    if (points.empty()) throw JsonError("field \"points\" must not be empty");
    DiscretePath path(doc.space, std::move(points));
    return PathDocument{std::move(doc), std::move(path)};
}

json path_to_json(const DiscretePath& p) {
    return json{{"space", space_to_json(p.space())}, {"points", p.points()}};
}

// -- maps -------------------------------------------------------------

SpaceMap space_map_from_json(const json& j, const std::string& base_dir) {
    SpaceDocument dom = space_document_from_json(require(j, "domain"), base_dir);
    SpaceDocument cod = space_document_from_json(require(j, "codomain"), base_dir);
    auto values = index_list(require(j, "values"), "values", cod.space.size());
    return SpaceMap(std::move(dom.space), std::move(cod.space), std::move(values));
}

MetricMap metric_map_from_json(const json& j) {
    MetricSpace dom = metric_from_json(require(j, "domain"));
    MetricSpace cod = metric_from_json(require(j, "codomain"));
    auto values = index_list(require(j, "values"), "values", cod.size());
    return MetricMap(std::move(dom), std::move(cod), std::move(values));
}

// -- coverings ----------------------------------------------------------

CoveringDocument covering_from_json(const json& j, const std::string& base_dir) {
    if (j.contains("cyclic_cover")) {
        const json& c = j.at("cyclic_cover");
        const std::size_t k = size_field(c, "k");
        const std::size_t n = size_field(c, "n");
        const std::size_t m = size_field(c, "m");
        if (k == 0 || n == 0) throw JsonError("cyclic_cover needs k >= 1 and n >= 1");
        ClosureSpace total = cyclic_space(k * n, m);
        ClosureSpace base = cyclic_space(n, m);
        std::vector<std::size_t> proj(k * n);
        for (std::size_t i = 0; i < k * n; ++i) proj[i] = i % n;
        return CoveringDocument{
            CoveringCandidate(std::move(total), std::move(base), std::move(proj)), true};
    }
    ClosureSpace total = space_document_from_json(require(j, "total"), base_dir).space;
    ClosureSpace base = space_document_from_json(require(j, "base"), base_dir).space;
    auto proj = index_list(require(j, "proj"), "proj", base.size());
    return CoveringDocument{CoveringCandidate(std::move(total), std::move(base), std::move(proj)),
                            false};
}

json covering_verdict_to_json(const CoveringCandidate& cc) {
    const CoveringVerdict& v = cc.is_covering();
    json out{{"covering", v.covering}};
    if (v.covering) {
        json trivs = json::array();
        for (const auto& t : v.trivializations) {
            json sheets = json::array();
            for (const auto& s : t.sheets) sheets.push_back(s);
            trivs.push_back(json{{"base_point", t.base_point},
                                 {"fiber", t.fiber},
                                 {"sheets", std::move(sheets)}});
        }
        out["trivializations"] = std::move(trivs);
    } else {
        if (v.failing_base) out["failing_base"] = *v.failing_base;
        out["reason"] = v.reason;
    }
    return out;
}

// -- persistence -----------------------------------------------------------

json barcode_to_json(const Barcode& bc) {
    json bars = json::array();
    for (const auto& b : bc.bars) {
        json bar = json::array();
        bar.push_back(json_number(b.birth));
        if (b.death)
            bar.push_back(json_number(*b.death));
        else
            bar.push_back(nullptr);
        bars.push_back(std::move(bar));
    }
    return json{{"bars", std::move(bars)}};
}

json merge_tree_to_json(const MergeTree& tree, const MetricSpace& ms) {
    json events = json::array();
    for (const auto& ev : tree.events) {
        json roots = json::array();
        for (auto r : ev.roots) roots.push_back(ms.labels()[r]);
        events.push_back(json{{"radius", json_number(ev.radius)}, {"roots", std::move(roots)}});
    }
    return json{{"points", ms.labels()}, {"events", std::move(events)}};
}

// -- homotopy -----------------------------------------------------------

json move_to_json(const Move& m) {
    switch (m.kind) {
        case Move::Kind::InsertRepeat:
            return json{{"op", "insert"}, {"index", m.index}};
        case Move::Kind::DeleteRepeat:
            return json{{"op", "delete"}, {"index", m.index}};
        case Move::Kind::Substitute:
            return json{{"op", "substitute"}, {"index", m.index}, {"from", m.prev},
                        {"to", m.value}};
    }
    throw std::logic_error("unreachable");
}

json homotopy_result_to_json(const HomotopyResult& r) {
    json out;
    switch (r.verdict) {
        case HomotopyVerdict::Yes: {
            out["verdict"] = "yes";
            json moves = json::array();
            for (const auto& m : r.trace) moves.push_back(move_to_json(m));
            out["witness"] = json{{"moves", std::move(moves)}};
            break;
        }
        case HomotopyVerdict::No:
            out["verdict"] = "no";
            out["witness"] = json{{"invariant", r.reason}};
            break;
        case HomotopyVerdict::Unknown:
            out["verdict"] = "unknown";
            out["witness"] = json{{"note", r.reason}};
            break;
    }
    return out;
}

json word_to_json(const Word& w) {
    json letters = json::array();
    for (const auto& l : w)
        letters.push_back(json::array({std::string(1, l.letter), l.exponent}));
    return json{{"word", std::move(letters)}, {"display", word_to_string(w)}};
}

}  // namespace cech
