#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cech/json_io.hpp"

using namespace cech;

namespace {

enum ExitCode { kOk = 0, kVerdictFalse = 1, kInputError = 2 };

struct Options {
    std::string format = "json";
    double tol = kDefaultTol;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dirname_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

void print_text(const json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                out << pad << key << ":\n";
                print_text(value, out, indent + 1);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                print_text(value, out, indent + 1);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

int emit(const Options& opt, const json& payload, int code = kOk) {
    if (opt.format == "text")
        print_text(payload, std::cout);
    else
        std::cout << payload.dump(2) << "\n";
    return code;
}

json space_info_json(const ClosureSpace& s) {
    const ValidationReport rep = validate(s);
    json failures = json::array();
    for (auto x : rep.reflexivity_failures) failures.push_back(s.label(x));
    json comps = json::array();
    for (const auto& cls : pi0(s)) comps.push_back(cls);
    return json{{"points", s.size()},
                {"valid", rep.ok},
                {"reflexivity_failures", std::move(failures)},
                {"additivity", "structural"},
                {"topological", s.is_topological()},
                {"connected", s.is_connected()},
                {"components", std::move(comps)},
                {"indiscrete", s.is_indiscrete()}};
}

MetricSpace load_cloud(const std::string& path, bool labeled, const std::string& metric) {
    const MetricKind kind = metric == "circle" ? MetricKind::Circle : MetricKind::Euclidean;
    if (metric != "circle" && metric != "euclidean")
        throw JsonError("--metric must be euclidean or circle");
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, true, true);
        return metric_from_json(j);
    }
    return pointcloud_from_csv(text, labeled, kind);
}

std::vector<std::size_t> parse_index_csv(const std::string& arg) {
    std::vector<std::size_t> out;
    std::istringstream in(arg);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            out.push_back(static_cast<std::size_t>(std::stoul(cell)));
        } catch (const std::exception&) {
            throw JsonError("--points expects a comma-separated index list");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Cech closure spaces: construction, continuity, homotopy, persistence"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--tol", opt.tol,
                   "Absolute tolerance for distance comparisons d <= r (ties at exactly r are "
                   "inside the closure)")
        ->capture_default_str();

    int code = kOk;
    auto run = [&code](auto&& fn) {
        return [&code, fn]() { code = fn(); };
    };

    // ---- space ----
    auto* space = app.add_subcommand("space", "Build and inspect closure spaces");
    space->require_subcommand(1);

    {
        auto* neu = space->add_subcommand("new", "Construct a space from raw data");
        auto from = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto r = std::make_shared<double>(-1.0);
        auto k = std::make_shared<std::size_t>(0);
        auto n = std::make_shared<std::size_t>(0);
        auto m = std::make_shared<std::size_t>(0);
        auto metric = std::make_shared<std::string>("euclidean");
        auto labeled = std::make_shared<bool>(false);
        neu->add_option("--from", *from, "Source kind")
            ->required()
            ->check(CLI::IsMember({"pointcloud", "graph", "complex", "cyclic"}));
        neu->add_option("input", *input, "Input file (CSV point cloud or JSON)");
        neu->add_option("--r", *r, "Closure scale for point clouds");
        neu->add_option("--k", *k, "Skeleton dimension for complexes");
        neu->add_option("--n", *n, "Cycle length");
        neu->add_option("--m", *m, "Cycle arc radius");
        neu->add_option("--metric", *metric, "pointcloud metric: euclidean|circle");
        neu->add_flag("--labeled", *labeled, "First CSV column is a label");
        neu->callback(run([&opt, from, input, r, k, n, m, metric, labeled]() {
            ClosureSpace s;
            if (*from == "cyclic") {
                if (*n == 0) throw JsonError("--n is required (n >= 1) for cyclic spaces");
                s = cyclic_space(*n, *m);
            } else if (*from == "pointcloud") {
                if (input->empty()) throw JsonError("pointcloud input file required");
                if (*r < 0) throw JsonError("--r is required (r >= 0) for point clouds");
                s = metric_closure(load_cloud(*input, *labeled, *metric), *r, opt.tol);
            } else if (*from == "graph") {
                if (input->empty()) throw JsonError("graph input file required");
                s = graph_closure(graph_from_json(load_json_file(*input)));
            } else {
                if (input->empty()) throw JsonError("complex input file required");
                s = skeleton_closure(complex_from_json(load_json_file(*input)), *k);
            }
            return emit(opt, space_to_json(s));
        }));
    }

    {
        auto* info = space->add_subcommand("info", "Validate and summarize a space");
        auto file = std::make_shared<std::string>();
        info->add_option("file", *file)->required();
        info->callback(run([&opt, file]() {
            const SpaceDocument doc =
                space_document_from_json(load_json_file(*file), dirname_of(*file));
            return emit(opt, space_info_json(doc.space));
        }));
    }

    {
        auto* tau = space->add_subcommand("tau", "Topological modification");
        auto file = std::make_shared<std::string>();
        tau->add_option("file", *file)->required();
        tau->callback(run([&opt, file]() {
            const SpaceDocument doc =
                space_document_from_json(load_json_file(*file), dirname_of(*file));
            return emit(opt, space_to_json(doc.space.tau_modification()));
        }));
    }

    {
        auto* op = space->add_subcommand("op", "Constructions on spaces");
        op->require_subcommand(1);

        auto* sub = op->add_subcommand("subspace", "Restrict to a point set");
        auto sfile = std::make_shared<std::string>();
        auto spoints = std::make_shared<std::string>();
        sub->add_option("file", *sfile)->required();
        sub->add_option("--points", *spoints, "Comma-separated point indices")->required();
        sub->callback(run([&opt, sfile, spoints]() {
            const SpaceDocument doc =
                space_document_from_json(load_json_file(*sfile), dirname_of(*sfile));
            PointSet a(doc.space.size());
            for (auto i : parse_index_csv(*spoints)) {
                if (i >= doc.space.size())
                    throw JsonError("--points: index " + std::to_string(i) + " out of range");
                a.set(i);
            }
            return emit(opt, space_to_json(subspace(doc.space, a)));
        }));

        auto* prod = op->add_subcommand("product", "Binary product");
        auto pa = std::make_shared<std::string>(), pb = std::make_shared<std::string>();
        prod->add_option("a", *pa)->required();
        prod->add_option("b", *pb)->required();
        prod->callback(run([&opt, pa, pb]() {
            const auto a = space_document_from_json(load_json_file(*pa), dirname_of(*pa));
            const auto b = space_document_from_json(load_json_file(*pb), dirname_of(*pb));
            return emit(opt, space_to_json(product(a.space, b.space)));
        }));

        auto* quot = op->add_subcommand("quotient", "Quotient by a class assignment");
        auto qfile = std::make_shared<std::string>();
        quot->add_option("file", *qfile)->required();
        quot->callback(run([&opt, qfile]() {
            return emit(opt, space_to_json(quotient(quotient_from_json(load_json_file(*qfile)))));
        }));

        auto* dis = op->add_subcommand("disjoint", "Disjoint union");
        auto dfiles = std::make_shared<std::vector<std::string>>();
        dis->add_option("files", *dfiles)->required()->expected(-1);
        dis->callback(run([&opt, dfiles]() {
            std::vector<ClosureSpace> spaces;
            for (const auto& f : *dfiles)
                spaces.push_back(space_document_from_json(load_json_file(f), dirname_of(f)).space);
            return emit(opt, space_to_json(disjoint_union(spaces)));
        }));
    }

    // ---- map ----
    auto* map_cmd = app.add_subcommand("map", "Continuity checks for maps");
    {
        auto* check = map_cmd->add_subcommand("check", "Check continuity of a map");
        auto file = std::make_shared<std::string>();
        auto qr = std::make_shared<std::vector<double>>();
        check->add_option("file", *file)->required();
        check->add_option("--qr", *qr, "Check (q,r)-continuity between metric spaces")
            ->expected(2);
        check->callback(run([&opt, file, qr]() {
            const json j = load_json_file(*file);
            if (!qr->empty()) {
                const MetricMap f = metric_map_from_json(j);
                const bool ok = qr_continuous(f, (*qr)[0], (*qr)[1], opt.tol);
                return emit(opt,
                            json{{"qr_continuous", ok}, {"q", (*qr)[0]}, {"r", (*qr)[1]}},
                            ok ? kOk : kVerdictFalse);
            }
            const SpaceMap f = space_map_from_json(j, dirname_of(*file));
            const bool ok = f.is_continuous();
            return emit(opt, json{{"continuous", ok}}, ok ? kOk : kVerdictFalse);
        }));
    }

    // ---- path ----
    auto* path_cmd = app.add_subcommand("path", "Discrete path operations");
    {
        auto* check = path_cmd->add_subcommand("check", "Validate the step rule");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file)->required();
        check->callback(run([&opt, file]() {
            const PathDocument doc = path_from_json(load_json_file(*file), dirname_of(*file));
            const bool ok = doc.path.valid();
            json out{{"valid", ok}};
            if (!ok) out["first_bad_step"] = doc.path.first_bad_step();
            return emit(opt, out, ok ? kOk : kVerdictFalse);
        }));
    }
    {
        auto* st = path_cmd->add_subcommand("star", "Concatenate two paths");
        auto fa = std::make_shared<std::string>(), fb = std::make_shared<std::string>();
        st->add_option("a", *fa)->required();
        st->add_option("b", *fb)->required();
        st->callback(run([&opt, fa, fb]() {
            const PathDocument a = path_from_json(load_json_file(*fa), dirname_of(*fa));
            const PathDocument b = path_from_json(load_json_file(*fb), dirname_of(*fb));
            return emit(opt, path_to_json(star(a.path, b.path)));
        }));
    }
    {
        auto* rev = path_cmd->add_subcommand("reverse", "Reverse a path");
        auto file = std::make_shared<std::string>();
        rev->add_option("file", *file)->required();
        rev->callback(run([&opt, file]() {
            const PathDocument doc = path_from_json(load_json_file(*file), dirname_of(*file));
            return emit(opt, path_to_json(reverse(doc.path)));
        }));
    }

    // ---- homotopy ----
    auto* hom = app.add_subcommand("homotopy", "Loops, winding numbers, wedge words");
    {
        auto* wind = hom->add_subcommand("winding", "Winding number of a cyclic loop");
        auto file = std::make_shared<std::string>();
        wind->add_option("file", *file)->required();
        wind->callback(run([&opt, file]() {
            const PathDocument doc = path_from_json(load_json_file(*file), dirname_of(*file));
            std::optional<CyclicSpace> cs = doc.space.cyclic;
            if (!cs) cs = detect_cyclic(doc.space.space);
            if (!cs) throw JsonError("winding needs a cyclic space ({\"cyclic\":{n,m}})");
            return emit(opt, json{{"winding", winding(*cs, doc.path)}});
        }));
    }
    {
        auto* word = hom->add_subcommand("word", "Wedge word of a loop");
        auto file = std::make_shared<std::string>();
        word->add_option("file", *file)->required();
        word->callback(run([&opt, file]() {
            const PathDocument doc = path_from_json(load_json_file(*file), dirname_of(*file));
            if (!doc.space.wedge)
                throw JsonError("wedge words need a wedge space ({\"wedge\":{n1,m1,n2,m2}})");
            return emit(opt, word_to_json(wedge_word(*doc.space.wedge, doc.path)));
        }));
    }
    {
        auto* eq = hom->add_subcommand("equal", "Decide homotopy of two loops");
        auto fa = std::make_shared<std::string>(), fb = std::make_shared<std::string>();
        auto cap = std::make_shared<std::size_t>(0);
        auto has_cap = std::make_shared<bool>(false);
        eq->add_option("a", *fa)->required();
        eq->add_option("b", *fb)->required();
        eq->add_option("--cap", *cap, "Length cap for intermediate paths")
            ->each([has_cap](const std::string&) { *has_cap = true; });
        eq->callback(run([&opt, fa, fb, cap, has_cap]() {
            const PathDocument a = path_from_json(load_json_file(*fa), dirname_of(*fa));
            const PathDocument b = path_from_json(load_json_file(*fb), dirname_of(*fb));
            HomotopyOptions hopts;
            hopts.cap = *has_cap ? *cap : default_cap(a.path, b.path);
            if (a.space.wedge) hopts.wedge = a.space.wedge;
            const HomotopyResult res = homotopic(a.path, b.path, hopts);
            json out = homotopy_result_to_json(res);
            out["cap"] = hopts.cap;
            return emit(opt, out,
                        res.verdict == HomotopyVerdict::No ? kVerdictFalse : kOk);
        }));
    }
    {
        auto* null = hom->add_subcommand("null", "Search for a null-contraction certificate");
        auto file = std::make_shared<std::string>();
        auto cap = std::make_shared<std::size_t>(0);
        auto has_cap = std::make_shared<bool>(false);
        null->add_option("file", *file, "Space JSON (or a path JSON; its space is used)")
            ->required();
        null->add_option("--cap", *cap, "Length cap")
            ->each([has_cap](const std::string&) { *has_cap = true; });
        null->callback(run([&opt, file, cap, has_cap]() {
            const json j = load_json_file(*file);
            ClosureSpace s = j.contains("points")
                                 ? path_from_json(j, dirname_of(*file)).path.space()
                                 : space_document_from_json(j, dirname_of(*file)).space;
            const std::size_t c = *has_cap ? *cap : 3 * s.size() + 2;
            const bool ok = null_contraction_exists(s, c);
            return emit(opt,
                        json{{"null_contractible", ok},
                             {"indiscrete", s.is_indiscrete()},
                             {"cap", c}},
                        ok ? kOk : kVerdictFalse);
        }));
    }

    // ---- cover ----
    auto* cover = app.add_subcommand("cover", "Covering maps and path lifting");
    {
        auto* check = cover->add_subcommand("check", "Verify the covering property");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file)->required();
        check->callback(run([&opt, file]() {
            const CoveringDocument doc =
                covering_from_json(load_json_file(*file), dirname_of(*file));
            json out = covering_verdict_to_json(doc.candidate);
            if (doc.cyclic_surrogate)
                out["surrogate"] = "finite cyclic model standing in for the integer line cover";
            return emit(opt, out, doc.candidate.is_covering().covering ? kOk : kVerdictFalse);
        }));

        auto add_lift = [&](const char* name, const char* help, bool enumerate) {
            auto* sc = cover->add_subcommand(name, help);
            auto file = std::make_shared<std::string>();
            auto pathfile = std::make_shared<std::string>();
            auto start = std::make_shared<std::size_t>(0);
            sc->add_option("file", *file)->required();
            sc->add_option("--path", *pathfile, "Base path JSON")->required();
            sc->add_option("--start", *start, "Start point in the total space")->required();
            sc->callback(run([&opt, file, pathfile, start, enumerate]() {
                const CoveringDocument doc =
                    covering_from_json(load_json_file(*file), dirname_of(*file));
                const PathDocument base =
                    path_from_json(load_json_file(*pathfile), dirname_of(*pathfile));
                if (enumerate) {
                    const LiftCount c = lift_uniqueness_check(doc.candidate, base.path, *start);
                    const auto lifts = enumerate_lifts(doc.candidate, base.path, *start, 16);
                    json larr = json::array();
                    for (const auto& l : lifts) larr.push_back(l.points());
                    const char* verdict = c == LiftCount::Unique
                                              ? "unique"
                                              : (c == LiftCount::Multiple ? "multiple" : "none");
                    return emit(opt, json{{"lifts", verdict}, {"found", std::move(larr)}});
                }
                if (doc.candidate.is_covering().covering) {
                    const DiscretePath lifted = lift_path(doc.candidate, base.path, *start);
                    return emit(opt, json{{"points", lifted.points()}});
                }
                const auto lifts = enumerate_lifts(doc.candidate, base.path, *start, 2);
                const std::string reason = lifts.empty() ? "no lift" : "non-unique lift";
                return emit(opt,
                            json{{"error", reason},
                                 {"note", "projection is not a covering map"}},
                            kVerdictFalse);
            }));
        };
        add_lift("lift", "Lift a base path (unique over a covering)", false);
        add_lift("lifts", "Enumerate all lifts with a given start", true);
    }

    // ---- persist ----
    auto* persist = app.add_subcommand("persist", "Persistent components of a point cloud");
    {
        auto add_cloud_options = [](CLI::App* sc, auto metric, auto labeled) {
            sc->add_option("--metric", *metric, "pointcloud metric: euclidean|circle");
            sc->add_flag("--labeled", *labeled, "First CSV column is a label");
        };

        auto* bar = persist->add_subcommand("barcode", "Interval barcode of the scale filtration");
        auto bfile = std::make_shared<std::string>();
        auto bmetric = std::make_shared<std::string>("euclidean");
        auto blabeled = std::make_shared<bool>(false);
        bar->add_option("cloud", *bfile, "CSV point cloud or metric JSON")->required();
        add_cloud_options(bar, bmetric, blabeled);
        bar->callback(run([&opt, bfile, bmetric, blabeled]() {
            const MetricSpace ms = load_cloud(*bfile, *blabeled, *bmetric);
            return emit(opt, barcode_to_json(pi0_barcode(ms)));
        }));

        auto* den = persist->add_subcommand("dendrogram", "Merge tree of the scale filtration");
        auto dfile = std::make_shared<std::string>();
        auto dmetric = std::make_shared<std::string>("euclidean");
        auto dlabeled = std::make_shared<bool>(false);
        auto newick = std::make_shared<bool>(false);
        den->add_option("cloud", *dfile)->required();
        add_cloud_options(den, dmetric, dlabeled);
        den->add_flag("--newick", *newick, "Emit a Newick-style string");
        den->callback(run([&opt, dfile, dmetric, dlabeled, newick]() {
            const MetricSpace ms = load_cloud(*dfile, *dlabeled, *dmetric);
            const MergeTree tree = dendrogram(ms);
            if (*newick) return emit(opt, json{{"newick", dendrogram_newick(tree, ms)}});
            return emit(opt, merge_tree_to_json(tree, ms));
        }));

        auto* comp = persist->add_subcommand("components", "Component map between two scales");
        auto cfile = std::make_shared<std::string>();
        auto metric = std::make_shared<std::string>("euclidean");
        auto labeled = std::make_shared<bool>(false);
        auto q = std::make_shared<double>(0), rr = std::make_shared<double>(0);
        comp->add_option("cloud", *cfile)->required();
        add_cloud_options(comp, metric, labeled);
        comp->add_option("--q", *q, "Source scale")->required();
        comp->add_option("--r", *rr, "Target scale")->required();
        comp->callback(run([&opt, cfile, q, rr, metric, labeled]() {
            const MetricSpace ms = load_cloud(*cfile, *labeled, *metric);
            const ComponentMap pm = persistent_components(ms, *q, *rr, opt.tol);
            auto classes_json = [&](const std::vector<std::vector<std::size_t>>& cls) {
                json out = json::array();
                for (const auto& c : cls) {
                    json names = json::array();
                    for (auto p : c) names.push_back(ms.labels()[p]);
                    out.push_back(std::move(names));
                }
                return out;
            };
            return emit(opt, json{{"q", json_number(*q)},
                                  {"r", json_number(*rr)},
                                  {"from", classes_json(pm.from_classes)},
                                  {"to", classes_json(pm.to_classes)},
                                  {"map", pm.onto}});
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const JsonError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return code;
}
