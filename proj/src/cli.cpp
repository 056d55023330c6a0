#include "semiribbon/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "semiribbon/canonical.hpp"
#include "semiribbon/classify.hpp"
#include "semiribbon/enumerate.hpp"
#include "semiribbon/errors.hpp"
#include "semiribbon/euler.hpp"
#include "semiribbon/map_io.hpp"
#include "semiribbon/ribbon.hpp"
#include "semiribbon/surgery.hpp"

namespace semiribbon::cli {

namespace {

Json genus_json(const std::vector<ComponentGenus>& gs) {
    Json a = Json::array();
    for (const auto& g : gs)
        a.push_back(Json{{"component", g.rep},
                         {"vertices", g.vertices},
                         {"edges", g.edges},
                         {"faces", g.faces},
                         {"map_genus", g.map_genus},
                         {"genus", g.genus},
                         {"punctures", g.punctures}});
    return a;
}

Json report_json(const SurgeryReport& r) {
    return Json{{"components_before", r.components_before},
                {"components_after", r.components_after},
                {"genus_before", genus_json(r.genus_before)},
                {"genus_after", genus_json(r.genus_after)},
                {"new_punctures", r.new_punctures},
                {"result", map_to_json(r.result)}};
}

Json decomposition_json(const CactusDecomposition& d) {
    Json disks = Json::array();
    for (std::size_t i = 0; i < d.disks.size(); ++i)
        disks.push_back(Json{{"edges", d.disks[i].edges}, {"face", d.disk_faces[i]}});
    Json shared = Json::array();
    for (const auto& s : d.shared_vertices) shared.push_back(Json{{"vertex", s.vertex}, {"disks", s.disks}});
    Json summands = Json::array();
    for (const auto& f : d.summand_faces)
        summands.push_back(Json{{"rep_dart", f.rep}, {"extra_genus", f.extra_genus}, {"punctures", f.punctures}});
    return Json{{"orientation", to_string(d.orientation)},
                {"disks", disks},
                {"shared_vertices", shared},
                {"summand_faces", summands}};
}

std::string read_text_arg(const std::string& value) {
    if (!value.empty() && value.front() == '@') {
        std::ifstream in(value.substr(1));
        if (!in) throw InvalidMapError("unreadable_input", "cannot open '" + value.substr(1) + "'");
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return value;
}

std::string kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Contradiction: return "contradiction";
    }
    return "?";
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Oriented graphs on surfaces: ribbons, surgery, Eulerian paths, cacti", "semiribbon"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string input = "-";
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "map file, '-' for stdin, or fixture:NAME")->required();
        return sub;
    };

    auto* validate_cmd = with_input(app.add_subcommand("validate", "check the map invariants"));
    auto* info_cmd = with_input(app.add_subcommand("info", "vertex/edge/face counts and genus"));
    auto* hyper_cmd = with_input(app.add_subcommand("hyperbolic", "alternation test"));

    bool trace_op = false;
    auto* trace_cmd = with_input(app.add_subcommand("trace", "smooth boundary orbits"));
    trace_cmd->add_flag("--op", trace_op, "trace the reversed orientation");

    auto* semi_cmd = with_input(app.add_subcommand("semi-ribbon", "semi-ribbon status"));
    auto* classify_cmd = with_input(app.add_subcommand("classify", "cactus decomposition"));

    std::vector<Dart> cycle;
    auto* cut_cmd = with_input(app.add_subcommand("cut", "cut along a simple directed cycle"));
    cut_cmd->add_option("--cycle", cycle, "forward darts of the cycle")->delimiter(',')->required();

    Dart face_a = 0, face_b = 0;
    std::vector<std::string> matching;
    auto* paste_cmd = with_input(app.add_subcommand("paste", "glue two hole faces"));
    paste_cmd->add_option("--a", face_a, "first hole face")->required();
    paste_cmd->add_option("--b", face_b, "second hole face")->required();
    paste_cmd->add_option("--match", matching, "pairs A:B of forward darts")->delimiter(',');

    Dart face = 0;
    auto* shrink_cmd = with_input(app.add_subcommand("shrink", "shrink an empty disk face"));
    shrink_cmd->add_option("--face", face, "face dart")->required();

    auto* minimize_cmd = with_input(app.add_subcommand("minimize", "suppress 2-valent vertices"));

    Dart vertex = 0;
    std::vector<Dart> sectors;
    auto* detach_cmd = with_input(app.add_subcommand("detach", "split a vertex at two non-oriented sectors"));
    detach_cmd->add_option("--vertex", vertex, "any dart of the vertex")->required();
    detach_cmd->add_option("--sectors", sectors, "two sector darts")->delimiter(',')->expected(2)->required();

    std::optional<Dart> start;
    std::size_t limit = 1000;
    auto* ecount_cmd = with_input(app.add_subcommand("euler-count", "BEST count of Eulerian circuits"));
    ecount_cmd->add_option("--start", start, "forward dart of the first edge");
    auto* elist_cmd = with_input(app.add_subcommand("euler-list", "list Eulerian circuits"));
    elist_cmd->add_option("--start", start, "forward dart of the first edge");
    elist_cmd->add_option("--limit", limit, "maximum number of circuits");

    std::string spec_text;
    auto* cactus_cmd = app.add_subcommand("cactus", "build a cactus map from a tree spec");
    cactus_cmd->add_option("--spec", spec_text, "spec object or @file")->required();

    EnumerationOptions eopts;
    std::optional<unsigned> gmin, gmax;
    auto* enum_cmd = app.add_subcommand("enumerate", "all maps up to isomorphism, one per line");
    enum_cmd->add_option("--max-edges", eopts.max_edges, "largest edge count")->required();
    enum_cmd->add_option("--min-edges", eopts.min_edges, "smallest edge count");
    enum_cmd->add_flag("--hyperbolic-only", eopts.hyperbolic_only, "only alternating maps");
    enum_cmd->add_option("--genus-min", gmin, "lowest genus");
    enum_cmd->add_option("--genus-max", gmax, "highest genus");
    enum_cmd->add_option("--bound", eopts.bound, "edge bound");

    std::size_t verify_edges = 3, verify_bound = kDefaultEdgeBound;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of the classification");
    verify_cmd->add_option("--max-edges", verify_edges, "largest edge count");
    verify_cmd->add_option("--bound", verify_bound, "edge bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(out, Json{{"error", Json{{"kind", "usage"}, {"reason", "usage"}, {"message", e.what()}}}});
        err << app.help();
        return 1;
    }

    try {
        if (validate_cmd->parsed()) {
            auto m = load_map(input);
            auto r = validate(m);
            emit(out, Json{{"valid", r.ok()}, {"violations", r.violations}});
            return r.ok() ? 0 : 1;
        }
        if (cactus_cmd->parsed()) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_text_arg(spec_text));
            } catch (const nlohmann::json::parse_error& e) {
                throw InvalidMapError("bad_cactus_spec", std::string("malformed spec: ") + e.what());
            }
            emit(out, map_to_json(generate_cactus(cactus_spec_from_json(j))));
            return 0;
        }
        if (enum_cmd->parsed()) {
            eopts.genus_min = gmin;
            eopts.genus_max = gmax;
            enumerate_maps(eopts, [&](const OrientedMap& m) { emit(out, map_to_json(m)); });
            return 0;
        }
        if (verify_cmd->parsed()) {
            auto rep = verify_theorem(verify_edges, verify_bound);
            Json table = Json::array();
            for (const auto& [key, count] : rep.table)
                table.push_back(Json{{"edges", std::get<0>(key)},
                                     {"genus", std::get<1>(key)},
                                     {"status", std::get<2>(key)},
                                     {"count", count}});
            Json vs = Json::array();
            for (const auto& v : rep.violations)
                vs.push_back(Json{{"kind", v.kind}, {"detail", v.detail}, {"map", Json::parse(v.map)}});
            emit(out, Json{{"violations", rep.violations.size()},
                           {"max_edges", verify_edges},
                           {"maps", rep.maps},
                           {"hyperbolic", rep.hyperbolic},
                           {"non_hyperbolic", rep.non_hyperbolic},
                           {"semi_ribbon", rep.semi_ribbon},
                           {"table", table},
                           {"violation_list", vs}});
            return rep.violations.empty() ? 0 : 3;
        }

        auto m = load_map(input);
        require_valid(m);

        if (info_cmd->parsed()) {
            auto gs = genus(m);
            unsigned p = 0;
            for (const auto& g : gs) p += g.punctures;
            emit(out, Json{{"vertices", vertices(m).size()},
                           {"edges", m.edge_count()},
                           {"faces", faces(m).size()},
                           {"genus", total_genus(gs)},
                           {"components", gs.size()},
                           {"punctures", p},
                           {"per_component", genus_json(gs)}});
        } else if (hyper_cmd->parsed()) {
            auto h = is_hyperbolic(m);
            emit(out, Json{{"hyperbolic", h.hyperbolic},
                           {"violating_vertex", h.violating_vertex ? Json(*h.violating_vertex) : Json(nullptr)}});
        } else if (trace_cmd->parsed()) {
            auto t = trace_smooth_boundary(m, trace_op ? Orientation::Sop : Orientation::S);
            emit(out, Json{{"orientation", to_string(t.orientation_used)}, {"count", t.orbits.size()}, {"orbits", t.orbits}});
        } else if (semi_cmd->parsed()) {
            auto r = has_semi_ribbon(m);
            Json j{{"status", to_string(r.status)}};
            if (r.trace) {
                j["orbits"] = r.trace->orbits.size();
                j["orbits_op"] = r.trace_op->orbits.size();
            } else {
                j["violating_vertex"] = *r.violating_vertex;
            }
            if (r.semi_ribbon()) j["eulerian_path"] = r.witness()->orbits.front();
            emit(out, j);
        } else if (classify_cmd->parsed()) {
            auto r = classify(m);
            Json log = Json::array();
            for (const auto& s : r.surgery_log) {
                Json step{{"kind", s.kind == SurgeryStep::Kind::Cut ? "cut" : "shrink"}, {"darts", s.darts}};
                if (s.kind == SurgeryStep::Kind::Shrink) step["face"] = s.face;
                else step["discarded"] = s.discarded_left ? "left" : "right";
                step["original_edges"] = s.original_edges;
                log.push_back(step);
            }
            emit(out, Json{{"status", to_string(r.status)},
                           {"decomposition", r.decomposition ? decomposition_json(*r.decomposition) : Json(nullptr)},
                           {"surgery_log", log},
                           {"contradictions", r.contradictions}});
            return r.contradiction() ? 3 : 0;
        } else if (cut_cmd->parsed()) {
            auto r = cut_along_cycle(m, DirectedCycle{cycle});
            auto j = report_json(r);
            j["separating"] = r.components_after > r.components_before;
            emit(out, j);
        } else if (paste_cmd->parsed()) {
            std::vector<std::pair<Dart, Dart>> pairs;
            for (const auto& s : matching) {
                auto colon = s.find(':');
                if (colon == std::string::npos) throw InvalidMapError("bad_matching", "matching entries look like A:B");
                try {
                    pairs.emplace_back(static_cast<Dart>(std::stoul(s.substr(0, colon))),
                                       static_cast<Dart>(std::stoul(s.substr(colon + 1))));
                } catch (const std::exception&) {
                    throw InvalidMapError("bad_matching", "matching entries look like A:B");
                }
            }
            emit(out, report_json(paste(m, face_a, face_b, pairs)));
        } else if (shrink_cmd->parsed()) {
            auto r = shrink_disk_face(m, face);
            if (r.empty()) {
                const auto& tok = std::get<EmptyGraphOnSphere>(r.result);
                emit(out, Json{{"empty", true}, {"extra_genus", tok.extra_genus}, {"punctures", tok.punctures}});
            } else {
                emit(out, Json{{"empty", false}, {"boundary", r.boundary}, {"result", map_to_json(r.map())}});
            }
        } else if (minimize_cmd->parsed()) {
            auto r = minimize_report(m);
            emit(out, Json{{"suppressed", r.suppressed}, {"result", map_to_json(r.result)}});
        } else if (detach_cmd->parsed()) {
            emit(out, Json{{"result", map_to_json(detach(m, vertex, sectors[0], sectors[1]))}});
        } else if (ecount_cmd->parsed() || elist_cmd->parsed()) {
            auto g = DirectedGraphView::from_map(m);
            std::size_t e0 = start ? g.edge_of_dart(*start) : 0;
            if (ecount_cmd->parsed()) {
                if (!is_eulerian(g)) throw PreconditionError("not_eulerian", "graph is not Eulerian");
                auto count = count_eulerian_circuits_best(g, e0);
                emit(out, Json{{"start", g.edge_dart[e0]},
                               {"arborescences", count_arborescences(g, g.tail[e0]).str()},
                               {"count", count.str()}});
            } else {
                auto en = enumerate_eulerian_circuits(g, e0, limit);
                for (const auto& c : en.circuits) {
                    std::vector<Dart> ds;
                    for (auto i : c) ds.push_back(g.edge_dart[i]);
                    emit(out, Json{{"circuit", ds}});
                }
                emit(out, Json{{"count", en.count}, {"truncated", en.truncated}});
            }
        }
        return 0;
    } catch (const InvalidMapError& e) {
        Json j{{"kind", kind_name(e.kind())}, {"reason", e.reason()}, {"message", e.what()}};
        if (!e.violations().empty()) j["violations"] = e.violations();
        emit(out, Json{{"error", j}});
        return static_cast<int>(e.kind());
    } catch (const Error& e) {
        emit(out, Json{{"error", Json{{"kind", kind_name(e.kind())}, {"reason", e.reason()}, {"message", e.what()}}}});
        return static_cast<int>(e.kind());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"semiribbon"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace semiribbon::cli
