#include "semiribbon/map_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "semiribbon/errors.hpp"
#include "semiribbon/fixtures.hpp"

namespace semiribbon {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidMapError("parse_error", what, {what}); }

Dart dart_value(const nlohmann::json& v, std::size_t n, const char* where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(where) + ": dart ids are non-negative integers");
    auto d = v.get<unsigned long long>();
    if (d >= n) bad(std::string(where) + ": dart " + std::to_string(d) + " out of range");
    return static_cast<Dart>(d);
}

unsigned natural(const nlohmann::json& v, const char* where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(where) + " must be a non-negative integer");
    return v.get<unsigned>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array()) bad(std::string("field '") + key + "' must be a list");
    return v;
}

std::map<Dart, std::string> label_block(const nlohmann::json& j, const char* key, std::size_t n) {
    std::map<Dart, std::string> out;
    if (!j.contains(key)) return out;
    const auto& obj = j.at(key);
    if (!obj.is_object()) bad(std::string("labels.") + key + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::size_t pos = 0;
        unsigned long d = 0;
        try {
            d = std::stoul(it.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != it.key().size() || it.key().empty()) bad("label key '" + it.key() + "' is not a dart id");
        if (d >= n) bad("label key " + it.key() + " out of range");
        if (!it.value().is_string()) bad("label values must be strings");
        out[static_cast<Dart>(d)] = it.value().get<std::string>();
    }
    return out;
}

}  // namespace

OrientedMap map_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known = {"dart_count", "alpha", "sigma", "forward", "face_decorations", "labels"};
    if (!j.is_object()) bad("map must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) bad("unknown field '" + it.key() + "'");

    if (!j.contains("dart_count")) bad("missing field 'dart_count'");
    const std::size_t n = natural(j.at("dart_count"), "dart_count");

    std::vector<Dart> alpha(n, kNoDart), sigma(n, kNoDart);
    std::vector<bool> fwd(n, false);

    for (const auto& pair : array_field(j, "alpha")) {
        if (!pair.is_array() || pair.size() != 2) bad("alpha entries are 2-element lists");
        Dart a = dart_value(pair[0], n, "alpha"), b = dart_value(pair[1], n, "alpha");
        if (alpha[a] != kNoDart || (a != b && alpha[b] != kNoDart))
            bad("dart " + std::to_string(alpha[a] != kNoDart ? a : b) + " is in two alpha pairs");
        alpha[a] = b;
        alpha[b] = a;
    }
    for (Dart d = 0; d < n; ++d)
        if (alpha[d] == kNoDart) bad("dart " + std::to_string(d) + " is in no alpha pair");

    for (const auto& cyc : array_field(j, "sigma")) {
        if (!cyc.is_array() || cyc.empty()) bad("sigma entries are non-empty cycles");
        std::vector<Dart> c;
        for (const auto& v : cyc) c.push_back(dart_value(v, n, "sigma"));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sigma[c[i]] != kNoDart) bad("dart " + std::to_string(c[i]) + " is in two sigma cycles");
            sigma[c[i]] = c[(i + 1) % c.size()];
        }
    }
    for (Dart d = 0; d < n; ++d)
        if (sigma[d] == kNoDart) bad("dart " + std::to_string(d) + " is in no sigma cycle");

    for (const auto& v : array_field(j, "forward")) {
        Dart d = dart_value(v, n, "forward");
        if (fwd[d]) bad("dart " + std::to_string(d) + " listed twice in forward");
        fwd[d] = true;
    }

    std::vector<FaceDecoration> decos;
    if (j.contains("face_decorations")) {
        for (const auto& f : array_field(j, "face_decorations")) {
            if (!f.is_object()) bad("face_decorations entries are objects");
            for (auto it = f.begin(); it != f.end(); ++it)
                if (it.key() != "rep_dart" && it.key() != "extra_genus" && it.key() != "punctures")
                    bad("unknown decoration field '" + it.key() + "'");
            if (!f.contains("rep_dart")) bad("decoration without rep_dart");
            FaceDecoration deco;
            deco.rep = dart_value(f.at("rep_dart"), n, "rep_dart");
            if (f.contains("extra_genus")) deco.extra_genus = natural(f.at("extra_genus"), "extra_genus");
            if (f.contains("punctures")) deco.punctures = natural(f.at("punctures"), "punctures");
            decos.push_back(deco);
        }
    }

    Labels labels;
    if (j.contains("labels")) {
        const auto& l = j.at("labels");
        if (!l.is_object()) bad("labels must be an object");
        for (auto it = l.begin(); it != l.end(); ++it)
            if (it.key() != "vertices" && it.key() != "edges") bad("unknown labels field '" + it.key() + "'");
        labels.vertices = label_block(l, "vertices", n);
        labels.edges = label_block(l, "edges", n);
    }
    return OrientedMap(std::move(alpha), std::move(sigma), std::move(fwd), std::move(decos), std::move(labels));
}

OrientedMap parse_map(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("malformed input: ") + e.what());
    }
    return map_from_json(j);
}

Json map_to_json(const OrientedMap& map) {
    Json j;
    j["dart_count"] = map.dart_count();
    Json alpha = Json::array();
    for (Dart d = 0; d < map.dart_count(); ++d)
        if (d <= map.alpha(d)) alpha.push_back({d, map.alpha(d)});
    j["alpha"] = alpha;
    Json sigma = Json::array();
    for (const auto& v : vertices(map)) sigma.push_back(v);
    j["sigma"] = sigma;
    Json fwd = Json::array();
    for (Dart d = 0; d < map.dart_count(); ++d)
        if (map.is_forward(d)) fwd.push_back(d);
    j["forward"] = fwd;
    Json decos = Json::array();
    for (const auto& f : map.decorations())
        decos.push_back(Json{{"rep_dart", f.rep}, {"extra_genus", f.extra_genus}, {"punctures", f.punctures}});
    j["face_decorations"] = decos;
    if (!map.labels().empty()) {
        Json l = Json::object();
        Json vs = Json::object(), es = Json::object();
        for (const auto& [d, s] : map.labels().vertices) vs[std::to_string(d)] = s;
        for (const auto& [d, s] : map.labels().edges) es[std::to_string(d)] = s;
        if (!vs.empty()) l["vertices"] = vs;
        if (!es.empty()) l["edges"] = es;
        j["labels"] = l;
    }
    return j;
}

std::string print_map(const OrientedMap& map) { return map_to_json(map).dump(); }

OrientedMap load_map(const std::string& source) {
    const std::string prefix = "fixture:";
    if (source.rfind(prefix, 0) == 0) {
        auto m = fixtures::by_name(source.substr(prefix.size()));
        if (!m) throw InvalidMapError("unknown_fixture", "no fixture named '" + source.substr(prefix.size()) + "'");
        return *m;
    }
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(source);
        if (!in) throw InvalidMapError("unreadable_input", "cannot open '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_map(text);
}

}  // namespace semiribbon
