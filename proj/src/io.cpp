#include "annulus/io.hpp"

#include <fstream>

namespace annulus {

namespace {

Boundary boundary_from(const json& j) {
    std::string b = j.at("boundary").get<std::string>();
    if (b == "outer") return Boundary::Outer;
    if (b == "inner") return Boundary::Inner;
    throw InputError("boundary must be outer or inner, got " + b);
}

}  // namespace

Arc arc_from_json(const json& j) {
    try {
        std::string t = j.at("type").get<std::string>();
        if (t == "bridging") return Arc::bridging(j.at("outer").get<long>(), j.at("inner").get<long>());
        if (t == "peripheral")
            return Arc::peripheral(boundary_from(j), j.at("from").get<long>(), j.at("to").get<long>());
        if (t == "asymptotic") {
            std::string sp = j.at("spiral").get<std::string>();
            if (sp != "cw" && sp != "acw") throw InputError("spiral must be cw or acw");
            return Arc::asymptotic(boundary_from(j), j.at("index").get<long>(),
                                   sp == "acw" ? Spiral::Anticlockwise : Spiral::Clockwise);
        }
        if (t == "band") return Arc::band();
        throw InputError("unknown arc type " + t);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed arc: ") + e.what());
    }
}

json arc_to_json(const Arc& a) {
    const char* bd = a.boundary == Boundary::Outer ? "outer" : "inner";
    switch (a.kind) {
        case Arc::Kind::Bridging: return {{"type", "bridging"}, {"outer", a.a}, {"inner", a.b}};
        case Arc::Kind::Peripheral: return {{"type", "peripheral"}, {"boundary", bd}, {"from", a.a}, {"to", a.b}};
        case Arc::Kind::Asymptotic:
            return {{"type", "asymptotic"},
                    {"boundary", bd},
                    {"index", a.a},
                    {"spiral", a.spiral == Spiral::Anticlockwise ? "acw" : "cw"}};
        case Arc::Kind::Band: return {{"type", "band"}};
    }
    return {};
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    try {
        f.surf.p = j.at("p").get<int>();
        f.surf.q = j.at("q").get<int>();
        for (auto& a : j.at("arcs")) f.arcs.push_back(arc_from_json(a));
        if (j.contains("names"))
            for (auto& n : j.at("names"))
                f.names.push_back({n.at("src").get<int>(), n.at("tgt").get<int>(), n.value("tri", -1),
                                   n.at("name").get<std::string>()});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed triangulation file: ") + e.what());
    }
    if (f.surf.p < 1 || f.surf.q < 1) throw InputError("p and q must be positive");
    return f;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return fixture_from_json(j);
}

Model model_of(const Fixture& f) { return make_model(validate_triangulation(f.surf, f.arcs), f.names); }

json presentation_to_json(const Presentation& P) {
    json j;
    j["vertices"] = json::array();
    for (int i = 0; i < P.n; ++i)
        if (P.v_alive(i)) j["vertices"].push_back(i + 1);
    j["arrows"] = json::array();
    for (int a = 0; a < (int)P.arrows.size(); ++a)
        if (P.a_alive(a))
            j["arrows"].push_back({{"name", P.arrows[a].name}, {"src", P.arrows[a].src + 1}, {"tgt", P.arrows[a].tgt + 1}});
    j["relations"] = json::array();
    for (auto [b, a] : P.rel)
        if (P.a_alive(a) && P.a_alive(b)) j["relations"].push_back({P.arrows[b].name, P.arrows[a].name});
    return j;
}

}  // namespace annulus
