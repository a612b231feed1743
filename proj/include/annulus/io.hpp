#pragma once
#include <json.hpp>
#include <string>

#include "annulus/strings.hpp"

namespace annulus {

using json = nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Arc arc_from_json(const json& j);
json arc_to_json(const Arc& a);

struct Fixture {
    Surface surf;
    std::vector<Arc> arcs;
    std::vector<NameOverride> names;
};

Fixture fixture_from_json(const json& j);
Fixture load_fixture(const std::string& path);
Model model_of(const Fixture& f);

json presentation_to_json(const Presentation& P);

}  // namespace annulus
