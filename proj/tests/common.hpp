#pragma once
#include <doctest.h>

#include "annulus/io.hpp"

namespace annulus::test {

inline const Model& m11() {
    static Model m = model_of(load_fixture(FIXTURE_DIR "/fixture-11.json"));
    return m;
}
inline const Model& m32() {
    static Model m = model_of(load_fixture(FIXTURE_DIR "/fixture-32.json"));
    return m;
}

inline Word w(const Model& m, const std::string& s) { return parse_word(m.P, s); }

}  // namespace annulus::test
