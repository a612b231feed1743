#include <iostream>

#include "annulus/io.hpp"
#include "annulus/suites.hpp"

using namespace annulus;

namespace {

SuiteResult merge(const std::string& id, const std::vector<std::pair<std::string, SuiteResult>>& parts) {
    SuiteResult r{id, true, "", 0, {}};
    for (auto& [name, p] : parts) {
        r.pass = r.pass && p.pass;
        r.seconds += p.seconds;
        r.detail += (r.detail.empty() ? "" : "; ") + name + ": " + p.detail;
        for (auto& f : p.failures) r.failures.push_back(name + ": " + f);
    }
    return r;
}

}  // namespace

int main() {
    set_field(7);
    Model m11 = model_of(load_fixture(FIXTURE_DIR "/fixture-11.json"));
    Model m32 = model_of(load_fixture(FIXTURE_DIR "/fixture-32.json"));
    std::vector<std::pair<std::string, const Model*>> both{{"(1,1)", &m11}, {"(3,2)", &m32}};
    std::vector<SuiteResult> out;

    std::vector<std::pair<std::string, SuiteResult>> a1, a2;
    for (auto& [n, m] : both) {
        auto r = suite_extensions(*m, 8, {1, 2, 3});
        a1.push_back({n, r[0]});
        a2.push_back({n, r[1]});
    }
    auto A1 = merge("A1", a1);
    if (A1.seconds >= 300) A1.pass = false, A1.failures.push_back("runtime over 5 minutes");
    out.push_back(A1);
    out.push_back(merge("A2", a2));

    auto A3 = suite_id_gentle({&m11, &m32}, 8, 2, 10);
    A3.id = "A3";
    out.push_back(A3);

    std::vector<std::pair<std::string, SuiteResult>> a4, a5, a6, a8;
    for (auto& [n, m] : both) {
        a4.push_back({n, suite_band_dims(*m, {1, 2}, 3)});
        a5.push_back({n, suite_annihilator(*m, 8, 4, 2)});
        a6.push_back({n, suite_completion(*m, 100, 3, 20240601)});
        a8.push_back({n, suite_kcomplex(*m, 6, 8, 3, {1, 2, 3})});
    }
    out.push_back(merge("A4", a4));
    out.push_back(merge("A5", a5));
    out.push_back(merge("A6", a6));
    auto A7 = suite_cosilting(m11, 3, 6);
    A7.id = "A7";
    out.push_back(A7);
    out.push_back(merge("A8", a8));
    auto A9 = suite_fixture_facts(m32);
    A9.id = "A9";
    out.push_back(A9);

    bool ok = true;
    for (auto& r : out) {
        std::cout << summary_line(r) << "\n";
        for (auto& f : r.failures) std::cout << "      " << f << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
