#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "annulus/field.hpp"
#include "annulus/strings.hpp"

namespace annulus {

struct SuiteResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    std::vector<std::string> failures;  // first few offending cases
};

// Crossing predicate vs the oracle (first result) and the extension witnesses (second).
std::vector<SuiteResult> suite_extensions(const Model& m, int length_bound, const std::vector<fe>& lambdas);
// Injective dimension criterion over A and over the quotients of enumerated asymptotic triangulations.
SuiteResult suite_id_gentle(const std::vector<const Model*>& models, int length_bound, long winding_bound,
                            int min_quotients);
SuiteResult suite_band_dims(const Model& m, const std::vector<fe>& lambdas, int max_n);
SuiteResult suite_annihilator(const Model& m, int length_bound, int family_size, long winding_bound);
SuiteResult suite_completion(const Model& m, int samples, long winding_bound, std::uint32_t seed);
SuiteResult suite_cosilting(const Model& m, long winding_bound, int test_dim);
SuiteResult suite_kcomplex(const Model& m, int map_length, int word_length, int depth, const std::vector<fe>& lambdas);
// Facts specific to the shipped (3,2) fixture.
SuiteResult suite_fixture_facts(const Model& m);

std::string summary_line(const SuiteResult& r);

}  // namespace annulus
