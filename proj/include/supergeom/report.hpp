#ifndef SUPERGEOM_REPORT_HPP
#define SUPERGEOM_REPORT_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "supergeom/models.hpp"

namespace sg {

inline constexpr const char* kEngineVersion = "0.1.0";

// Deterministic machine report for one task.
struct Report {
    std::string task;
    std::string status = "pass";  // pass | fail | truncated
    nlohmann::json results = nlohmann::json::object();
    std::string witness;
    long long ms = 0;

    nlohmann::json to_json() const;
};

// worker count from SUPERGEOM_WORKERS (default 1)
int worker_count();
// deterministic index-parallel loop (results must be written to preallocated slots)
void parallel_for_index(int n, const std::function<void(int)>& body);

// model file input/output
Model load_model_file(const std::string& path);
nlohmann::json model_to_json(const Model& m);

// graded LSA export/import as sparse (i, j, k, value) bracket records
nlohmann::json lsa_to_json(const GradedLSA& L);
GradedLSA lsa_from_json(const nlohmann::json& j);

// acceptance suite: prints one pass/fail line per criterion, returns the
// number of failed criteria; with stop_on_failure the suite aborts at the
// first violated criterion after printing its witness
int run_acceptance(std::ostream& os, bool stop_on_failure = false);

}  // namespace sg

#endif
