#pragma once

#include "purefull/zoo.hpp"

// vendored nlohmann/json single header
#include "json.hpp"

namespace purefull {

using Json = nlohmann::ordered_json;

struct CupRequest {
    std::string form;
    int power = 1;
    int src_degree = 1;
    bool hlc = false;
};

struct ObstructionRequest {
    std::string alpha;     // form expression or named form
    std::string direction; // named direction
    int order = 1;
    ObstructionMode mode = ObstructionMode::Projected;
};

struct PositivityRequest {
    std::string form;
    std::optional<std::string> power_root;
    int trials = 32;
};

// One batch-analysis request. Every referenced name is resolved before any
// computation starts; identical configs (including the seed) produce
// byte-identical JSON reports.
struct AnalysisConfig {
    std::string target; // zoo name, presentation file, or manifold JSON file
    PresentationMode file_mode = PresentationMode::Real;
    std::vector<std::string> inline_coframe; // optional structure for file targets

    std::vector<std::string> structures; // empty: all structures of the entry
    std::vector<int> stages;             // pure/full stages to analyze
    std::vector<int> betti_degrees;      // empty: all 0..2n
    bool want_betti = true;

    std::vector<std::string> predicate_forms;
    std::optional<PositivityRequest> positivity;
    std::vector<CupRequest> cups;
    std::optional<std::string> curve;
    std::vector<GaussianRational> samples;
    std::optional<ObstructionRequest> obstruction_request;

    unsigned seed = 0;
};

struct RunReport {
    Json json;
    int exit_code = 0; // 0 ok, 1 mathematical error, 2 config/parse error
};

RunReport run_analysis(const AnalysisConfig& config);

std::string render_text(const Json& report);

// Catalog front ends.
Json zoo_list_json();
Json zoo_show_json(const std::string& name);
RunReport zoo_verify_report();

// Catalog <-> JSON (the same schema accepted for custom manifolds).
Json zoo_entry_to_json(const ZooEntry& entry, bool with_expectations);
ZooEntry manifold_from_json(const Json& j);

// Exact scalars in JSON: integers as numbers, other rationals as "p/q",
// Gaussian values as "a/b+c/d i".
Json json_scalar(const GaussianRational& z);

// CLI-friendly Gaussian literals ("1/2", "i/4", "-3i", "1+2i").
GaussianRational parse_gaussian_literal(const std::string& text);

} // namespace purefull
