#pragma once

#include <string>

#include "json.hpp"

namespace serrewt {

using Json = nlohmann::ordered_json;

// subset of JSON Schema: type, enum, required, properties, additionalProperties, items,
// minItems, maxItems, minimum, maximum. Throws SchemaError naming the offending path.
void validate(const nlohmann::json& schema, const nlohmann::json& doc, const std::string& path = "$");
nlohmann::json load_schema(const std::string& dir, const std::string& name);

struct RunOptions {
    std::string schema_dir;
    unsigned jobs = 1;
    // overrides the job's seed when set
    bool seed_override = false;
    std::uint64_t seed = 0;
};

// validates the job against the shipped schemas and runs it; the report is deterministic in (job, seed)
Json run_job(const nlohmann::json& job, const RunOptions& opt);

// 0 success, 2 SchemaError, 3 DepthError, 4 VerificationFailure, 5 any other library error
int exit_code_for(const std::exception& e);

} // namespace serrewt
