#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "dhh/instances.hpp"
#include "dhh/spectral.hpp"

namespace dhh::cli {

using json = nlohmann::ordered_json;

struct Options {
    std::uint64_t seed = 0;
    std::uint32_t trials = 0;
    std::uint32_t order = 2;
    std::uint32_t degree = 2;
};

struct InstanceConfig {
    instances::Instance instance;
    std::uint32_t max_degree = 4;
    Options options;
};

// Parses and validates an instance document; names the first violated axiom
// on rejection. A non-prime modulus is a ParseError.
InstanceConfig parse_config(const json& doc);
InstanceConfig parse_config_file(const std::string& path);
InstanceConfig config_from_preset(const std::string& name, std::uint32_t max_degree);

json instance_to_json(const instances::Instance& inst);
json matrix_to_json(const linfp::Matrix& m);
linfp::Matrix matrix_from_json(const json& j, std::uint32_t p, const char* what);

json transcript_to_json(const spectral::SequenceTranscript& t);

// Full per-instance report: dims table plus SES/LES transcripts. Timing is
// deliberately not part of the machine report so equal seeds give equal bytes.
struct Report {
    json machine;
    std::string human;
    bool all_passed = true;
};
Report cohomology_report(const InstanceConfig& cfg);

}  // namespace dhh::cli
