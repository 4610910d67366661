#pragma once

#include <string>

#include "avrfopid/frac_ops.hpp"
#include "avrfopid/nsga2.hpp"

namespace avrfopid {

/// Everything an optimization run needs, serializable as one JSON document.
/// Unknown keys are rejected so that a typo cannot silently fall back to a
/// default.
struct RunConfig {
    Nsga2Config nsga2;          // includes controller kind, source, topology
    AvrParams plant;
    OustaloupConfig oustaloup;
    std::string output_dir = "out";

    void validate() const;
};

RunConfig run_config_from_json_text(const std::string& text);
RunConfig run_config_from_file(const std::string& path);
std::string run_config_to_json_text(const RunConfig& cfg);

std::string to_string(LoopTopology t);
LoopTopology topology_from_string(const std::string& s);

}  // namespace avrfopid
