#pragma once

#include <cstdint>
#include <string>

#include "foci/manifest.hpp"

namespace foci {

// FNV-1a 64-bit over the canonical input text; stable across runs and
// platforms, used as the input digest of a ResultRecord.
std::uint64_t fnv1a64(const std::string& text);
std::string digest_hex(const std::string& text);

// The CLI's uniform output envelope.  Identical inputs produce identical
// value/trace payloads; timing is the only non-reproducible field and can be
// omitted for byte-stable comparisons.
struct ResultRecord {
    std::string digest;
    std::string operation;
    Json payload;
    double timing_ms = 0;
};

Json record_to_json(const ResultRecord& r, bool include_timing = true);

}  // namespace foci
