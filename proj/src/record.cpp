#include "foci/record.hpp"

#include <iomanip>
#include <sstream>

namespace foci {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& text) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(text);
    return out.str();
}

Json record_to_json(const ResultRecord& r, bool include_timing) {
    Json j;
    j["digest"] = r.digest;
    j["operation"] = r.operation;
    j["result"] = r.payload;
    if (include_timing) j["timing_ms"] = r.timing_ms;
    return j;
}

}  // namespace foci
