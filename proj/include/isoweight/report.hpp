#ifndef ISOWEIGHT_REPORT_HPP
#define ISOWEIGHT_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>

namespace isoweight {

/// Machine-readable record of one verification sweep. Serialises to JSON
/// with alphabetically ordered keys; two runs with identical inputs and
/// seed produce byte-identical documents apart from the timestamp.
struct VerificationReport {
    std::string    kind;
    nlohmann::json params         = nlohmann::json::object();
    long           cases_run      = 0;
    double         worst_gap      = 0.0;
    nlohmann::json worst_location = nlohmann::json::object();
    bool           passed         = false;
    std::uint64_t  seed           = 0;
    nlohmann::json tolerances     = nlohmann::json::object();
    std::string    timestamp;
};

nlohmann::json to_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);
std::string iso_timestamp_now();

} // namespace isoweight

#endif
