#include "isoweight/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace isoweight {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["kind"]           = r.kind;
    j["params"]         = r.params;
    j["cases_run"]      = r.cases_run;
    j["worst_gap"]      = r.worst_gap;
    j["worst_location"] = r.worst_location;
    j["passed"]         = r.passed;
    j["seed"]           = r.seed;
    j["tolerances"]     = r.tolerances;
    j["timestamp"]      = r.timestamp;
    return j;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.kind
       << "  cases=" << r.cases_run << "  worst_gap=" << r.worst_gap << "\n";
    if (!r.worst_location.empty())
        os << "  worst at " << r.worst_location.dump() << "\n";
    os << "  params " << r.params.dump() << "  seed " << r.seed
       << "  tolerances " << r.tolerances.dump() << "\n";
    return os.str();
}

std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace isoweight
