#include "umf/report.hpp"

#include <sstream>

#include "umf/error.hpp"

namespace umf {

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "records") return Format::Records;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (expected text or records)");
}

Report::Report(std::string title, std::uint64_t seed) : title_(std::move(title)), seed_(seed) {}

bool Report::check(std::string id, bool pass, std::string detail) {
    checks_.push_back({std::move(id), pass, std::move(detail)});
    return pass;
}

void Report::record(std::string key, std::string value) { records_.emplace_back(std::move(key), std::move(value)); }

void Report::merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t Report::passed() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.pass;
    return n;
}

bool Report::ok() const noexcept { return failed() == 0; }

std::string Report::render(Format format) const {
    std::ostringstream os;
    if (format == Format::Text) {
        os << title_ << " (seed " << seed_ << ")\n";
        for (const auto& c : checks_) {
            os << (c.pass ? "PASS " : "FAIL ") << c.id;
            if (!c.detail.empty()) os << ' ' << c.detail;
            os << '\n';
        }
        for (const auto& [k, v] : records_) os << k << ": " << v << '\n';
        if (!checks_.empty()) os << passed() << " passed, " << failed() << " failed\n";
    } else {
        os << "seed=" << seed_ << '\n';
        for (const auto& [k, v] : records_) os << k << '=' << v << '\n';
        for (const auto& c : checks_) os << "check." << c.id << '=' << (c.pass ? "PASS" : "FAIL") << '\n';
        if (!checks_.empty()) os << "passed=" << passed() << "\nfailed=" << failed() << '\n';
    }
    return os.str();
}

}  // namespace umf
