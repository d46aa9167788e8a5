#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umf {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class Format { Text, Records };

Format parse_format(std::string_view name);

struct Check {
    std::string id;
    bool pass;
    std::string detail;
};

/// Ordered checks plus key/value records. Every report carries its seed.
class Report {
public:
    explicit Report(std::string title, std::uint64_t seed = kDefaultSeed);

    const std::string& title() const noexcept { return title_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::vector<std::pair<std::string, std::string>>& records() const noexcept { return records_; }

    /// Returns `pass` so callers can chain on it.
    bool check(std::string id, bool pass, std::string detail = {});
    void record(std::string key, std::string value);
    void record(std::string key, long long value) { record(std::move(key), std::to_string(value)); }
    /// Appends another report's checks and records.
    void merge(const Report& other);

    bool ok() const noexcept;
    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept { return checks_.size() - passed(); }

    /// Text: a title line, `PASS/FAIL <id> <detail>` lines, `key: value` lines.
    /// Records: `key=value` lines, checks as `check.<id>=PASS|FAIL`, then counts.
    std::string render(Format format) const;

private:
    std::string title_;
    std::uint64_t seed_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::string>> records_;
};

}  // namespace umf
