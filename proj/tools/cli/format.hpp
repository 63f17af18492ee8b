#pragma once

// Locale-independent number formatting shared by CSV and JSON writers.
// Every emitted float carries 12 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

namespace flexcool::cli {

inline constexpr int kSignificantDigits = 12;

/// "%.12g"-style text with '.' as decimal separator; "nan", "inf", "-inf".
[[nodiscard]] std::string format_number(double value);

/// value rounded to 12 significant digits (non-finite values pass through).
[[nodiscard]] double round_significant(double value);

/// JSON number rounded to 12 significant digits; null for non-finite values.
[[nodiscard]] nlohmann::json json_number(double value);

/// Single-line JSON with sorted keys.
[[nodiscard]] std::string canonical_json(const nlohmann::json& j);

/// Minimal CSV builder: `# resolved-config:` line, header, rows, LF endings.
class CsvWriter {
public:
    CsvWriter(const nlohmann::json& resolved_config, std::vector<std::string> header);

    void row(const std::vector<double>& values);
    /// Trailing `# key: text` annotation.
    void note(const std::string& key, const std::string& text);

    [[nodiscard]] const std::string& str() const { return out_; }

private:
    std::size_t columns_;
    std::string out_;
};

} // namespace flexcool::cli
