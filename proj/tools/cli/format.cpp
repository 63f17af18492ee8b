#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace flexcool::cli {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, kSignificantDigits);
    if (res.ec != std::errc{}) throw std::runtime_error("format_number: to_chars failed");
    return std::string(buf.data(), res.ptr);
}

double round_significant(double value) {
    if (!std::isfinite(value)) return value;
    const std::string text = format_number(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

nlohmann::json json_number(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round_significant(value);
}

std::string canonical_json(const nlohmann::json& j) { return j.dump(); }

CsvWriter::CsvWriter(const nlohmann::json& resolved_config, std::vector<std::string> header)
    : columns_(header.size()) {
    out_ = "# resolved-config: " + canonical_json(resolved_config) + "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ',';
        out_ += header[i];
    }
    out_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::logic_error("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ',';
        out_ += format_number(values[i]);
    }
    out_ += '\n';
}

void CsvWriter::note(const std::string& key, const std::string& text) {
    out_ += "# " + key + ": " + text + "\n";
}

} // namespace flexcool::cli
