#include "common.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <ostream>

#include "powertour/error.hpp"

namespace powertour::cli {

namespace {

std::size_t parse_count(const std::string& text, const std::string& whole) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError("bad range '" + whole + "'");
  }
  return value;
}

}  // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_count(text.substr(0, dots), text);
    const auto hi = parse_count(text.substr(dots + 2), text);
    if (lo > hi) throw InputError("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_count(text.substr(start, comma - start), text));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace powertour::cli
