#include "orbitkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace orbitkit {

void ReportBuilder::set(const std::string& section, const std::string& key, std::string value) {
  sections_[section][key] = std::move(value);
}

void ReportBuilder::set_lines(const std::string& section, const std::string& key_prefix,
                              const std::string& multiline) {
  std::istringstream in(multiline);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    std::ostringstream key;
    key << key_prefix << std::setw(3) << std::setfill('0') << ++n;
    sections_[section][key.str()] = line;
  }
}

std::string ReportBuilder::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [section, kv] : sections_) {
    if (!first) os << "\n";
    first = false;
    os << "[" << section << "]\n";
    for (const auto& [key, value] : kv) os << key << ": " << value << "\n";
  }
  return os.str();
}

std::string sparse_monomials(const Polynomial& p) {
  auto terms = p.sparse_list();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    if (!first) os << " ";
    first = false;
    os << "(" << to_string(c) << ", [";
    for (std::size_t i = 0; i < mono.size(); ++i) os << (i ? " " : "") << mono[i];
    os << "])";
  }
  return os.str();
}

std::string collect_lines(const std::string& report_text, const std::string& section,
                          const std::string& key_prefix) {
  std::istringstream in(report_text);
  std::string line;
  bool inside = false;
  std::ostringstream out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '[') {
      inside = line == "[" + section + "]";
      continue;
    }
    if (!inside) continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos) {
      // key with empty value
      colon = line.find(':');
      if (colon == std::string::npos) continue;
    }
    if (line.compare(0, key_prefix.size(), key_prefix) != 0) continue;
    std::size_t value_at = std::min(colon + 2, line.size());
    out << line.substr(value_at) << "\n";
  }
  return out.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace orbitkit
