#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/polynomial.hpp"

namespace orbitkit {

/// Stable key: value report. Sections and keys render sorted, so identical
/// inputs always produce byte-identical output.
class ReportBuilder {
 public:
  void set(const std::string& section, const std::string& key, std::string value);
  void set_lines(const std::string& section, const std::string& key_prefix,
                 const std::string& multiline);
  std::string str() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// "(c1, [e11 e12 ..]) (c2, ..)" in ascending graded-lex order; "0" when zero.
std::string sparse_monomials(const Polynomial& p);

/// Joins values of keys `prefix`NN back into the original multiline text.
std::string collect_lines(const std::string& report_text, const std::string& section,
                          const std::string& key_prefix);

std::string join_ints(const std::vector<int>& v);

}  // namespace orbitkit
