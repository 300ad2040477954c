#include "orbitkit/parser.hpp"

#include <algorithm>
#include <sstream>

namespace orbitkit {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment-stripped
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int num = 0;
  while (std::getline(in, raw)) {
    ++num;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    out.push_back({num, raw});
  }
  return out;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

Rational parse_rat_at(const std::string& s, int line, int col) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw ParseError(line, col, "expected a rational literal, got '" + s + "'");
  }
}

int basis_index(const SpecDocument& doc, const std::string& name, int line, int col) {
  auto it = std::find(doc.basis.begin(), doc.basis.end(), name);
  if (it == doc.basis.end()) throw ParseError(line, col, "undeclared basis name '" + name + "'");
  return static_cast<int>(it - doc.basis.begin()) + 1;
}

// `[Xi, Xj] = q1*Xk1 + q2*Xk2 + ...`; bare names mean coefficient 1, a bare
// `0` right-hand side means the zero bracket
void parse_bracket_line(SpecDocument& doc, const Line& ln) {
  const std::string& s = ln.text;
  auto close = s.find(']');
  auto comma = s.find(',');
  auto eq = s.find('=');
  if (close == std::string::npos || comma == std::string::npos || comma > close ||
      eq == std::string::npos || eq < close)
    throw ParseError(ln.number, 1, "malformed bracket line, expected '[Xi, Xj] = ...'");

  auto strip = [](std::string t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return t;
  };
  std::string left = strip(s.substr(s.find('[') + 1, comma - s.find('[') - 1));
  std::string right = strip(s.substr(comma + 1, close - comma - 1));
  int i = basis_index(doc, left, ln.number, 2);
  int j = basis_index(doc, right, ln.number, static_cast<int>(comma) + 2);
  if (i == j) throw ParseError(ln.number, 2, "bracket of a basis vector with itself");

  std::string rhs = strip(s.substr(eq + 1));
  std::vector<std::pair<int, Rational>> terms;
  if (rhs != "0") {
    // split on top-level + and -; a leading sign binds to the first term
    std::vector<std::pair<std::string, int>> chunks;  // (signed term, column)
    int sign = 1;
    std::size_t pos = eq + 1;
    while (pos < s.size()) {
      while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        sign = 1;
        ++pos;
        continue;
      }
      if (s[pos] == '-') {
        sign = -1;
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != '+' && s[pos] != '-' &&
             std::isspace(static_cast<unsigned char>(s[pos])) == 0)
        ++pos;
      std::string term = s.substr(start, pos - start);
      int col = static_cast<int>(start) + 1;
      Rational coeff(sign);
      std::string name = term;
      auto star = term.find('*');
      if (star != std::string::npos) {
        coeff = parse_rat_at(term.substr(0, star), ln.number, col) * sign;
        name = term.substr(star + 1);
      }
      int k = basis_index(doc, name, ln.number, col);
      terms.emplace_back(k, coeff);
      sign = 1;
    }
    if (terms.empty())
      throw ParseError(ln.number, static_cast<int>(eq) + 2, "empty bracket right-hand side");
  }
  if (i > j) {
    std::swap(i, j);
    for (auto& [k, c] : terms) c = -c;
  }
  for (const auto& [bi, bj, bt] : doc.brackets)
    if (bi == i && bj == j)
      throw ParseError(ln.number, 1, "duplicate bracket declaration");
  doc.brackets.emplace_back(i, j, std::move(terms));
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  SpecDocument doc;
  bool saw_dim = false, saw_basis = false, saw_dilation = false;
  int qstruct_rows_needed = 0;

  for (const Line& ln : split_lines(text)) {
    if (is_blank(ln.text)) continue;
    auto toks = tokenize(ln.text);

    if (qstruct_rows_needed > 0) {
      if (static_cast<int>(toks.size()) != static_cast<int>(doc.lambda_symbols.size()) + 1)
        throw ParseError(ln.number, toks.empty() ? 1 : toks[0].column,
                         "expected " + std::to_string(doc.lambda_symbols.size() + 1) +
                             " entries in lambda row");
      VectorQ row;
      for (const auto& t : toks) row.push_back(parse_rat_at(t.text, ln.number, t.column));
      doc.lambda_rows.push_back(std::move(row));
      --qstruct_rows_needed;
      continue;
    }

    const std::string& key = toks[0].text;
    if (key == "dim") {
      if (saw_dim) throw ParseError(ln.number, toks[0].column, "duplicate 'dim'");
      if (toks.size() != 2) throw ParseError(ln.number, toks[0].column, "'dim' takes one integer");
      try {
        doc.n = std::stoi(toks[1].text);
      } catch (const std::exception&) {
        throw ParseError(ln.number, toks[1].column, "not an integer: '" + toks[1].text + "'");
      }
      if (doc.n < 1) throw ParseError(ln.number, toks[1].column, "dimension must be >= 1");
      saw_dim = true;
    } else if (key == "basis") {
      if (!saw_dim) throw ParseError(ln.number, toks[0].column, "'basis' before 'dim'");
      if (saw_basis) throw ParseError(ln.number, toks[0].column, "duplicate 'basis'");
      if (static_cast<int>(toks.size()) != doc.n + 1)
        throw ParseError(ln.number, toks[0].column,
                         "expected " + std::to_string(doc.n) + " basis names");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        if (std::find(doc.basis.begin(), doc.basis.end(), toks[t].text) != doc.basis.end())
          throw ParseError(ln.number, toks[t].column, "duplicate basis name");
        doc.basis.push_back(toks[t].text);
      }
      saw_basis = true;
    } else if (key.front() == '[') {
      if (!saw_basis) throw ParseError(ln.number, toks[0].column, "bracket before 'basis'");
      parse_bracket_line(doc, ln);
    } else if (key == "dilation") {
      if (!saw_dim) throw ParseError(ln.number, toks[0].column, "'dilation' before 'dim'");
      if (saw_dilation) throw ParseError(ln.number, toks[0].column, "duplicate 'dilation'");
      if (static_cast<int>(toks.size()) != doc.n + 1)
        throw ParseError(ln.number, toks[0].column,
                         "expected " + std::to_string(doc.n) + " eigenvalues");
      for (std::size_t t = 1; t < toks.size(); ++t) {
        Rational a = parse_rat_at(toks[t].text, ln.number, toks[t].column);
        if (a == 0) throw ParseError(ln.number, toks[t].column, "zero dilation eigenvalue");
        doc.dilation.push_back(a);
      }
      saw_dilation = true;
    } else if (key == "lambda") {
      if (!saw_dim) throw ParseError(ln.number, toks[0].column, "'lambda' before 'dim'");
      if (doc.lambda_kind != LambdaKind::None)
        throw ParseError(ln.number, toks[0].column, "duplicate 'lambda'");
      if (toks.size() < 2) throw ParseError(ln.number, toks[0].column, "'lambda' needs a mode");
      const std::string& mode = toks[1].text;
      if (mode == "generic") {
        if (toks.size() != 2) throw ParseError(ln.number, toks[1].column, "trailing tokens");
        doc.lambda_kind = LambdaKind::Generic;
      } else if (mode == "rational") {
        if (static_cast<int>(toks.size()) != doc.n + 2)
          throw ParseError(ln.number, toks[1].column,
                           "expected " + std::to_string(doc.n) + " rational values");
        for (std::size_t t = 2; t < toks.size(); ++t)
          doc.lambda_values.push_back(parse_rat_at(toks[t].text, ln.number, toks[t].column));
        doc.lambda_kind = LambdaKind::Rational;
      } else if (mode == "qstruct") {
        if (toks.size() < 3)
          throw ParseError(ln.number, toks[1].column, "qstruct needs at least one symbol");
        for (std::size_t t = 2; t < toks.size(); ++t) {
          if (std::find(doc.lambda_symbols.begin(), doc.lambda_symbols.end(), toks[t].text) !=
              doc.lambda_symbols.end())
            throw ParseError(ln.number, toks[t].column, "duplicate symbol name");
          doc.lambda_symbols.push_back(toks[t].text);
        }
        doc.lambda_kind = LambdaKind::QStructured;
        qstruct_rows_needed = doc.n;
      } else {
        throw ParseError(ln.number, toks[1].column, "unknown lambda mode '" + mode + "'");
      }
    } else {
      throw ParseError(ln.number, toks[0].column, "unknown key '" + key + "'");
    }
  }

  if (!saw_dim) throw ParseError(1, 1, "missing 'dim'");
  if (!saw_basis) throw ParseError(1, 1, "missing 'basis'");
  if (!saw_dilation) throw ParseError(1, 1, "missing 'dilation'");
  if (qstruct_rows_needed > 0)
    throw ParseError(1, 1, "missing " + std::to_string(qstruct_rows_needed) + " lambda rows");
  return doc;
}

StructureConstants SpecDocument::to_constants() const {
  StructureConstants c(n);
  for (const auto& [i, j, terms] : brackets)
    for (const auto& [k, q] : terms) c.set(i, j, k, q);
  return c;
}

Functional SpecDocument::to_functional() const {
  switch (lambda_kind) {
    case LambdaKind::Rational:
      return Functional::rational(lambda_values);
    case LambdaKind::QStructured:
      return Functional::q_structured(n, static_cast<int>(lambda_symbols.size()), lambda_rows,
                                      lambda_symbols);
    default:
      return Functional::generic(n);
  }
}

std::string canonical_spec(const SpecDocument& doc) {
  std::ostringstream os;
  os << "dim " << doc.n << "\n";
  os << "basis";
  for (const auto& b : doc.basis) os << " " << b;
  os << "\n";
  auto sorted = doc.brackets;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (const auto& [i, j, terms] : sorted) {
    os << "[" << doc.basis[i - 1] << ", " << doc.basis[j - 1] << "] =";
    if (terms.empty()) {
      os << " 0";
    } else {
      bool first = true;
      for (const auto& [k, q] : terms) {
        Rational c = q;
        if (first) {
          if (c < 0) {
            os << " -";
            c = -c;
          } else {
            os << " ";
          }
        } else {
          if (c < 0) {
            os << " - ";
            c = -c;
          } else {
            os << " + ";
          }
        }
        if (c != 1) os << to_string(c) << "*";
        os << doc.basis[k - 1];
        first = false;
      }
    }
    os << "\n";
  }
  os << "dilation";
  for (const auto& a : doc.dilation) os << " " << to_string(a);
  os << "\n";
  switch (doc.lambda_kind) {
    case LambdaKind::None:
      break;
    case LambdaKind::Generic:
      os << "lambda generic\n";
      break;
    case LambdaKind::Rational:
      os << "lambda rational";
      for (const auto& v : doc.lambda_values) os << " " << to_string(v);
      os << "\n";
      break;
    case LambdaKind::QStructured:
      os << "lambda qstruct";
      for (const auto& s : doc.lambda_symbols) os << " " << s;
      os << "\n";
      for (const auto& row : doc.lambda_rows) {
        bool first = true;
        for (const auto& v : row) {
          os << (first ? "" : " ") << to_string(v);
          first = false;
        }
        os << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace orbitkit
