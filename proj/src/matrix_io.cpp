#include "bikei/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "bikei/errors.hpp"

namespace bikei {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<int> values;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw InputError("matrix line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

BirackMatrix parse_matrix_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("matrix text is empty");
  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 1 || header[0] < 1)
    throw InputError("matrix header must be a single positive integer");
  BirackMatrix m;
  m.n = header[0];
  if (lines.size() != static_cast<std::size_t>(m.n) + 1)
    throw InputError("expected " + std::to_string(m.n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  for (int i = 0; i < m.n; ++i) {
    const auto row = parse_ints(lines[i + 1], i + 2);
    if (row.size() != static_cast<std::size_t>(2 * m.n))
      throw InputError("matrix row " + std::to_string(i + 1) + " must have " +
                       std::to_string(2 * m.n) + " entries");
    m.upper.emplace_back(row.begin(), row.begin() + m.n);
    m.lower.emplace_back(row.begin() + m.n, row.end());
  }
  return m;
}

BirackMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string format_matrix(const BirackMatrix& m) {
  std::ostringstream os;
  os << m.n << "\n";
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << m.upper[i][j];
    for (int j = 0; j < m.n; ++j) os << " " << m.lower[i][j];
    os << "\n";
  }
  return os.str();
}

}  // namespace bikei
