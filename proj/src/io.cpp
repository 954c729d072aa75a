#include "mcgc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcgc {

void write_sequence(
    std::ostream& os, const ColorSequence& seq,
    const std::vector<std::pair<std::string, std::string>>& extra) {
  os << "# k=" << seq.palette_size() << " mode=" << to_string(seq.mode());
  for (const auto& [key, value] : extra) os << ' ' << key << '=' << value;
  os << '\n';
  const auto colors = seq.colors();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) os << ' ';
    os << colors[i];
  }
  os << '\n';
}

void parse_header_line(const std::string& line, Header& out) {
  std::istringstream in(line.substr(line.find('#') + 1));
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    out[token.substr(0, eq)] = token.substr(eq + 1);
  }
}

SequenceFile read_sequences(std::istream& is) {
  SequenceFile file;
  std::vector<std::vector<Color>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') {
      parse_header_line(line, file.header);
      continue;
    }
    std::istringstream in(line);
    std::vector<Color> row;
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("line " + std::to_string(lineno) + ": invalid color '" +
                    token + "'");
      }
      row.push_back(static_cast<Color>(std::stoul(token)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("no sequence found in input");

  Mode mode = Mode::cyclic;
  if (auto it = file.header.find("mode"); it != file.header.end()) {
    mode = parse_mode(it->second);
  }
  for (auto& row : rows) {
    std::size_t k = 0;
    if (auto it = file.header.find("k"); it != file.header.end()) {
      k = std::stoul(it->second);
    } else {
      k = *std::max_element(row.begin(), row.end());
    }
    file.sequences.emplace_back(std::move(row), k, mode);
  }
  return file;
}

SequenceFile read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_sequences(in);
}

}  // namespace mcgc
