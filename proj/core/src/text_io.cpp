#include "stripless/text_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace stripless {

Tableau parse_tableau(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream cells(line);
    std::vector<int> row;
    std::string token;
    while (cells >> token) {
      size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("tableau entry is not an integer: " + token);
      }
      if (used != token.size() || value < 1) {
        throw std::invalid_argument("tableau entry must be a positive integer: " + token);
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Tableau{std::move(rows)};
}

Tableau parse_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tableau file: " + path);
  return parse_tableau(in);
}

std::string render_tableau(const Tableau& t) {
  int widest = 1;
  for (const auto& row : t.rows()) {
    for (int e : row) {
      int digits = 1;
      for (int v = e; v >= 10; v /= 10) ++digits;
      widest = std::max(widest, digits);
    }
  }
  std::string out;
  for (const auto& row : t.rows()) {
    for (size_t j = 0; j < row.size(); ++j) {
      std::string cell = std::to_string(row[j]);
      if (j > 0) out += ' ';
      out.append(static_cast<size_t>(widest) - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty partition text");
  std::vector<int> parts;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition part is not an integer: " + token);
    }
    if (used != token.size() || value < 0) {
      throw std::invalid_argument("partition parts must be nonnegative integers");
    }
    parts.push_back(value);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace stripless
