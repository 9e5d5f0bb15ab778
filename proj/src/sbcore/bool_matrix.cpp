#include "boolrep/bool_matrix.hpp"

#include <set>
#include <sstream>

#include "boolrep/error.hpp"

namespace boolrep {

BoolMatrix::BoolMatrix(GroundSet columns, std::vector<Mask> rows, std::vector<std::string> row_labels)
    : columns_(std::move(columns)), rows_(std::move(rows)), row_labels_(std::move(row_labels)) {
  for (Mask r : rows_)
    if (!is_subset(r, columns_.full())) fail(ErrorKind::DimensionError, "row wider than column set");
  if (!row_labels_.empty()) {
    if (row_labels_.size() != rows_.size())
      fail(ErrorKind::DimensionError, "row label count does not match row count");
    std::set<std::string_view> seen;
    for (const auto& l : row_labels_)
      if (!seen.insert(l).second) fail(ErrorKind::ParseError, "duplicate row label '" + l + "'");
  }
}

BoolMatrix BoolMatrix::from_strings(GroundSet columns, const std::vector<std::string>& rows) {
  std::vector<Mask> masks;
  for (const auto& s : rows) {
    if (s.size() != columns.size())
      fail(ErrorKind::DimensionError, "row '" + s + "' has wrong width");
    Mask m = 0;
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (s[c] == '1') m |= bit(c);
      else if (s[c] != '0') fail(ErrorKind::ParseError, "bad matrix entry in '" + s + "'");
    }
    masks.push_back(m);
  }
  return BoolMatrix(std::move(columns), std::move(masks));
}

std::string BoolMatrix::row_label(std::size_t r) const {
  return row_labels_.empty() ? "r" + std::to_string(r + 1) : row_labels_.at(r);
}

std::string BoolMatrix::row_string(std::size_t r) const {
  std::string s(cols(), '0');
  for (std::size_t c = 0; c < cols(); ++c)
    if (at(r, c)) s[c] = '1';
  return s;
}

BoolMatrix BoolMatrix::transpose() const {
  if (rows() > GroundSet::kMaxSize) fail(ErrorKind::TooLarge, "transpose needs at most 64 rows");
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows(); ++r) labels.push_back(row_label(r));
  std::vector<Mask> out(cols(), 0);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (at(r, c)) out[c] |= bit(r);
  return BoolMatrix(GroundSet(std::move(labels)), std::move(out), columns_.labels());
}

BoolMatrix BoolMatrix::select_rows(const std::vector<std::size_t>& which) const {
  std::vector<Mask> out;
  std::vector<std::string> labels;
  for (auto r : which) {
    out.push_back(rows_.at(r));
    if (labelled()) labels.push_back(row_labels_[r]);
  }
  return BoolMatrix(columns_, std::move(out), std::move(labels));
}

std::string to_text(const BoolMatrix& m) {
  std::string out = "cols:";
  for (const auto& l : m.columns().labels()) out += " " + l;
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.labelled()) out += m.row_labels()[r] + ": ";
    out += m.row_string(r) + "\n";
  }
  return out;
}

BoolMatrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<GroundSet> columns;
  std::vector<std::string> rows;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!columns) {
      if (line.rfind("cols:", 0) != 0) fail(ErrorKind::ParseError, "matrix text must start with 'cols:'");
      std::istringstream ls(line.substr(5));
      std::vector<std::string> cols;
      for (std::string tok; ls >> tok;) cols.push_back(tok);
      columns = GroundSet(std::move(cols));
      continue;
    }
    std::string bits = line;
    if (auto colon = line.find(':'); colon != std::string::npos) {
      std::string label = line.substr(0, colon);
      label.erase(0, label.find_first_not_of(" \t"));
      label.erase(label.find_last_not_of(" \t") + 1);
      if (label.empty()) fail(ErrorKind::ParseError, "empty row label");
      labels.push_back(label);
      bits = line.substr(colon + 1);
    }
    std::string packed;
    for (char c : bits)
      if (c != ' ' && c != '\t') packed += c;
    rows.push_back(packed);
  }
  if (!columns) fail(ErrorKind::ParseError, "missing 'cols:' line");
  if (!labels.empty() && labels.size() != rows.size())
    fail(ErrorKind::ParseError, "either every row is labelled or none is");
  auto m = BoolMatrix::from_strings(*columns, rows);
  return BoolMatrix(m.columns(), m.row_masks(), std::move(labels));
}

}  // namespace boolrep
