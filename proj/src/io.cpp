#include "gtp/io.hpp"

#include <charconv>

#include "gtp/error.hpp"

namespace gtp {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

int parse_int(std::string_view w, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(w) + "'");
  return v;
}

Shape shape_from(ShapeKind kind, int n, int k, int l) {
  try {
    switch (kind) {
      case ShapeKind::triangle: return Shape::triangle(n);
      case ShapeKind::left: return Shape::left(n, k);
      case ShapeKind::right: return Shape::right(n, l);
      case ShapeKind::rectangle: return Shape::rectangle(n, k, l);
    }
  } catch (const InvalidShape& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unreachable shape kind");
}

Shape parse_header(std::string_view line) {
  auto w = split_words(line);
  if (w.empty()) throw ParseError("missing header line");
  const ShapeKind kind = parse_kind(std::string(w[0]));
  const std::size_t expected = kind == ShapeKind::triangle    ? 2
                               : kind == ShapeKind::rectangle ? 4
                                                              : 3;
  if (w.size() != expected) throw ParseError("bad header '" + std::string(line) + "'");
  const int n = parse_int(w[1], "size");
  int k = n, l = n;
  if (kind == ShapeKind::left) k = parse_int(w[2], "width");
  if (kind == ShapeKind::right) l = parse_int(w[2], "width");
  if (kind == ShapeKind::rectangle) {
    k = parse_int(w[2], "width");
    l = parse_int(w[3], "width");
  }
  return shape_from(kind, n, k, l);
}

Pattern parse_lines(const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw ParseError("empty input");
  Shape shape = parse_header(lines[0]);
  const int top = shape.top_row();
  if (static_cast<int>(lines.size()) - 1 != top)
    throw ParseError(header(shape) + " needs " + std::to_string(top) + " rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<int> entries;
  for (int r = 0; r < top; ++r) {
    const int i = top - r;
    auto words = split_words(lines[r + 1]);
    if (static_cast<int>(words.size()) != shape.row_size(i))
      throw ParseError("row " + std::to_string(i) + " needs " + std::to_string(shape.row_size(i)) +
                       " entries, got " + std::to_string(words.size()));
    for (auto w : words) {
      const int v = parse_int(w, "entry");
      if (v < 1) throw ParseError("entries must be positive, got " + std::string(w));
      entries.push_back(v);
    }
  }
  return Pattern(std::move(shape), std::move(entries));
}

}  // namespace

std::string to_text(const Pattern& p) {
  const Shape& s = p.shape();
  std::string out = header(s) + "\n";
  for (int i = s.top_row(); i >= 1; --i) {
    for (int j = s.row_first(i); j <= s.row_last(i); ++j) {
      if (j > s.row_first(i)) out += ' ';
      out += std::to_string(p(i, j));
    }
    out += '\n';
  }
  return out;
}

Pattern parse_text(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw ParseError("missing trailing newline");
  auto lines = split_lines(text);
  for (auto l : lines)
    if (!l.empty() && l.back() == '\r') throw ParseError("CR line endings are not accepted");
  return parse_lines(lines);
}

std::vector<Pattern> parse_text_stream(std::string_view text) {
  std::vector<Pattern> out;
  std::vector<std::string_view> block;
  for (auto line : split_lines(text)) {
    if (!line.empty() && line.front() == '#') continue;
    if (split_words(line).empty()) {
      if (!block.empty()) out.push_back(parse_lines(block));
      block.clear();
      continue;
    }
    block.push_back(line);
  }
  if (!block.empty()) out.push_back(parse_lines(block));
  return out;
}

nlohmann::json to_json(const Pattern& p) {
  const Shape& s = p.shape();
  nlohmann::json j;
  j["kind"] = kind_name(s.kind());
  j["n"] = s.n();
  if (s.kind() == ShapeKind::left || s.kind() == ShapeKind::rectangle) j["k"] = s.left_width();
  if (s.kind() == ShapeKind::right || s.kind() == ShapeKind::rectangle) j["l"] = s.right_width();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = s.top_row(); i >= 1; --i) rows.push_back(p.row(i));
  j["rows"] = std::move(rows);
  return j;
}

Pattern pattern_from_json(const nlohmann::json& j) {
  try {
    const ShapeKind kind = parse_kind(j.at("kind").get<std::string>());
    const int n = j.at("n").get<int>();
    const int k = j.contains("k") ? j["k"].get<int>() : n;
    const int l = j.contains("l") ? j["l"].get<int>() : n;
    Shape shape = shape_from(kind, n, k, l);
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    for (const auto& r : rows)
      for (int v : r)
        if (v < 1) throw ParseError("entries must be positive");
    return Pattern::from_rows(std::move(shape), rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad pattern JSON: ") + e.what());
  } catch (const MalformedPattern& e) {
    throw ParseError(e.what());
  }
}

}  // namespace gtp
