#include "cdecomp/text_format.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace cdecomp {

namespace {

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

VertexId parse_vertex(std::string_view token) {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos) throw std::invalid_argument("vertex '" + std::string(token) + "' is not part.slot");
  const auto part = to_int(token.substr(0, dot));
  const auto slot = to_int(token.substr(dot + 1));
  if (!part || !slot || *part < 0 || *slot < 0) {
    throw std::invalid_argument("vertex '" + std::string(token) + "' is not part.slot");
  }
  return {*part, *slot};
}

CycleDecomposition parse_decomposition(std::istream& in) {
  CycleDecomposition d;
  std::optional<int> lambda, m, n;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto toks = tokens(view);
    if (toks.empty()) continue;
    const auto key = toks[0];
    try {
      if (key == "lambda" || key == "m" || key == "n") {
        if (toks.size() != 2) throw ParseError(lineno, std::string(key) + " takes one integer");
        auto value = to_int(toks[1]);
        if (!value || *value < 1) throw ParseError(lineno, std::string(key) + " must be a positive integer");
        auto& slot = key == "lambda" ? lambda : key == "m" ? m : n;
        if (slot) throw ParseError(lineno, "duplicate " + std::string(key) + " header");
        slot = *value;
      } else if (key == "cycle") {
        Cycle c;
        for (std::size_t i = 1; i < toks.size(); ++i) c.push_back(parse_vertex(toks[i]));
        d.cycles.push_back(std::move(c));
      } else if (key == "onefactor") {
        if (d.one_factor) throw ParseError(lineno, "more than one onefactor line");
        std::vector<VertexPair> pairs;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          auto ends = split(toks[i], ':');
          if (ends.size() != 2) throw ParseError(lineno, "1-factor pair '" + std::string(toks[i]) + "' is not u:v");
          pairs.emplace_back(parse_vertex(ends[0]), parse_vertex(ends[1]));
        }
        d.one_factor = std::move(pairs);
      } else {
        throw ParseError(lineno, "unknown record '" + std::string(key) + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!lambda || !m || !n) throw ParseError(lineno, "missing lambda/m/n header");
  d.context = {*lambda, *m, *n};
  return d;
}

CycleDecomposition parse_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_decomposition(in);
}

void write_decomposition(std::ostream& out, const CycleDecomposition& d,
                         const std::vector<std::pair<std::size_t, std::string>>& comments) {
  out << "lambda " << d.context.lambda << "\n"
      << "m " << d.context.m << "\n"
      << "n " << d.context.n << "\n";
  auto next_comment = comments.begin();
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (; next_comment != comments.end() && next_comment->first == i; ++next_comment) {
      out << "# " << next_comment->second << "\n";
    }
    out << "cycle";
    for (const auto& v : d.cycles[i]) out << ' ' << to_string(v);
    out << "\n";
  }
  if (d.one_factor) {
    out << "onefactor";
    for (const auto& [a, b] : *d.one_factor) out << ' ' << to_string(a) << ':' << to_string(b);
    out << "\n";
  }
}

std::string format_decomposition(const CycleDecomposition& d) {
  std::ostringstream out;
  write_decomposition(out, d);
  return out.str();
}

std::vector<int> parse_lengths(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    auto parts = split(item, '^');
    if (parts.size() > 2) throw std::invalid_argument("bad length item '" + std::string(item) + "'");
    const auto length = to_int(parts[0]);
    const auto count = parts.size() == 2 ? to_int(parts[1]) : std::optional<int>(1);
    if (!length || !count || *length < 1 || *count < 0) {
      throw std::invalid_argument("bad length item '" + std::string(item) + "'");
    }
    out.insert(out.end(), *count, *length);
  }
  return out;
}

}  // namespace cdecomp
