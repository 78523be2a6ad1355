#include "quiverfin/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace quiverfin {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

i64 parse_integer(const std::string& tok, int line) {
  i64 value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> items;  // (line no, tokens)

  explicit Lines(std::string_view text) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(pos, end - pos);
      if (size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      auto toks = tokenize(line);
      if (!toks.empty()) items.push_back({line_no, std::move(toks)});
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
};

}  // namespace

QuiverSetting parse_setting(std::string_view text, i64 dim_limit) {
  Lines lines(text);
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> index;
  std::vector<std::pair<std::string, std::string>> arrows;
  std::map<std::string, i64> dims;
  bool saw_vertices = false;

  for (const auto& [line, toks] : lines.items) {
    const std::string& head = toks[0];
    if (head == "vertices:") {
      saw_vertices = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i]))
          throw ParseError(line, "invalid vertex name '" + toks[i] + "'");
        if (index.count(toks[i]))
          throw ParseError(line, "duplicate vertex '" + toks[i] + "'");
        index.emplace(toks[i], static_cast<int>(names.size()));
        names.push_back(toks[i]);
      }
    } else if (head == "arrow:") {
      if (toks.size() != 3)
        throw ParseError(line, "arrow needs exactly two vertices");
      for (int k = 1; k <= 2; ++k)
        if (!index.count(toks[k]))
          throw ParseError(line, "undeclared vertex '" + toks[k] + "' in arrow");
      arrows.push_back({toks[1], toks[2]});
    } else if (head == "dim:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
          throw ParseError(line, "expected name=value, got '" + tok + "'");
        std::string name = tok.substr(0, eq);
        if (!index.count(name))
          throw ParseError(line, "undeclared vertex '" + name + "' in dim");
        if (dims.count(name))
          throw ParseError(line, "duplicate dimension for vertex '" + name + "'");
        i64 value = parse_integer(tok.substr(eq + 1), line);
        if (value < 0)
          throw ParseError(line, "negative dimension for vertex '" + name + "'");
        if (value > dim_limit)
          throw ParseError(line, "dimension for vertex '" + name +
                                     "' exceeds the configured limit");
        dims.emplace(std::move(name), value);
      }
    } else {
      throw ParseError(line, "unknown directive '" + head + "'");
    }
  }
  if (!saw_vertices) throw ParseError(1, "missing vertices: directive");
  std::vector<i64> d;
  for (const auto& n : names) {
    auto it = dims.find(n);
    if (it == dims.end())
      throw ParseError(1, "missing dimension for vertex '" + n + "'");
    d.push_back(it->second);
  }
  return QuiverSetting(Quiver(std::move(names), arrows), DimVector(std::move(d)),
                       dim_limit);
}

std::string serialize_setting(const QuiverSetting& s) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : s.quiver.names()) out << " " << n;
  out << "\n";
  for (const Arrow& a : s.quiver.arrows())
    out << "arrow: " << s.quiver.name(a.src) << " " << s.quiver.name(a.dst) << "\n";
  if (s.quiver.vertex_count() > 0) {
    out << "dim:";
    for (int i = 0; i < s.quiver.vertex_count(); ++i)
      out << " " << s.quiver.name(i) << "=" << s.dim[i];
    out << "\n";
  }
  return out.str();
}

AlgebraSpec parse_algebra(std::string_view text) {
  Lines lines(text);
  AlgebraSpec spec;
  bool saw_blocks = false;
  for (const auto& [line, toks] : lines.items) {
    const std::string& head = toks[0];
    if (head == "blocks:") {
      if (saw_blocks) throw ParseError(line, "repeated blocks: directive");
      saw_blocks = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        i64 n = parse_integer(toks[i], line);
        if (n < 1) throw ParseError(line, "block sizes must be positive");
        spec.block_sizes.push_back(n);
      }
      if (spec.block_sizes.empty())
        throw ParseError(line, "blocks: needs at least one size");
    } else if (head == "rank:") {
      if (!saw_blocks) throw ParseError(line, "rank: before blocks:");
      std::vector<i64> row;
      for (size_t i = 1; i < toks.size(); ++i) {
        i64 r = parse_integer(toks[i], line);
        if (r < 0) throw ParseError(line, "ranks must be nonnegative");
        row.push_back(r);
      }
      if (static_cast<int>(row.size()) != spec.blocks())
        throw ParseError(line, "rank row must have one entry per block");
      spec.ranks.push_back(std::move(row));
    } else {
      throw ParseError(line, "unknown directive '" + head + "'");
    }
  }
  if (!saw_blocks) throw ParseError(1, "missing blocks: directive");
  if (static_cast<int>(spec.ranks.size()) != spec.blocks())
    throw ParseError(1, "expected one rank row per block");
  validate_spec(spec);
  return spec;
}

std::string serialize_algebra(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "blocks:";
  for (i64 n : spec.block_sizes) out << " " << n;
  out << "\n";
  for (const auto& row : spec.ranks) {
    out << "rank:";
    for (i64 r : row) out << " " << r;
    out << "\n";
  }
  return out.str();
}

std::string witness_report(const EuclideanWitness& w, i64 multiplier) {
  const Quiver& pattern = w.embedding.source();
  const Quiver& ambient = w.embedding.target();
  std::ostringstream out;
  out << "WITNESS type=" << w.type.name() << " m=" << multiplier << "\n";

  std::vector<int> order(pattern.vertex_count());
  for (int i = 0; i < pattern.vertex_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return w.embedding.vertex_map()[a] < w.embedding.vertex_map()[b];
  });
  for (int i : order)
    out << "vertex " << ambient.name(w.embedding.vertex_map()[i]) << " -> "
        << pattern.name(i) << " h=" << w.radical[i] << "\n";

  std::vector<int> arrows(pattern.arrow_count());
  for (int i = 0; i < pattern.arrow_count(); ++i) arrows[i] = i;
  std::sort(arrows.begin(), arrows.end(), [&](int a, int b) {
    const Arrow& aa = ambient.arrows()[w.embedding.arrow_map()[a]];
    const Arrow& bb = ambient.arrows()[w.embedding.arrow_map()[b]];
    if (aa.src != bb.src) return aa.src < bb.src;
    if (aa.dst != bb.dst) return aa.dst < bb.dst;
    return w.embedding.arrow_map()[a] < w.embedding.arrow_map()[b];
  });
  for (int i : arrows) {
    const Arrow& aa = ambient.arrows()[w.embedding.arrow_map()[i]];
    const Arrow& pa = pattern.arrows()[i];
    out << "arrow " << ambient.name(aa.src) << " " << ambient.name(aa.dst) << " -> "
        << pattern.name(pa.src) << " " << pattern.name(pa.dst) << "\n";
  }
  return out.str();
}

std::string subroot_report(const SubrootWitness& w, const Quiver& q) {
  std::ostringstream out;
  out << "SUBROOT q=" << w.q_value << "\n";
  out << "dim:";
  for (int i = 0; i < q.vertex_count(); ++i)
    out << " " << q.name(i) << "=" << w.vector[i];
  out << "\n";
  return out.str();
}

}  // namespace quiverfin
