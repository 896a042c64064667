#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace whmtool {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::uint64_t parse_unsigned(const std::string& value, const std::string& where) {
  std::uint64_t x = 0;
  const auto* end = value.data() + value.size();
  const auto [p, ec] = std::from_chars(value.data(), end, x);
  if (ec != std::errc() || p != end || value.empty()) {
    throw ConfigError(where + ": expected a non-negative integer, got '" + value + "'");
  }
  return x;
}

std::vector<int> parse_int_list(const std::string& value, const std::string& where) {
  std::vector<int> out;
  for (const auto& item : split(value, ',')) {
    const auto x = parse_unsigned(item, where);
    if (x > 1'000'000) throw ConfigError(where + ": value " + item + " is too large");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

bool parse_bool(const std::string& value, const std::string& where) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ConfigError(where + ": expected true or false, got '" + value + "'");
}

// "name(body)" -> body, when the value has that form.
std::optional<std::string> call_body(const std::string& value, const std::string& name) {
  if (value.size() < name.size() + 2 || value.compare(0, name.size(), name) != 0) return std::nullopt;
  const std::string rest = trim(value.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  return trim(rest.substr(1, rest.size() - 2));
}

CodeSpec parse_code_spec(const std::string& value, const std::filesystem::path& base, const std::string& where) {
  CodeSpec spec;
  if (auto body = call_body(value, "rows")) {
    spec.kind = CodeSpec::Kind::rows;
    spec.text = *body;
    if (spec.text.empty()) throw ConfigError(where + ": rows() needs at least one row");
    return spec;
  }
  if (auto body = call_body(value, "file")) {
    spec.kind = CodeSpec::Kind::file;
    std::filesystem::path p(*body);
    spec.text = (p.is_absolute() ? p : base / p).string();
    return spec;
  }
  const auto words = split(value, ' ');
  std::vector<std::string> parts;
  std::copy_if(words.begin(), words.end(), std::back_inserter(parts), [](const std::string& w) { return !w.empty(); });
  if (parts.empty() || parts.size() > 2) throw ConfigError(where + ": expected 'family [k]', rows(...) or file(...)");
  spec.family = parts[0];
  if (parts.size() == 2) spec.k = parse_unsigned(parts[1], where);
  return spec;
}

std::size_t parse_index(const std::string& key, const std::string& prefix, const std::string& where) {
  const auto idx = parse_unsigned(key.substr(prefix.size()), where);
  if (idx < 1) throw ConfigError(where + ": indices start at 1");
  return static_cast<std::size_t>(idx);
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  std::string section;
  std::map<std::string, std::map<std::string, std::pair<std::string, int>>> entries;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      static const std::vector<std::string> known = {"space", "gcc", "limits", "output", "search"};
      if (std::find(known.begin(), known.end(), section) == known.end()) {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      }
      entries[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    if (section.empty()) throw ConfigError("line " + std::to_string(line_no) + ": key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (entries[section].count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "' in [" + section + "]");
    }
    entries[section][key] = {value, line_no};
  }

  auto where = [](const std::string& sec, const std::string& key, int line) {
    return "line " + std::to_string(line) + " ([" + sec + "] " + key + ")";
  };

  if (!entries.count("space")) throw ConfigError("missing [space] section");
  for (const auto& [key, v] : entries["space"]) {
    const auto w = where("space", key, v.second);
    if (key == "q") {
      cfg.space.q = static_cast<std::uint32_t>(parse_unsigned(v.first, w));
    } else if (key == "blocks") {
      cfg.space.blocks = parse_int_list(v.first, w);
    } else if (key == "lambda") {
      cfg.space.lambda = parse_int_list(v.first, w);
    } else {
      throw ConfigError(w + ": unknown key");
    }
  }
  if (cfg.space.q == 0 || cfg.space.blocks.empty() || cfg.space.lambda.empty()) {
    throw ConfigError("[space] needs q, blocks and lambda");
  }
  if (cfg.space.blocks.size() != cfg.space.lambda.size()) {
    throw ConfigError("[space] blocks and lambda have different lengths");
  }
  if (!std::is_sorted(cfg.space.lambda.begin(), cfg.space.lambda.end())) {
    throw ConfigError("[space] lambda must be sorted non-decreasing");
  }

  if (entries.count("gcc")) {
    GccSection g;
    const std::size_t m = cfg.space.blocks.size();
    std::map<std::size_t, std::vector<CodeSpec>> chains;
    std::map<std::size_t, OuterSpec> outers;
    bool have_levels = false;
    for (const auto& [key, v] : entries["gcc"]) {
      const auto w = where("gcc", key, v.second);
      if (key == "levels") {
        g.levels = parse_unsigned(v.first, w);
        have_levels = true;
      } else if (key == "declared_distances") {
        g.declared_distances = parse_bool(v.first, w);
      } else if (key.rfind("block.", 0) == 0) {
        const auto l = parse_index(key, "block.", w);
        if (l > m) throw ConfigError(w + ": the space has " + std::to_string(m) + " blocks");
        for (const auto& item : split(v.first, '>')) chains[l].push_back(parse_code_spec(item, base_dir, w));
      } else if (key.rfind("outer.", 0) == 0) {
        const auto j = parse_index(key, "outer.", w);
        OuterSpec o;
        if (v.first == "full") {
          o.kind = OuterSpec::Kind::full;
        } else if (auto body = call_body(v.first, "mother")) {
          o.kind = OuterSpec::Kind::mother_family;
          o.code = parse_code_spec(*body, base_dir, w);
          if (o.code.kind != CodeSpec::Kind::family) throw ConfigError(w + ": mother() takes a family name and optional k");
        } else {
          o.kind = OuterSpec::Kind::code;
          o.code = parse_code_spec(v.first, base_dir, w);
          if (o.code.kind == CodeSpec::Kind::family) {
            throw ConfigError(w + ": outer codes are full, mother(family [k]), rows(...) or file(...)");
          }
        }
        outers[j] = o;
      } else {
        throw ConfigError(w + ": unknown key");
      }
    }
    if (!have_levels || g.levels < 1) throw ConfigError("[gcc] needs levels >= 1");
    for (std::size_t l = 1; l <= m; ++l) {
      if (!chains.count(l)) throw ConfigError("[gcc] missing block." + std::to_string(l));
      if (chains[l].size() != g.levels) {
        throw ConfigError("[gcc] block." + std::to_string(l) + " lists " + std::to_string(chains[l].size()) +
                          " codes, expected " + std::to_string(g.levels));
      }
      g.chains.push_back(chains[l]);
    }
    for (std::size_t j = 1; j <= g.levels; ++j) {
      if (!outers.count(j)) throw ConfigError("[gcc] missing outer." + std::to_string(j));
      g.outers.push_back(outers[j]);
    }
    if (outers.size() > g.levels) throw ConfigError("[gcc] has more outer codes than levels");
    cfg.gcc = std::move(g);
  }

  for (const auto& [key, v] : entries["limits"]) {
    const auto w = where("limits", key, v.second);
    if (key == "codewords") {
      cfg.limits.codewords = parse_unsigned(v.first, w);
    } else if (key == "ambient") {
      cfg.limits.ambient = parse_unsigned(v.first, w);
    } else {
      throw ConfigError(w + ": unknown key");
    }
  }

  for (const auto& [key, v] : entries["output"]) {
    const auto w = where("output", key, v.second);
    if (key == "format") {
      if (v.first != "csv" && v.first != "json") throw ConfigError(w + ": format is csv or json");
      cfg.output.format = v.first;
    } else if (key == "path") {
      std::filesystem::path p(v.first);
      cfg.output.path = (p.is_absolute() ? p : base_dir / p).string();
    } else {
      throw ConfigError(w + ": unknown key");
    }
  }

  if (entries.count("search")) {
    SearchSection s;
    for (const auto& [key, v] : entries["search"]) {
      const auto w = where("search", key, v.second);
      if (key == "inner") {
        s.inner = v.first;
      } else if (key == "outer") {
        s.outer = v.first;
      } else if (key == "max_levels") {
        s.max_levels = parse_unsigned(v.first, w);
      } else {
        throw ConfigError(w + ": unknown key");
      }
    }
    cfg.search = s;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

}  // namespace whmtool
