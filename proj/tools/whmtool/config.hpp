#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace whmtool {

/// Raised for malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpaceSection {
  std::uint32_t q = 0;
  std::vector<int> blocks;
  std::vector<int> lambda;
};

/// One code reference: a named family, inline rows or a matrix file.
struct CodeSpec {
  enum class Kind { family, rows, file } kind = Kind::family;
  std::string family;
  std::size_t k = 0;
  std::string text;  // rows(...) body or resolved file path
};

struct OuterSpec {
  enum class Kind { full, code, mother_family } kind = Kind::full;
  CodeSpec code;  // rows(...) / file(...) / mother(family [k])
};

struct GccSection {
  std::size_t levels = 1;
  std::vector<std::vector<CodeSpec>> chains;  // per block, largest code first
  std::vector<OuterSpec> outers;              // per level
  bool declared_distances = false;
};

struct LimitsSection {
  std::uint64_t codewords = 0;  // 0 keeps the library default
  std::uint64_t ambient = 0;
};

struct OutputSection {
  std::optional<std::string> format;
  std::optional<std::string> path;
};

struct SearchSection {
  std::optional<std::string> inner;
  std::optional<std::string> outer;
  std::size_t max_levels = 2;
};

struct RunConfig {
  SpaceSection space;
  std::optional<GccSection> gcc;
  LimitsSection limits;
  OutputSection output;
  std::optional<SearchSection> search;
};

/// Parses the sectioned key/value format. Relative file(...) paths resolve
/// against base_dir. Unknown sections or keys are errors.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace whmtool
