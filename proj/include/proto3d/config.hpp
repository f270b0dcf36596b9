#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace proto3d {

/// Plain-text `key = value` configuration. `#` starts a comment; later keys
/// override earlier ones. Lists are comma separated.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<int64_t> get_int_list(const std::string& key, std::vector<int64_t> fallback) const;
  std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::string> get_string_list(const std::string& key,
                                           std::vector<std::string> fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

  /// Canonical `key = value` text, sorted by key.
  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
};

std::vector<std::string> split_list(const std::string& text);
std::string trim(const std::string& text);

}  // namespace proto3d
