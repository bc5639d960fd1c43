#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uag/common.hpp"

namespace uag {

// Ordered key=value payload shared by every CLI subcommand.  The machine
// rendering is line-oriented and round-trips exactly; values escape newlines
// and backslashes so arbitrary strings survive.
struct Report {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }
  void add(const std::string& key, const char* value) {
    entries.emplace_back(key, std::string(value));
  }
  void add(const std::string& key, long long value) {
    entries.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, int value) {
    entries.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, bool value) {
    entries.emplace_back(key, value ? "true" : "false");
  }

  std::string get(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return v;
    throw Error(ErrorKind::BadArgument, "no report key '" + key + "'");
  }

  bool operator==(const Report& o) const { return entries == o.entries; }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '\\') out += "\\\\";
      else if (c == '\n') out += "\\n";
      else out += c;
    }
    return out;
  }

  static std::string unescape(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) {
        ++i;
        out += s[i] == 'n' ? '\n' : s[i];
      } else {
        out += s[i];
      }
    }
    return out;
  }

  std::string to_machine() const {
    std::string out;
    for (const auto& [k, v] : entries) out += k + "=" + escape(v) + "\n";
    return out;
  }

  static Report from_machine(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::Syntax, "malformed report line: " + line);
      r.entries.emplace_back(line.substr(0, eq), unescape(line.substr(eq + 1)));
    }
    return r;
  }
};

}  // namespace uag
