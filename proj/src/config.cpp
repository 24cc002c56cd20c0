#include "subsum/config.hpp"

#include <fstream>
#include <stdexcept>

namespace subsum {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Limits load_limits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  Limits limits;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "max_prefix_len") {
        limits.max_prefix_len = std::stoi(value);
      } else if (key == "max_search_candidates") {
        limits.max_search_candidates = std::stoull(value);
      } else if (key == "max_automaton_states") {
        limits.max_automaton_states = std::stoi(value);
      } else if (key == "max_enum_len") {
        limits.max_enum_len = std::stoi(value);
      } else {
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": unknown key " + key);
      }
    } catch (const std::out_of_range&) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": value out of range");
    }
  }
  return limits;
}

}  // namespace subsum
