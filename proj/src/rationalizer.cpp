#include "subsum/rationalizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace subsum {

void SymbolicSequence::validate() const {
  if (basis_size < 1) throw std::invalid_argument("basis size must be >= 1");
  if (entries.empty()) throw std::invalid_argument("symbolic sequence is empty");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (static_cast<int>(entries[i].size()) != basis_size)
      throw std::invalid_argument("entry " + std::to_string(i) + " has wrong arity");
    if (std::all_of(entries[i].begin(), entries[i].end(),
                    [](const Rational& z) { return z == 0; }))
      throw std::invalid_argument("entry " + std::to_string(i) + " is the zero vector");
  }
}

std::string SymbolicSequence::to_json() const {
  nlohmann::json j;
  j["basis"] = basis_size;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& z : e) row.push_back(to_string(z));
    j["entries"].push_back(row);
  }
  return j.dump();
}

SymbolicSequence SymbolicSequence::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SymbolicSequence seq;
  seq.basis_size = j.at("basis").get<int>();
  for (const auto& row : j.at("entries")) {
    std::vector<Rational> e;
    for (const auto& z : row) e.push_back(parse_rational(z.get<std::string>()));
    seq.entries.push_back(std::move(e));
  }
  seq.validate();
  return seq;
}

RangeSet symbolic_range(const SymbolicSequence& seq, int max_len) {
  seq.validate();
  int n = static_cast<int>(seq.entries.size());
  if (n > max_len) throw ResourceLimitError("symbolic sequence longer than limit");
  std::map<std::vector<Rational>, Int> counts;
  std::vector<Rational> zero(seq.basis_size, 0);
  counts[zero] = 1;
  for (const auto& e : seq.entries) {
    std::map<std::vector<Rational>, Int> next = counts;
    for (const auto& [vec, c] : counts) {
      std::vector<Rational> shifted = vec;
      for (int j = 0; j < seq.basis_size; ++j) shifted[j] += e[j];
      next[shifted] += c;
    }
    counts = std::move(next);
  }
  RangeSet out;
  for (const auto& [vec, c] : counts) out.finites.insert(c);
  return out;
}

Int rationalize_base(const SymbolicSequence& seq) {
  seq.validate();
  // Coefficients of a subset-sum collision lie in (1/D)Z with absolute value
  // at most the coordinate sum S, so any K >= 2*D*S + 2 separates them.
  Rational total = 0;
  Int d = 1;
  for (const auto& e : seq.entries)
    for (const Rational& z : e) {
      total += abs(z);
      d = boost::multiprecision::lcm(d, den(z));
    }
  Rational bound = 2 + 2 * d * total;
  Int k = num(bound) / den(bound);
  if (k < bound) ++k;  // ceiling
  return k;
}

FiniteSequence rationalize(const SymbolicSequence& seq, int max_len) {
  seq.validate();
  Int k = rationalize_base(seq);

  std::vector<Rational> images;
  std::set<Rational> distinct;
  Int common_den = 1;
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    Rational phi = 0;
    Rational power = 1;
    for (int j = 0; j < seq.basis_size; ++j) {
      power *= k;
      phi += seq.entries[i][j] * power;
    }
    if (phi <= 0)
      throw std::invalid_argument("entry " + std::to_string(i) +
                                  " has non-positive phi-image " + to_string(phi));
    images.push_back(phi);
    distinct.insert(phi);
    common_den = boost::multiprecision::lcm(common_den, den(phi));
  }
  if (distinct.size() != images.size()) {
    // Distinct entries always map to distinct images; a collision here means
    // the input repeated an entry, which is legitimate.
    std::set<std::vector<Rational>> uniq(seq.entries.begin(), seq.entries.end());
    if (uniq.size() != distinct.size())
      throw std::runtime_error("phi is not injective on distinct entries");
  }

  std::vector<Rational> terms;
  for (const Rational& phi : images) terms.push_back(phi * common_den);
  FiniteSequence result(terms);

  if (range_of(result, max_len) != symbolic_range(seq, max_len))
    throw std::runtime_error("base K failed coefficient separation");
  return result;
}

}  // namespace subsum
