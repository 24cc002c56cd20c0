#include "subsum/sequence_spec.hpp"

#include <nlohmann/json.hpp>

namespace subsum {

using nlohmann::json;

SequenceSpec SequenceSpec::geometric(Rational c, std::vector<Rational> prefix) {
  SequenceSpec s;
  s.prefix = std::move(prefix);
  s.tail = TailKind::Geometric;
  s.tail_param = std::move(c);
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::gn(Rational scale, std::vector<Rational> prefix) {
  SequenceSpec s;
  s.prefix = std::move(prefix);
  s.tail = TailKind::GN;
  s.tail_param = std::move(scale);
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::finite(std::vector<Rational> prefix) {
  SequenceSpec s;
  s.prefix = std::move(prefix);
  s.tail = TailKind::None;
  s.validate();
  return s;
}

void SequenceSpec::validate() const {
  for (const Rational& x : prefix)
    if (x <= 0) throw std::invalid_argument("SequenceSpec: prefix terms must be positive");
  if (tail != TailKind::None && tail_param <= 0)
    throw std::invalid_argument("SequenceSpec: tail parameter must be positive");
  if (tail == TailKind::None && prefix.empty())
    throw std::invalid_argument("SequenceSpec: empty sequence");
}

Rational SequenceSpec::tail_sum() const {
  switch (tail) {
    case TailKind::Geometric: return tail_param;
    case TailKind::GN: return tail_param * Rational(5, 3);
    default: return 0;
  }
}

Rational SequenceSpec::total_sum() const {
  Rational s = tail_sum();
  for (const Rational& x : prefix) s += x;
  return s;
}

Rational SequenceSpec::tail_term(int n) const {
  if (n < 1) throw std::invalid_argument("tail_term: index must be >= 1");
  switch (tail) {
    case TailKind::Geometric: {
      Int p = Int(1) << n;
      return tail_param / Rational(p);
    }
    case TailKind::GN: {
      // scale * (3/4, 2/4, 3/16, 2/16, ...)
      int level = (n + 1) / 2;
      Int p = 1;
      for (int i = 0; i < level; ++i) p *= 4;
      int digit = (n % 2 == 1) ? 3 : 2;
      return tail_param * Rational(digit, p);
    }
    default:
      throw std::invalid_argument("tail_term: sequence has no tail");
  }
}

FiniteSequence SequenceSpec::truncate(int depth) const {
  if (tail == TailKind::None) return FiniteSequence(prefix);
  if (depth < 1) throw std::invalid_argument("truncate: depth must be >= 1");
  std::vector<Rational> terms = prefix;
  for (int n = 1; n <= depth; ++n) terms.push_back(tail_term(n));
  return FiniteSequence(std::move(terms));
}

std::string SequenceSpec::to_json() const {
  json j;
  j["prefix"] = json::array();
  for (const Rational& x : prefix) j["prefix"].push_back(to_string(x));
  switch (tail) {
    case TailKind::Geometric:
      j["tail"] = {{"kind", "geometric"}, {"c", to_string(tail_param)}};
      break;
    case TailKind::GN:
      j["tail"] = {{"kind", "gn"}, {"scale", to_string(tail_param)}};
      break;
    default:
      j["tail"] = {{"kind", "none"}};
  }
  return j.dump();
}

SequenceSpec SequenceSpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("spec JSON parse error: ") + e.what());
  }
  SequenceSpec s;
  if (j.contains("prefix")) {
    for (const auto& p : j.at("prefix")) s.prefix.push_back(parse_rational(p.get<std::string>()));
  }
  std::string kind = "none";
  if (j.contains("tail")) kind = j.at("tail").value("kind", "none");
  if (kind == "geometric") {
    s.tail = TailKind::Geometric;
    s.tail_param = parse_rational(j.at("tail").value("c", "1"));
  } else if (kind == "gn") {
    s.tail = TailKind::GN;
    s.tail_param = parse_rational(j.at("tail").value("scale", "1"));
  } else if (kind == "none") {
    s.tail = TailKind::None;
  } else {
    throw std::invalid_argument("unknown tail kind: " + kind);
  }
  s.validate();
  return s;
}

}  // namespace subsum
