#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subsum/combinators.hpp"
#include "subsum/config.hpp"
#include "subsum/digest.hpp"
#include "subsum/f_search.hpp"
#include "subsum/gn.hpp"
#include "subsum/kakeya.hpp"
#include "subsum/rationalizer.hpp"
#include "subsum/table.hpp"
#include "subsum/tail_engine.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json report_head(const std::string& input) {
  return json{{"version", kVersion}, {"input_digest", subsum::fnv1a_hex(input)}};
}

json range_to_json(const subsum::RangeSet& m) {
  json arr = json::array();
  for (const auto& v : m.finites) arr.push_back(static_cast<long long>(v));
  if (m.has_omega) arr.push_back("omega");
  if (m.has_continuum) arr.push_back("continuum");
  return arr;
}

json cardinal_to_json(const subsum::CardinalValue& c) {
  if (c.is_finite()) return static_cast<long long>(c.value());
  return c.str();
}

void emit(const json& j, bool text) {
  if (text) {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
                << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact achievement-set and cardinal-function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format = "json";
  app.add_option("--config", config_path, "limits config file (key = value lines)");
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string spec_path, x_str, y_str, a_str, b_str, out_path;
  int opt_len = -1, opt_term = -1, opt_sum = -1, threads = 0;

  auto* c_range = app.add_subcommand("range", "exact range of the cardinal function");
  c_range->add_option("--spec", spec_path, "sequence spec JSON file")->required();

  auto* c_point = app.add_subcommand("point", "cardinal function at one point");
  c_point->add_option("--spec", spec_path)->required();
  c_point->add_option("--x", x_str, "evaluation point p/q")->required();

  auto* c_kakeya = app.add_subcommand("kakeya", "tail-sum classification report");
  c_kakeya->add_option("--spec", spec_path)->required();

  auto* c_cis = app.add_subcommand("cis", "does adjoining y preserve the range");
  c_cis->add_option("--spec", spec_path)->required();
  c_cis->add_option("--y", y_str, "adjoined term p/q")->required();

  auto* c_search = app.add_subcommand("search-f", "bounded search over integer tuples");
  c_search->add_option("--max-len", opt_len, "max sequence length");
  c_search->add_option("--max-term", opt_term, "max term value");
  c_search->add_option("--max-sum", opt_sum, "max total sum");
  c_search->add_option("--threads", threads, "worker count (0 = SUBSUM_THREADS)");
  c_search->add_option("--out", out_path, "write the result map to this file");

  auto* c_gn = app.add_subcommand("gn", "Guthrie-Nymann Cantorval queries");
  c_gn->require_subcommand(1);
  auto* c_gn_count = c_gn->add_subcommand("count", "representation count at x");
  c_gn_count->add_option("--x", x_str)->required();
  auto* c_gn_pattern = c_gn->add_subcommand("pattern", "double-representation pattern check");
  c_gn_pattern->add_option("--a", a_str, "digit string, e.g. 2:(5)")->required();
  c_gn_pattern->add_option("--b", b_str, "digit string, e.g. 3:(2)")->required();
  auto* c_gn_prefix = c_gn->add_subcommand("prefix", "count for a prefixed GN spec");
  c_gn_prefix->add_option("--spec", spec_path)->required();
  c_gn_prefix->add_option("--x", x_str)->required();

  auto* c_rat = app.add_subcommand("rationalize", "integer sequence with the same range");
  c_rat->add_option("--spec", spec_path, "symbolic sequence JSON file")->required();

  auto* c_table = app.add_subcommand("table", "classification table reproduction");
  c_table->add_option("--max-len", opt_len)->default_val(8);
  c_table->add_option("--max-term", opt_term)->default_val(12);
  c_table->add_option("--max-sum", opt_sum)->default_val(40);
  c_table->add_option("--threads", threads);

  CLI11_PARSE(app, argc, argv);
  bool text = format == "text";

  try {
    subsum::Limits limits;
    if (!config_path.empty()) limits = subsum::load_limits(config_path);

    if (*c_range) {
      std::string input = slurp(spec_path);
      auto spec = subsum::SequenceSpec::from_json(input);
      json j = report_head(input);
      j["range"] = range_to_json(subsum::range_exact(spec, limits.max_prefix_len));
      emit(j, text);
    } else if (*c_point) {
      std::string input = slurp(spec_path);
      auto spec = subsum::SequenceSpec::from_json(input);
      json j = report_head(input + "\n" + x_str);
      j["x"] = x_str;
      j["count"] = cardinal_to_json(subsum::point_count(spec, subsum::parse_rational(x_str)));
      emit(j, text);
    } else if (*c_kakeya) {
      std::string input = slurp(spec_path);
      auto spec = subsum::SequenceSpec::from_json(input);
      auto rep = subsum::analyze(spec);
      json j = report_head(input);
      j["classification"] = subsum::classification_name(rep.classification);
      j["strict_set"] = rep.strict_set;
      j["violation_set"] = rep.violation_set;
      if (rep.interval_count > 0)
        j["interval_count"] = static_cast<long long>(rep.interval_count);
      json constraints = json::array();
      for (const auto& c : subsum::implied_constraints(spec))
        constraints.push_back({{"constraint", c.str()}, {"anchor", c.anchor}});
      j["constraints"] = constraints;
      emit(j, text);
    } else if (*c_cis) {
      std::string input = slurp(spec_path);
      auto spec = subsum::SequenceSpec::from_json(input);
      bool contains =
          subsum::cis_contains(spec, subsum::parse_rational(y_str), limits.max_prefix_len);
      json j = report_head(input + "\n" + y_str);
      j["y"] = y_str;
      j["contains"] = contains;
      emit(j, text);
      return contains ? 0 : 1;
    } else if (*c_search) {
      subsum::SearchBounds bounds;
      if (opt_len >= 0) bounds.max_length = opt_len;
      if (opt_term >= 0) bounds.max_term = opt_term;
      if (opt_sum >= 0) bounds.max_sum = opt_sum;
      auto found =
          subsum::search_ranges(bounds, threads, limits.max_search_candidates);
      json j = report_head(std::to_string(opt_len) + "," + std::to_string(opt_term) + "," +
                           std::to_string(opt_sum));
      json map = json::object();
      for (const auto& [range, witness] : found) map[range.str()] = witness.sequence;
      j["ranges"] = map;
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << j.dump(2) << "\n";
      }
      emit(j, text);
    } else if (*c_gn_count) {
      json j = report_head(x_str);
      j["x"] = x_str;
      j["count"] = cardinal_to_json(
          subsum::gn_count(subsum::parse_rational(x_str), limits.max_automaton_states));
      emit(j, text);
    } else if (*c_gn_pattern) {
      auto verdict = subsum::pattern_check(subsum::DigitString::parse(a_str),
                                           subsum::DigitString::parse(b_str));
      json j = report_head(a_str + "\n" + b_str);
      j["equal_values"] = verdict.equal_values;
      j["matches_pattern"] = verdict.matches_pattern;
      j["markers"] = verdict.markers;
      emit(j, text);
    } else if (*c_gn_prefix) {
      std::string input = slurp(spec_path);
      auto spec = subsum::SequenceSpec::from_json(input);
      json j = report_head(input + "\n" + x_str);
      j["x"] = x_str;
      j["count"] = cardinal_to_json(subsum::gn_prefix_count(
          spec, subsum::parse_rational(x_str), limits.max_automaton_states));
      emit(j, text);
    } else if (*c_rat) {
      std::string input = slurp(spec_path);
      auto seq = subsum::SymbolicSequence::from_json(input);
      auto result = subsum::rationalize(seq, limits.max_enum_len);
      json j = report_head(input);
      j["base"] = subsum::rationalize_base(seq).str();
      json terms = json::array();
      for (const auto& t : result.terms) terms.push_back(subsum::to_string(t));
      j["sequence"] = terms;
      j["range"] = range_to_json(subsum::range_of(result, limits.max_enum_len));
      emit(j, text);
    } else if (*c_table) {
      subsum::SearchBounds bounds;
      bounds.max_length = opt_len;
      bounds.max_term = opt_term;
      bounds.max_sum = opt_sum;
      auto report = subsum::table_report(bounds, threads, limits.max_search_candidates);
      if (text) {
        std::cout << subsum::table_to_text(report);
      } else {
        json j = json::parse(subsum::table_to_json(report));
        j.update(report_head(std::to_string(opt_len) + "," + std::to_string(opt_term) + "," +
                             std::to_string(opt_sum)));
        std::cout << j.dump(2) << "\n";
      }
    }
  } catch (const subsum::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
