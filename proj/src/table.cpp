#include "subsum/table.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "subsum/combinators.hpp"
#include "subsum/gn.hpp"
#include "subsum/tail_engine.hpp"

namespace subsum {

namespace {

TableRow row(std::initializer_list<int> set, PublishedVerdict i1, PublishedVerdict i,
             PublishedVerdict f, PublishedVerdict c, PublishedVerdict cv, PublishedVerdict r) {
  TableRow out;
  out.set = RangeSet(set);
  out.published_i1 = i1;
  out.published_i = i;
  out.published_f = f;
  out.published_c = c;
  out.published_cv = cv;
  out.published_r = r;
  return out;
}

constexpr PublishedVerdict Y = PublishedVerdict::Yes;
constexpr PublishedVerdict N = PublishedVerdict::No;
constexpr PublishedVerdict U = PublishedVerdict::Unknown;

std::string seq_str(const std::vector<int>& xs) {
  std::string s = "(";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

std::string prefix_str(const std::vector<Rational>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s + "]";
}

Rational r(int p, int q) { return Rational(p) / q; }

/// Pointwise fixture: expected counts of gn_prefix_count over a GN-tail spec.
bool check_gn_fixture(const std::vector<Rational>& prefix,
                      const std::vector<std::pair<Rational, int>>& points) {
  SequenceSpec spec = SequenceSpec::gn(1, prefix);
  for (const auto& [x, expected] : points)
    if (gn_prefix_count(spec, x) != CardinalValue::finite(expected)) return false;
  return true;
}

const char* decision_mark(Decision d) {
  switch (d) {
    case Decision::Yes: return "Y";
    case Decision::No: return "N";
    case Decision::Undecided: return "?";
  }
  return "?";
}

const char* paper_mark(PublishedVerdict v) {
  switch (v) {
    case PublishedVerdict::Yes: return "Y";
    case PublishedVerdict::No: return "N";
    case PublishedVerdict::Unknown: return ".";
  }
  return ".";
}

bool contradicts(Decision d, PublishedVerdict v) {
  return (d == Decision::Yes && v == PublishedVerdict::No) ||
         (d == Decision::No && v == PublishedVerdict::Yes);
}

}  // namespace

const std::vector<TableRow>& published_rows() {
  static const std::vector<TableRow> rows = {
      row({1}, N, N, Y, Y, N, Y),
      row({1, 2}, Y, Y, Y, Y, Y, Y),
      row({1, 3}, N, N, Y, Y, U, Y),
      row({1, 2, 3}, Y, Y, Y, Y, U, Y),
      row({1, 4}, N, N, N, U, U, U),
      row({1, 2, 4}, N, Y, Y, Y, Y, Y),
      row({1, 3, 4}, N, N, Y, Y, U, Y),
      row({1, 2, 3, 4}, Y, Y, Y, Y, Y, Y),
      row({1, 5}, N, N, N, U, U, U),
      row({1, 2, 5}, N, U, U, U, U, U),
      row({1, 3, 5}, N, N, U, U, U, U),
      row({1, 4, 5}, N, N, N, U, U, U),
      row({1, 2, 3, 5}, N, U, Y, Y, U, Y),
      row({1, 2, 4, 5}, N, U, Y, Y, U, Y),
      row({1, 3, 4, 5}, N, N, U, U, U, U),
      row({1, 2, 3, 4, 5}, Y, Y, U, U, U, Y),
      row({1, 6}, N, N, N, U, U, U),
      row({1, 2, 6}, N, U, U, U, U, U),
      row({1, 3, 6}, N, N, Y, Y, U, Y),
      row({1, 4, 6}, N, N, Y, Y, U, Y),
      row({1, 5, 6}, N, N, N, U, U, U),
      row({1, 2, 3, 6}, N, Y, Y, Y, Y, Y),
      row({1, 2, 4, 6}, N, U, Y, Y, U, Y),
      row({1, 2, 5, 6}, N, U, U, U, U, U),
      row({1, 3, 4, 6}, N, N, Y, Y, U, Y),
      row({1, 3, 5, 6}, N, N, U, U, U, U),
      row({1, 4, 5, 6}, N, N, Y, Y, U, Y),
      row({1, 2, 3, 4, 6}, Y, Y, Y, Y, Y, Y),
      row({1, 2, 3, 5, 6}, N, U, U, U, U, U),
      row({1, 2, 4, 5, 6}, N, U, Y, Y, U, Y),
      row({1, 3, 4, 5, 6}, N, N, Y, Y, U, Y),
      row({1, 2, 3, 4, 5, 6}, Y, Y, Y, Y, Y, Y),
      row({1, 3, 5, 7}, N, N, Y, Y, U, Y),
  };
  return rows;
}

std::optional<std::string> interval_filling_exclusion(const RangeSet& m) {
  if (m.symbolic() || !m.contains(1))
    throw std::invalid_argument("exclusion laws apply to finite ranges containing 1");
  Int mx = m.max_finite();
  if (!m.contains(2))
    return "2 in rng(f) for every bounded interval-filling range";
  if (m == RangeSet{1, 2, 4})
    return "{1,2,4} lies in I but not in I_1";
  if (m != RangeSet{1, 2} && !m.contains(3)) {
    if (mx < 7) return "3 not in M and M != {1,2} force max M >= 7";
    // The weaker gap law still applies when max is large but the first
    // element above 2 comes late.
    Int s = *m.finites.lower_bound(Int(3));
    Int gap_end = s - 1, bound = 2 * gap_end;
    if (s > 4 && mx < bound)
      return "3,...," + gap_end.str() + " not in M forces max M >= " + bound.str();
  }
  if (!m.contains(4) && mx >= 5 && mx < 7)
    return "4 not in M and max M >= 5 force max M >= 7";
  return std::nullopt;
}

TableReport table_report(const SearchBounds& bounds, int threads,
                         std::uint64_t candidate_ceiling) {
  TableReport rep;
  rep.bounds = bounds;
  rep.rows = published_rows();

  auto witnesses = search_ranges(bounds, threads, candidate_ceiling);

  static const std::map<RangeSet, std::vector<Rational>> interval_prefixes = {
      {RangeSet{1, 2}, {}},
      {RangeSet{1, 2, 3}, {r(1, 3)}},
      {RangeSet{1, 2, 3, 4}, {r(3, 4)}},
      {RangeSet{1, 2, 3, 4, 5}, {r(2, 3), r(2, 3)}},
      {RangeSet{1, 2, 3, 4, 6}, {r(1, 2), r(1, 2)}},
      {RangeSet{1, 2, 3, 4, 5, 6}, {r(3, 4), r(3, 4)}},
  };
  static const std::map<RangeSet, std::vector<Rational>> union_heads = {
      {RangeSet{1, 2, 4}, {1, 1}},
      {RangeSet{1, 2, 3, 6}, {1, 1, 1}},
  };
  static const std::map<RangeSet, std::vector<Rational>> cantorval_heads = {
      {RangeSet{1, 2, 4}, {1, 1}},
      {RangeSet{1, 2, 3, 6}, {1, 1, 1}},
      {RangeSet{1, 2, 3, 4, 6}, {1, 1, 2, 3}},
  };

  for (TableRow& tr : rep.rows) {
    // Finite ranges: a search witness decides Yes, the binomial certificate No.
    if (auto it = witnesses.find(tr.set); it != witnesses.end()) {
      tr.f = {Decision::Yes, "witness " + seq_str(it->second.sequence)};
    } else if (binomial_exclusion(tr.set)) {
      tr.f = {Decision::No, "binomial exclusion certificate"};
    } else {
      tr.f = {Decision::Undecided, "no witness at bounds, no certificate"};
    }

    // Single-interval ranges.
    if (auto it = interval_prefixes.find(tr.set); it != interval_prefixes.end()) {
      SequenceSpec spec = SequenceSpec::geometric(1, it->second);
      if (range_exact(spec) == tr.set)
        tr.i1 = {Decision::Yes, "prefix " + prefix_str(it->second) + " + geometric tail"};
    } else if (auto why = interval_filling_exclusion(tr.set)) {
      tr.i1 = {Decision::No, *why};
    }

    // Finite unions of intervals.
    if (tr.i1.decision == Decision::Yes) {
      tr.i = {Decision::Yes, "single interval: " + tr.i1.method};
    } else if (auto it = union_heads.find(tr.set); it != union_heads.end()) {
      SequenceSpec spec =
          scale_concat(FiniteSequence(it->second), SequenceSpec::geometric(1));
      if (range_exact(spec) == tr.set)
        tr.i = {Decision::Yes, "separated head " + prefix_str(it->second) +
                                   " over the geometric base"};
    }

    // Cantorval ranges.
    if (tr.set == RangeSet{1, 2}) {
      bool ok = gn_count(r(11, 12)) == CardinalValue::finite(2) &&
                gn_count(r(7, 6)) == CardinalValue::finite(1) &&
                gn_count(r(1, 4)) == CardinalValue::finite(1) &&
                gn_count(r(3, 64)) == CardinalValue::finite(2) &&
                gn_count(r(185, 192)) == CardinalValue::finite(2) &&
                gn_count(r(3, 4)) == CardinalValue::finite(2) &&
                gn_count(0) == CardinalValue::finite(1);
      if (ok) tr.cv = {Decision::Yes, "digit automaton over (3,2;1/4)"};
    } else if (tr.set == RangeSet{1, 2, 3, 4}) {
      if (check_gn_fixture({r(3, 4)}, {{0, 1}, {r(3, 16), 2}, {r(3, 4), 3}, {r(15, 16), 4}}))
        tr.cv = {Decision::Yes, "3/4 adjoined to (3,2;1/4); counts 1..4 realized, "
                                "bounded by twice the base maximum"};
    } else if (tr.set == RangeSet{1, 2, 3, 4, 5, 6}) {
      if (check_gn_fixture({r(11, 12), r(11, 12)},
                           {{r(1, 4), 1},
                            {r(3, 64), 2},
                            {r(7, 6), 3},
                            {r(11, 12), 4},
                            {r(11, 6), 5},
                            {r(361, 192), 6}}))
        tr.cv = {Decision::Yes, "11/12 adjoined twice to (3,2;1/4); counts 1..6 "
                                "realized, bounded by the two-term adjunction law"};
    } else if (auto it = cantorval_heads.find(tr.set); it != cantorval_heads.end()) {
      RangeSet head = range_of(FiniteSequence(it->second));
      if (product_range(head, RangeSet{1, 2}) == tr.set)
        tr.cv = {Decision::Yes, "finite head " + prefix_str(it->second) +
                                    " multiplied with the Cantorval base {1,2}"};
    }

    tr.contradiction = contradicts(tr.i1.decision, tr.published_i1) ||
                       contradicts(tr.i.decision, tr.published_i) ||
                       contradicts(tr.f.decision, tr.published_f) ||
                       contradicts(tr.cv.decision, tr.published_cv);
    if (tr.contradiction) ++rep.contradictions;
  }
  return rep;
}

std::string table_to_json(const TableReport& report) {
  nlohmann::json j;
  j["contradictions"] = report.contradictions;
  j["bounds"] = {{"max_length", report.bounds.max_length ? nlohmann::json(*report.bounds.max_length)
                                                          : nlohmann::json()},
                 {"max_term", report.bounds.max_term ? nlohmann::json(*report.bounds.max_term)
                                                     : nlohmann::json()},
                 {"max_sum", report.bounds.max_sum ? nlohmann::json(*report.bounds.max_sum)
                                                   : nlohmann::json()}};
  j["rows"] = nlohmann::json::array();
  for (const TableRow& tr : report.rows) {
    nlohmann::json cell = {
        {"set", tr.set.str()},
        {"published",
         {{"interval", paper_mark(tr.published_i1)},
          {"interval_union", paper_mark(tr.published_i)},
          {"finite", paper_mark(tr.published_f)},
          {"cantor", paper_mark(tr.published_c)},
          {"cantorval", paper_mark(tr.published_cv)},
          {"any", paper_mark(tr.published_r)}}},
        {"computed",
         {{"interval", {{"decision", decision_mark(tr.i1.decision)}, {"method", tr.i1.method}}},
          {"interval_union", {{"decision", decision_mark(tr.i.decision)}, {"method", tr.i.method}}},
          {"finite", {{"decision", decision_mark(tr.f.decision)}, {"method", tr.f.method}}},
          {"cantorval", {{"decision", decision_mark(tr.cv.decision)}, {"method", tr.cv.method}}}}},
        {"contradiction", tr.contradiction}};
    j["rows"].push_back(cell);
  }
  return j.dump(2);
}

std::string table_to_text(const TableReport& report) {
  std::ostringstream out;
  out << "range            I1    I     F     Cv    (computed/published; . = blank, ? = undecided)\n";
  for (const TableRow& tr : report.rows) {
    std::string set = tr.set.str();
    set.resize(std::max<size_t>(set.size(), 16), ' ');
    out << set << " " << decision_mark(tr.i1.decision) << "/" << paper_mark(tr.published_i1)
        << "   " << decision_mark(tr.i.decision) << "/" << paper_mark(tr.published_i) << "   "
        << decision_mark(tr.f.decision) << "/" << paper_mark(tr.published_f) << "   "
        << decision_mark(tr.cv.decision) << "/" << paper_mark(tr.published_cv)
        << (tr.contradiction ? "   CONTRADICTION" : "") << "\n";
  }
  out << "contradictions: " << report.contradictions << "\n";
  return out.str();
}

}  // namespace subsum
