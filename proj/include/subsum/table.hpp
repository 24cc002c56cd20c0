#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subsum/f_search.hpp"

namespace subsum {

/// A published cell: attainable, proved unattainable, or left blank.
enum class PublishedVerdict { Yes, No, Unknown };

/// What this artifact can say about a cell on its own.
enum class Decision { Yes, No, Undecided };

struct TableCell {
  Decision decision = Decision::Undecided;
  std::string method;  // construction, witness, or exclusion citation
};

struct TableRow {
  RangeSet set;
  PublishedVerdict published_i1, published_i, published_f, published_c, published_cv, published_r;
  TableCell i1, i, f, cv;  // computed columns
  bool contradiction = false;
};

struct TableReport {
  std::vector<TableRow> rows;
  int contradictions = 0;
  SearchBounds bounds;
};

/// The published classification of ranges with max <= 6 (plus {1,3,5,7}),
/// in row order.
const std::vector<TableRow>& published_rows();

/// Certified reason a set cannot be the range over an interval-filling
/// sequence, or nullopt when the known exclusion laws do not apply.
std::optional<std::string> interval_filling_exclusion(const RangeSet& m);

/// Recomputes every cell the engines can decide: interval ranges via
/// range_exact constructions and the exclusion laws, finite ranges via the
/// bounded search and the binomial certificate, Cantorval ranges via the
/// digit-automaton fixtures and the product construction. Cells beyond the
/// engines stay Undecided; disagreements with the published table are counted.
TableReport table_report(const SearchBounds& bounds, int threads = 1,
                         std::uint64_t candidate_ceiling = kDefaultCandidateCeiling);

std::string table_to_json(const TableReport& report);
std::string table_to_text(const TableReport& report);

}  // namespace subsum
