#include <doctest.h>

#include "subsum/table.hpp"

using namespace subsum;

TEST_CASE("published table shape") {
  const auto& rows = published_rows();
  CHECK(rows.size() == 33);
  for (const auto& r : rows) {
    CHECK(r.set.contains(1));
    CHECK_FALSE(r.set.symbolic());
  }
  CHECK(rows.front().set == RangeSet{1});
  CHECK(rows.back().set == RangeSet{1, 3, 5, 7});
}

TEST_CASE("exclusion laws cover every published non-interval row") {
  for (const auto& r : published_rows()) {
    auto reason = interval_filling_exclusion(r.set);
    if (r.published_i1 == PublishedVerdict::No) {
      INFO("no exclusion found for ", r.set.str());
      CHECK(reason.has_value());
    } else if (r.published_i1 == PublishedVerdict::Yes) {
      INFO("spurious exclusion ", reason.value_or(""), " for ", r.set.str());
      CHECK_FALSE(reason.has_value());
    }
  }
}

TEST_CASE("exclusion fixtures") {
  CHECK(interval_filling_exclusion(RangeSet{1, 3}).has_value());
  CHECK(interval_filling_exclusion(RangeSet{1, 2, 4}).has_value());
  CHECK(interval_filling_exclusion(RangeSet{1, 2, 4, 6}).has_value());
  CHECK(interval_filling_exclusion(RangeSet{1, 2, 3, 5}).has_value());
  CHECK_FALSE(interval_filling_exclusion(RangeSet{1, 2}).has_value());
  CHECK_FALSE(interval_filling_exclusion(RangeSet{1, 2, 3}).has_value());
  CHECK_FALSE(interval_filling_exclusion(RangeSet{1, 2, 3, 4}).has_value());
}

TEST_CASE("full report reproduces the published table") {
  auto rep = table_report(SearchBounds{8, 12, 40});
  CHECK(rep.contradictions == 0);
  CHECK(rep.rows.size() == 33);

  int decided_yes_f = 0;
  for (const auto& r : rep.rows) {
    CHECK_FALSE(r.contradiction);
    if (r.published_i1 == PublishedVerdict::Yes) CHECK(r.i1.decision == Decision::Yes);
    if (r.published_i1 == PublishedVerdict::No) CHECK(r.i1.decision == Decision::No);
    if (r.published_f == PublishedVerdict::Yes) {
      CHECK(r.f.decision == Decision::Yes);
      ++decided_yes_f;
    }
    if (r.published_f == PublishedVerdict::No) CHECK(r.f.decision == Decision::No);
    if (r.published_cv == PublishedVerdict::Yes) CHECK(r.cv.decision == Decision::Yes);
    if (r.i1.decision == Decision::Yes || r.f.decision == Decision::Yes ||
        r.cv.decision == Decision::Yes)
      CHECK_FALSE((r.f.method.empty() && r.i1.method.empty() && r.cv.method.empty()));
  }
  CHECK(decided_yes_f == 20);

  auto text = table_to_text(rep);
  CHECK(text.find("contradictions: 0") != std::string::npos);
  auto json = table_to_json(rep);
  CHECK(json.find("\"contradictions\"") != std::string::npos);
}
