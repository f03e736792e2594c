#include <gtest/gtest.h>

#include "nkt/expr_parser.hpp"
#include "nkt/golden.hpp"
#include "support/golden_copy.hpp"

using namespace nkt;
using test_support::GoldenCopy;
using Status = ClassificationRow::Status;

namespace {

const ClassificationRow& row(const TableReport& r, PresetName p) {
  for (const auto& x : r.rows)
    if (x.preset == p) return x;
  throw std::runtime_error("row not found");
}

}  // namespace

TEST(Golden, RowCounts) {
  const std::map<int, std::size_t> expected = {{2, 19}, {3, 19}, {4, 19}, {5, 8}, {6, 9}, {7, 10}};
  for (auto [which, count] : expected) {
    TableReport r = reproduce_table(which);
    EXPECT_EQ(r.rows.size(), count) << which;
    EXPECT_TRUE(r.ok()) << which;
    EXPECT_EQ(load_golden(which).size() + table_spec(which).absent.size(), count);
  }
}

TEST(Golden, Table2MatchesExactly) {
  TableReport r = reproduce_table(2);
  EXPECT_EQ(r.count(Status::match), 19u);
  const auto& w3 = row(r, PresetName::W3);
  ASSERT_TRUE(w3.kappa);
  EXPECT_TRUE(w3.kappa->root.is_zero());
  EXPECT_EQ(w3.rendered_value(), "0");
  EXPECT_EQ(row(r, PresetName::C).rendered_value(), "a real number");
}

TEST(Golden, SpecAnchors) {
  const std::vector<std::pair<int, PresetName>> anchors = {
      {3, PresetName::C}, {3, PresetName::P}, {3, PresetName::L},  {4, PresetName::M},  {4, PresetName::W6},
      {5, PresetName::L}, {5, PresetName::W7}, {6, PresetName::W1}, {6, PresetName::W4}, {7, PresetName::P},
      {7, PresetName::W1}, {6, PresetName::W5}, {5, PresetName::M}};
  std::map<int, TableReport> tables;
  for (int which = 3; which <= 7; ++which) tables[which] = reproduce_table(which);
  for (auto [which, p] : anchors) EXPECT_EQ(row(tables[which], p).status, Status::match) << which;

  const auto& w5 = row(tables[6], PresetName::W5);
  EXPECT_EQ(w5.form->tag, FormTag::einstein);
  EXPECT_EQ(w5.form->b1, parse_expr("2*n*kappa"));
  const auto& m = row(tables[5], PresetName::M);
  EXPECT_EQ(m.form->tag, FormTag::einstein);
  EXPECT_EQ(m.form->b1, parse_expr("2*n*kappa"));
}

TEST(Golden, W7AbsentRowsAreFlaggedNotCompared) {
  for (int which : {3, 4}) {
    TableReport r = reproduce_table(which);
    const auto& w7 = row(r, PresetName::W7);
    EXPECT_EQ(w7.status, Status::not_compared);
    EXPECT_NE(std::find(w7.flags.begin(), w7.flags.end(), "absent-from-table"), w7.flags.end());
    EXPECT_TRUE(w7.diffs.empty());
  }
}

TEST(Golden, AllowListedDifferencesAreReported) {
  TableReport t5 = reproduce_table(5);
  const auto& w3 = row(t5, PresetName::W3);
  EXPECT_EQ(w3.status, Status::allowed);
  ASSERT_EQ(w3.diffs.size(), 1u);
  EXPECT_EQ(w3.diffs[0].field, "tag");
  EXPECT_TRUE(w3.diffs[0].allowed);
  EXPECT_FALSE(w3.diffs[0].reason.empty());
}

TEST(Golden, Table3KeepsCorollaryNote) {
  TableReport r = reproduce_table(3);
  EXPECT_FALSE(row(r, PresetName::W0).note.empty());
}

TEST(Golden, DetectsMismatch) {
  GoldenCopy copy;
  copy.replace("table6.txt", "6 | W5 | Einstein | 2*n*kappa | 0", "6 | W5 | Einstein | 2*n*kappa + 1 | 0");
  TableReport r = reproduce_table(6, copy.path());
  EXPECT_FALSE(r.ok());
  const auto& w5 = row(r, PresetName::W5);
  EXPECT_EQ(w5.status, Status::mismatch);
  ASSERT_EQ(w5.diffs.size(), 1u);
  EXPECT_EQ(w5.diffs[0].field, "b1");
  EXPECT_FALSE(w5.diffs[0].allowed);
}

TEST(Golden, RemovingAllowEntryTurnsItIntoMismatch) {
  GoldenCopy copy;
  copy.replace("allowlist.txt", "5 | W3 | tag", "5 | W2 | tag");
  TableReport r = reproduce_table(5, copy.path());
  EXPECT_EQ(row(r, PresetName::W3).status, Status::mismatch);
}

TEST(Golden, MalformedFiles) {
  GoldenCopy copy;
  copy.replace("table6.txt", "6 | W5 | Einstein | 2*n*kappa | 0", "6 | W5 | Einstein");
  try {
    load_golden(6, copy.path());
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("table6.txt:"), std::string::npos);
  }
  EXPECT_THROW(reproduce_table(8), error);
  EXPECT_THROW(load_golden(2, "/nonexistent"), error);
}
