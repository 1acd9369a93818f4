#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "conicnet/audit.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace conicnet;

namespace {

std::uint64_t tally(const AuditReport& r, const std::string& label) {
  for (const auto& row : r.rows)
    if (row.label == label) return row.tally;
  return 0;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("conicnet_test_" + name);
}

}  // namespace

TEST(Audit, PlanesAtThree) {
  const auto f = Field::of_order(3);
  const AuditReport r = audit_planes(f);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.scanned, 33880u);
  EXPECT_EQ(r.rows.size(), 15u);
  EXPECT_EQ(tally(r, "Sigma14"), 0u);
  EXPECT_GT(tally(r, "Sigma14prime"), 0u);
  std::uint64_t sum = 0;
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.consistent) << row.label;
    EXPECT_EQ(row.tally * row.stabilizer_order, 5616u) << row.label;
    sum += row.tally;
  }
  EXPECT_EQ(sum, r.counters.at("planes_meeting_veronesean"));
  EXPECT_EQ(r.counters.at("lemma_b_lt_q_violations"), 0u);
  EXPECT_EQ(r.counters.at("n1_out_of_range"), 0u);
}

TEST(Audit, WorkerCountDoesNotChangeTheReport) {
  const auto f = Field::of_order(3);
  AuditOptions one;
  one.shard_size = 1000;
  AuditOptions four = one;
  four.workers = 4;
  EXPECT_EQ(audit_planes(f, one).to_csv(), audit_planes(f, four).to_csv());
  EXPECT_EQ(audit_lines(f, one).to_json(), audit_lines(f, four).to_json());
}

TEST(Audit, CheckpointResume) {
  const auto f = Field::of_order(3);
  const auto path = temp_path("checkpoint.json");
  std::filesystem::remove(path);
  AuditOptions options;
  options.checkpoint_path = path.string();
  options.shard_size = 2000;
  const AuditReport first = audit_planes(f, options);
  EXPECT_EQ(first.shards_resumed, 0u);
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto doc = nlohmann::json::parse(std::ifstream(path));
  EXPECT_EQ(doc.at("kind"), "planes");
  EXPECT_EQ(doc.at("shards").size(), first.shards);

  const AuditReport second = audit_planes(f, options);
  EXPECT_EQ(second.shards_resumed, second.shards);
  EXPECT_EQ(first.to_csv(), second.to_csv());
  EXPECT_EQ(first.to_json(), second.to_json());

  // A checkpoint for another q is rejected rather than silently merged.
  EXPECT_THROW(audit_planes(Field::of_order(5), options), Error);
  std::filesystem::remove(path);
}

TEST(Audit, LinesAtThree) {
  const AuditReport r = audit_lines(Field::of_order(3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.scanned, 11011u);
  EXPECT_EQ(r.rows.size(), 15u);
  EXPECT_EQ(r.counters.at("partition_orbits"), 15u);
  EXPECT_EQ(r.counters.at("orbits_with_mixed_labels"), 0u);
  EXPECT_EQ(r.counters.at("internal_inconsistency"), 0u);
}

TEST(Audit, PointsAndConic) {
  for (int q : {3, 5}) {
    const auto f = Field::of_order(q);
    const AuditReport p = audit_points(f);
    EXPECT_TRUE(p.ok()) << q;
    EXPECT_EQ(tally(p, "P1"), static_cast<std::uint64_t>(q * q + q + 1));
    const AuditReport c = audit_conic(f);
    EXPECT_TRUE(c.ok()) << q;
    EXPECT_EQ(tally(c, "External"), static_cast<std::uint64_t>(q * (q + 1) / 2));
    EXPECT_EQ(tally(c, "Internal"), static_cast<std::uint64_t>(q * (q - 1) / 2));
  }
}

TEST(Audit, SolidsAtThree) {
  const AuditReport r = audit_solids(Field::of_order(3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.counters.at("partition_orbits"), 15u);
  EXPECT_EQ(r.counters.at("solid_classes"), 15u);
}

TEST(Audit, ReportSerialization) {
  const AuditReport r = audit_points(Field::of_order(3));
  const std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,tally,expected_orbit_size,stabilizer_order,consistent");
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("q"), 3);
  EXPECT_FALSE(j.contains("seconds"));
}
