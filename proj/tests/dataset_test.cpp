#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "pokerprob/dataset.hpp"

using namespace pokerprob;

namespace {

std::string to_csv(const std::vector<DatasetRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  return os.str();
}

GenConfig small_config(std::uint64_t count) {
  GenConfig c;
  c.count = count;
  c.label_n = 200;
  c.master_seed = 17;
  return c;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pokerprob_" + name);
}

}  // namespace

TEST(Generate, RecordsDependOnlyOnIndex) {
  auto two = generate(small_config(2));
  auto one = generate(small_config(1));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], one[0]);
  EXPECT_EQ(two[1], generate_record(small_config(2), 1));
}

TEST(Generate, IdenticalOutputAcrossRunsAndJobs) {
  auto config = small_config(60);
  const std::string base = to_csv(generate(config));
  EXPECT_EQ(base, to_csv(generate(config)));
  config.jobs = 4;
  EXPECT_EQ(base, to_csv(generate(config)));
  config.master_seed = 18;
  EXPECT_NE(base, to_csv(generate(config)));
}

TEST(Generate, LabelsValidAndFeaturesAudit) {
  auto config = small_config(200);
  for (const auto& r : generate(config)) {
    EXPECT_LE(r.label_win + r.label_tie, 1.0);
    EXPECT_GE(r.label_win, 0.0);
    double k = r.label_win * config.label_n;
    EXPECT_NEAR(k, std::round(k), 1e-9);
    EXPECT_EQ(r.features, extract_features(r.state));
  }
}

TEST(Generate, StageMixIsHonoured) {
  auto config = small_config(400);
  config.stage_mix = {0, 0, 1, 0};
  for (const auto& r : generate(config)) EXPECT_EQ(r.state.stage(), Stage::Turn);
  config.stage_mix = {1, 0, 0, 3};
  std::set<Stage> seen;
  for (const auto& r : generate(config)) seen.insert(r.state.stage());
  EXPECT_EQ(seen, (std::set<Stage>{Stage::Preflop, Stage::River}));
}

TEST(Generate, RoyalBoardRecordIsForcedTie) {
  auto r = make_record(GameState::parse("2c 3d", "Ts Js Qs Ks As"), 1000, 5);
  EXPECT_EQ(r.label_win, 0.0);
  EXPECT_EQ(r.label_tie, 1.0);
}

TEST(GenConfig, Validation) {
  GenConfig c;
  c.count = 0;
  EXPECT_THROW(c.validate(), ContractViolation);
  c = GenConfig{};
  c.label_n = 0;
  EXPECT_THROW(c.validate(), ContractViolation);
  c = GenConfig{};
  c.stage_mix = {0, 0, 0, 0};
  EXPECT_THROW(c.validate(), ContractViolation);
  c.stage_mix = {1, -1, 0, 0};
  EXPECT_THROW(c.validate(), ContractViolation);
}

TEST(Split, SizesFollowRounding) {
  std::vector<DatasetRecord> records(250000);
  auto [train, test] = split(records, 0.9, 1);
  EXPECT_EQ(train.size(), 225000u);
  EXPECT_EQ(test.size(), 25000u);

  auto ten = generate(small_config(10));
  auto [tr, te] = split(ten, 0.9, 3);
  EXPECT_EQ(tr.size(), 9u);
  EXPECT_EQ(te.size(), 1u);
}

TEST(Split, DeterministicDisjointExhaustive) {
  auto records = generate(small_config(50));
  auto a = split(records, 0.9, 7);
  auto b = split(records, 0.9, 7);
  EXPECT_EQ(a, b);
  std::multiset<std::string> all, parts;
  for (const auto& r : records) all.insert(r.state.to_string());
  for (const auto& r : a.first) parts.insert(r.state.to_string());
  for (const auto& r : a.second) parts.insert(r.state.to_string());
  EXPECT_EQ(all, parts);
  EXPECT_NE(split(records, 0.9, 8).first, a.first);
}

TEST(Split, Errors) {
  EXPECT_THROW(split({}, 0.9, 1), ContractViolation);
  auto records = generate(small_config(3));
  EXPECT_THROW(split(records, 1.0, 1), ContractViolation);
  EXPECT_THROW(split(records, 0.0, 1), ContractViolation);
}

TEST(Csv, HeaderAndRoundTrip) {
  auto records = generate(small_config(40));
  auto path = temp_file("roundtrip.csv");
  save_csv(records, path.string());
  std::ifstream is(path);
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header,
            "state,f1,f2,f3,f4,f5,f6,f7,f8,f9,f10,f11,f12,f13,f14,f15,f16,f17,f18,f19,f20,f21,f22,f23,f"
            "24,f25,f26,f27,f28,f29,label_win,label_tie");
  EXPECT_EQ(load_csv(path.string()), records);
  std::filesystem::remove(path);
}

TEST(Csv, ShortRowReportsLineNumber) {
  std::ostringstream os;
  write_csv(os, generate(small_config(1)));
  std::string first_row = os.str().substr(csv_header().size() + 1);
  first_row.pop_back();
  // Drop f29, leaving a 28-feature row.
  std::vector<std::string> fields;
  std::istringstream cells(first_row);
  for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
  ASSERT_EQ(fields.size(), 32u);
  fields.erase(fields.begin() + 29);
  std::string short_row = fields[0];
  for (std::size_t i = 1; i < fields.size(); ++i) short_row += "," + fields[i];

  std::istringstream is(csv_header() + "\n" + first_row + "\n" + short_row + "\n");
  try {
    read_csv(is);
    FAIL() << "expected MalformedRow";
  } catch (const MalformedRow& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, BadContentIsRejected) {
  std::istringstream bad_header("state,f1\n");
  EXPECT_THROW(read_csv(bad_header), MalformedRow);
  std::string zeros;
  for (int i = 0; i < 31; ++i) zeros += ",0";
  std::istringstream bad_state(csv_header() + "\nXx Ah|" + zeros + "\n");
  EXPECT_THROW(read_csv(bad_state), MalformedRow);
  std::istringstream bad_number(csv_header() + "\nAs Ah|" + zeros.substr(0, zeros.size() - 1) + "z\n");
  EXPECT_THROW(read_csv(bad_number), MalformedRow);
  std::istringstream ok(csv_header() + "\nAs Ah|" + zeros + "\n");
  EXPECT_EQ(read_csv(ok).size(), 1u);
  EXPECT_THROW(load_csv("/nonexistent/dir/data.csv"), IoError);
}
