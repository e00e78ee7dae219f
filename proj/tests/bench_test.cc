/*
 * Copyright 2026 The dqot Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "dqot/bench/supersonic_bench.h"
#include "gtest/gtest.h"

namespace dqot {
namespace {

BenchReport Bench(uint64_t invocations, int repeat) {
  BenchOptions options;
  options.invocations = invocations;
  options.repeat = repeat;
  auto report = BenchSupersonic(options);
  EXPECT_TRUE(report.ok());
  return *report;
}

TEST(BenchTest, FivePhasesAndConsistentTotal) {
  BenchReport r = Bench(100, 5);
  EXPECT_EQ(r.protocol, "supersonic");
  EXPECT_EQ(r.invocations, 100u);
  EXPECT_EQ(r.repeat, 5);
  EXPECT_EQ(r.failures, 0u);
  double sum = 0;
  for (double ms : r.phase_ms) {
    EXPECT_GE(ms, 0.0);
    sum += ms;
  }
  EXPECT_NEAR(r.total_ms, sum, 1e-9 + 1e-9 * sum);
}

TEST(BenchTest, CsvSchema) {
  std::string csv = BenchCsv({Bench(1, 2), Bench(10, 2)});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "protocol,invocations,phase,ms");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 10u);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string prefix = std::string("supersonic,") + (i < 5 ? "1" : "10") +
                         ",phase" + std::to_string(i % 5 + 1) + ",";
    EXPECT_EQ(rows[i].rfind(prefix, 0), 0u) << rows[i];
  }
}

TEST(BenchTest, TableHasTotalRow) {
  std::string table = BenchTable({Bench(1, 2)});
  EXPECT_NE(table.find("phase1"), std::string::npos);
  EXPECT_NE(table.find("phase5"), std::string::npos);
  EXPECT_NE(table.find("total"), std::string::npos);
}

TEST(BenchTest, MonotoneInInvocationCount) {
  std::vector<BenchReport> reports = {Bench(10, 5), Bench(1000, 5),
                                      Bench(100000, 2)};
  for (size_t i = 1; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].failures, 0u);
    for (size_t p = 0; p < kSupersonicPhases; ++p) {
      EXPECT_GE(reports[i].phase_ms[p], reports[i - 1].phase_ms[p])
          << "phase" << p + 1 << " at " << reports[i].invocations;
    }
    EXPECT_GE(reports[i].total_ms, reports[i - 1].total_ms);
  }
}

TEST(BenchTest, RejectsBadOptions) {
  BenchOptions zero_repeat;
  zero_repeat.repeat = 0;
  EXPECT_FALSE(BenchSupersonic(zero_repeat).ok());
  BenchOptions zero_sigma;
  zero_sigma.sigma = 0;
  EXPECT_FALSE(BenchSupersonic(zero_sigma).ok());
}

}  // namespace
}  // namespace dqot
