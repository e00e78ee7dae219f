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

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int exit_code;
  std::string out;
};

Outcome RunCli(const std::string& args) {
  std::string command = std::string(DQOT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(CliTest, SupersonicRunPrintsChosenMessage) {
  Outcome o =
      RunCli("run --protocol supersonic --s 1 --m0 0f --m1 f0 --seed 7");
  EXPECT_EQ(o.exit_code, 0) << o.out;
  EXPECT_EQ(o.out, "f0\n");
}

TEST(CliTest, EveryProtocolRuns) {
  for (const char* protocol :
       {"np", "dq", "duq", "supersonic", "dq-mr", "duq-mr", "thin"}) {
    Outcome o = RunCli(std::string("run --protocol ") + protocol +
                       " --sec-bits 128 --s 0 --m0 abcd --m1 1234 --z 3 "
                       "--v 1 --n 4");
    EXPECT_EQ(o.exit_code, 0) << protocol << ": " << o.out;
    EXPECT_EQ(o.out, "abcd\n") << protocol;
  }
}

TEST(CliTest, WritesTranscript) {
  std::string path = ::testing::TempDir() + "/cli_transcript.jsonl";
  Outcome o = RunCli(
      "run --protocol dq --sec-bits 64 --s 1 --m0 01 --m1 02 "
      "--transport socket --out " +
      path);
  EXPECT_EQ(o.exit_code, 0) << o.out;
  EXPECT_EQ(o.out, "02\ntranscript: " + path + "\n");
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("hex"));
    EXPECT_FALSE(j["from"] == "R" && j["to"] == "S") << line;
    ++lines;
  }
  EXPECT_GT(lines, 0);
}

TEST(CliTest, TableChecks) {
  Outcome dq = RunCli("run --protocol dq-ot --check-tables");
  EXPECT_EQ(dq.exit_code, 0) << dq.out;
  size_t passes = 0;
  for (size_t at = dq.out.find("PASS"); at != std::string::npos;
       at = dq.out.find("PASS", at + 1)) {
    ++passes;
  }
  EXPECT_EQ(passes, 4u) << dq.out;
  EXPECT_EQ(dq.out.find("FAIL"), std::string::npos);

  Outcome ss = RunCli("run --protocol supersonic --check-tables");
  EXPECT_EQ(ss.exit_code, 0) << ss.out;
  EXPECT_EQ(ss.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli("run --protocol nonsense").exit_code, 2);
  EXPECT_EQ(RunCli("run --protocol dq --s 2").exit_code, 2);
  EXPECT_EQ(RunCli("run --protocol dq --m0 zz").exit_code, 2);
  EXPECT_EQ(RunCli("run --protocol dq --bogus-flag").exit_code, 2);
  EXPECT_EQ(RunCli("bench --invocations 10000000").exit_code, 2);
  EXPECT_EQ(RunCli("").exit_code, 2);
  EXPECT_EQ(RunCli("--help").exit_code, 0);
}

TEST(CliTest, BenchCsv) {
  std::string path = ::testing::TempDir() + "/bench.csv";
  Outcome o = RunCli("bench --invocations 1,10 --repeat 3 --out " + path);
  EXPECT_EQ(o.exit_code, 0) << o.out;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string csv = text.str();
  EXPECT_EQ(csv.rfind("protocol,invocations,phase,ms\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}

TEST(CliTest, BenchJson) {
  std::string path = ::testing::TempDir() + "/bench.json";
  Outcome o = RunCli("bench --invocations 5 --repeat 2 --out " + path);
  EXPECT_EQ(o.exit_code, 0) << o.out;
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["invocations"], 5);
  EXPECT_TRUE(doc[0].contains("phase5"));
  EXPECT_FALSE(doc[0].contains("phase6"));
}

}  // namespace
