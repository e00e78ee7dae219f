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

// Command-line driver: run one protocol, print the table checks, or time the
// pad-only protocol phase by phase.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "dqot/bench/supersonic_bench.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/random.h"
#include "dqot/harness/protocols.h"
#include "dqot/harness/table_check.h"
#include "dqot/ot/supersonic.h"
#include "dqot/util/errors.h"
#include "json.hpp"

namespace {

using dqot::BitString;

constexpr int kExitUsage = 2;
constexpr uint64_t kLargeInvocations = 100000;

struct RunFlags {
  std::string protocol = "dq";
  size_t sec_bits = dqot::kDefaultRunSecurityBits;
  size_t sigma = 128;
  size_t lambda = 128;
  size_t z = 1;
  size_t n = 2;
  int s = 0;
  uint32_t v = 0;
  std::string m0;
  std::string m1;
  uint64_t seed = 1;
  std::string transport = "in-process";
  std::string out;
  bool check_tables = false;
};

struct BenchFlags {
  std::string protocol = "supersonic";
  std::vector<uint64_t> invocations = {1, 10, 1000, 100000};
  int repeat = dqot::kDefaultBenchRepeat;
  size_t sigma = 128;
  uint64_t seed = 1;
  std::string out;
  bool allow_large = false;
};

int UsageError(const CLI::App& app, const std::string& message) {
  std::cerr << "error: " << message << "\n\n" << app.help();
  return kExitUsage;
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  return 1;
}

int CheckDqTable() {
  auto params = dqot::GroupParams::Create(23, 2, 13);
  if (!params.ok()) return Fail(params.status());
  auto cells = dqot::CheckDeltaBetaTable(*params, 1, 11);
  if (!cells.ok()) return Fail(cells.status());
  bool all = true;
  for (const dqot::TableCellCheck& c : *cells) {
    std::printf("s1=%d s2=%d  %-40s %3llu combos  %s\n", c.s1, c.s2,
                c.expected.c_str(),
                static_cast<unsigned long long>(c.combinations),
                c.pass() ? "PASS" : "FAIL");
    all = all && c.pass();
  }
  return all ? 0 : 1;
}

int CheckSupersonicTable(uint64_t seed) {
  namespace ss = dqot::supersonic;
  dqot::Drbg rng(seed, "cli/table");
  bool all = true;
  for (uint8_t s = 0; s < 2; ++s) {
    for (uint8_t s1 = 0; s1 < 2; ++s1) {
      uint8_t s2 = s ^ s1;
      BitString m0 = BitString::Random(rng, 128);
      BitString m1 = BitString::Random(rng, 128);
      auto keys = ss::Setup(rng, 128);
      if (!keys.ok()) return Fail(keys.status());
      auto res = ss::GenRes(m0, m1, *keys, dqot::BitShare{s1});
      if (!res.ok()) return Fail(res.status());
      BitString got = ss::Retrieve(ss::OblFilter(*res, dqot::BitShare{s2}),
                                   std::move(*keys), dqot::ChoiceBit{s});
      bool ok = got == (s ? m1 : m0);
      std::printf("s=%d s1=%d s2=%d  S %-7s P %-7s  %s\n", s, s1, s2,
                  s1 ? "swaps" : "keeps", s2 ? "swaps" : "keeps",
                  ok ? "PASS" : "FAIL");
      all = all && ok;
    }
  }
  return all ? 0 : 1;
}

absl::StatusOr<BitString> PaddedOrRandom(const std::string& hex, size_t sigma,
                                         dqot::RandomSource& rng) {
  if (hex.empty()) {
    return dqot::PadMessage(BitString::Random(rng, sigma - 1), sigma);
  }
  auto message = BitString::FromHex(hex);
  if (!message.ok()) return message.status();
  return dqot::PadMessage(*message, sigma);
}

int CmdRun(const CLI::App& app, const RunFlags& f) {
  auto protocol = dqot::ProtocolFromName(f.protocol);
  if (!protocol.ok()) return UsageError(app, "unknown protocol " + f.protocol);
  auto transport = dqot::TransportFromName(f.transport);
  if (!transport.ok()) {
    return UsageError(app, "unknown transport " + f.transport);
  }
  if (f.check_tables) {
    if (*protocol == dqot::Protocol::kDq) return CheckDqTable();
    if (*protocol == dqot::Protocol::kSupersonic) {
      return CheckSupersonicTable(f.seed);
    }
    return UsageError(app, "--check-tables applies to dq and supersonic");
  }
  if (f.s != 0 && f.s != 1) return UsageError(app, "--s must be 0 or 1");
  if (f.sigma < 2) return UsageError(app, "--sigma must be at least 2");

  dqot::RunConfig config;
  config.protocol = *protocol;
  config.security_bits = f.sec_bits;
  config.sigma = f.sigma;
  config.lambda = f.lambda;
  config.z = f.z;
  config.n = f.n;
  config.seed = f.seed;
  config.transport = *transport;

  dqot::Drbg rng(f.seed, "cli/inputs");
  dqot::RunInputs inputs;
  inputs.s = dqot::ChoiceBit{static_cast<uint8_t>(f.s)};
  inputs.v = f.v;
  if (*protocol == dqot::Protocol::kThin) {
    for (size_t i = 0; i < f.n; ++i) {
      auto m = PaddedOrRandom(i == f.v ? f.m0 : "", f.sigma, rng);
      if (!m.ok()) return UsageError(app, std::string(m.status().message()));
      inputs.messages.push_back(*std::move(m));
    }
  } else {
    bool multi = *protocol == dqot::Protocol::kDqMr ||
                 *protocol == dqot::Protocol::kDuqMr;
    size_t rows = multi ? f.z : 1;
    size_t chosen = multi ? f.v : 0;
    for (size_t i = 0; i < rows; ++i) {
      auto m0 = PaddedOrRandom(i == chosen ? f.m0 : "", f.sigma, rng);
      auto m1 = PaddedOrRandom(i == chosen ? f.m1 : "", f.sigma, rng);
      if (!m0.ok()) return UsageError(app, std::string(m0.status().message()));
      if (!m1.ok()) return UsageError(app, std::string(m1.status().message()));
      inputs.table.emplace_back(*std::move(m0), *std::move(m1));
    }
  }

  auto result = dqot::Run(config, inputs);
  if (!result.ok()) {
    if (dqot::IsParameterError(result.status())) {
      return UsageError(app, std::string(result.status().message()));
    }
    return Fail(result.status());
  }
  auto message = dqot::UnpadMessage(result->output);
  if (!message.ok()) return Fail(message.status());
  std::printf("%s\n", message->ToHex().c_str());
  if (!f.out.empty()) {
    absl::Status written = result->transcript.WriteJsonLines(f.out);
    if (!written.ok()) return Fail(written);
    std::printf("transcript: %s\n", f.out.c_str());
  }
  return 0;
}

int CmdBench(const CLI::App& app, const BenchFlags& f) {
  auto protocol = dqot::ProtocolFromName(f.protocol);
  if (!protocol.ok()) return UsageError(app, "unknown protocol " + f.protocol);
  if (*protocol != dqot::Protocol::kSupersonic) {
    return UsageError(app, "bench supports --protocol supersonic only");
  }
  std::vector<dqot::BenchReport> reports;
  for (uint64_t count : f.invocations) {
    if (count > kLargeInvocations && !f.allow_large) {
      return UsageError(app,
                        "more than 100000 invocations needs --allow-large");
    }
    dqot::BenchOptions options;
    options.invocations = count;
    options.repeat = f.repeat;
    options.sigma = f.sigma;
    options.seed = f.seed;
    auto report = dqot::BenchSupersonic(options);
    if (!report.ok()) return Fail(report.status());
    if (report->failures != 0) {
      return Fail(absl::InternalError("bench run retrieved a wrong message"));
    }
    reports.push_back(*std::move(report));
  }
  std::printf("%s", dqot::BenchTable(reports).c_str());
  if (f.out.empty()) {
    std::printf("\n%s", dqot::BenchCsv(reports).c_str());
    return 0;
  }
  std::ofstream file(f.out, std::ios::trunc);
  if (f.out.size() > 5 && f.out.ends_with(".json")) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const dqot::BenchReport& r : reports) {
      nlohmann::ordered_json row;
      row["protocol"] = r.protocol;
      row["invocations"] = r.invocations;
      row["repeat"] = r.repeat;
      for (size_t p = 0; p < dqot::kSupersonicPhases; ++p) {
        row["phase" + std::to_string(p + 1)] = r.phase_ms[p];
      }
      row["total"] = r.total_ms;
      doc.push_back(row);
    }
    file << doc.dump(2) << "\n";
  } else {
    file << dqot::BenchCsv(reports);
  }
  if (!file) return Fail(absl::InternalError("cannot write " + f.out));
  std::printf("wrote %s\n", f.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delegated and helper-assisted oblivious transfer"};
  app.require_subcommand(1);

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one protocol instance");
  run_cmd->add_option("--protocol", run.protocol,
                      "np|dq|duq|supersonic|dq-mr|duq-mr|thin");
  run_cmd->add_option("--sec-bits", run.sec_bits, "Group size in bits");
  run_cmd->add_option("--sigma", run.sigma, "Message block bits");
  run_cmd->add_option("--lambda", run.lambda, "Verification pad bits");
  run_cmd->add_option("--z", run.z, "Message pairs held by S");
  run_cmd->add_option("--n", run.n, "Choices for the thin client");
  run_cmd->add_option("--s", run.s, "Choice bit");
  run_cmd->add_option("--v", run.v, "Row or choice index");
  run_cmd->add_option("--m0", run.m0, "First message (hex)");
  run_cmd->add_option("--m1", run.m1, "Second message (hex)");
  run_cmd->add_option("--seed", run.seed, "Deterministic seed");
  run_cmd->add_option("--transport", run.transport, "in-process|socket");
  run_cmd->add_option("--out", run.out, "Transcript path (JSON lines)");
  run_cmd->add_flag("--check-tables", run.check_tables,
                    "Print the table reproduction for dq or supersonic");

  BenchFlags bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Phase timings for the pad-only protocol");
  bench_cmd->add_option("--protocol", bench.protocol, "supersonic");
  bench_cmd
      ->add_option("--invocations", bench.invocations,
                   "Comma-separated invocation counts")
      ->delimiter(',');
  bench_cmd->add_option("--repeat", bench.repeat, "Batches to average over");
  bench_cmd->add_option("--sigma", bench.sigma, "Message block bits");
  bench_cmd->add_option("--seed", bench.seed, "Deterministic seed");
  bench_cmd->add_option("--out", bench.out, "CSV path, or .json");
  bench_cmd->add_flag("--allow-large", bench.allow_large,
                      "Permit counts above 100000");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return UsageError(app, e.what());
  }
  if (run_cmd->parsed()) return CmdRun(*run_cmd, run);
  return CmdBench(*bench_cmd, bench);
}
