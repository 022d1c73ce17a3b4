// Copyright 2026 The latdecode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the latdecode binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

const std::string kCli = LATDECODE_CLI;
const std::string kData = LATDECODE_DATA_DIR;

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string &args) {
  const std::string err_path = ::testing::TempDir() + "latdecode_cli_err.txt";
  const std::string command = kCli + " " + args + " 2>" + err_path;
  Run r;
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) {
    r.out.append(buf, n);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

std::string write_temp(const std::string &name, const std::string &text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the wall_time_us column (second to last).
std::string without_timing(const std::string &csv) {
  std::string out;
  for (const auto &line : lines(csv)) {
    const auto last = line.rfind(',');
    if (line.empty() || line[0] == '#' || last == std::string::npos) {
      out += line + '\n';
      continue;
    }
    const auto prev = line.rfind(',', last - 1);
    out += line.substr(0, prev) + line.substr(last) + '\n';
  }
  return out;
}

const std::string kE1 = kData + "/e1.txt";
const std::string kE1Syms = "--symbols " + kData + "/e1.syms";

TEST(Decode, E1) {
  const auto r = run("decode " + kE1 + " " + kE1Syms);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "a b\t0.601861\n");
}

TEST(Decode, IntegerLabels) {
  const auto r = run("decode " + write_temp("ints.txt", "0 1 5 0.5\n1 2 6 0.25\n2\n"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "5 6\t0.750000\n");
}

TEST(Decode, FullDeterminizationAgrees) {
  const auto lazy = run("decode " + kE1 + " " + kE1Syms);
  const auto full = run("decode " + kE1 + " " + kE1Syms + " --full");
  EXPECT_EQ(full.status, 0);
  EXPECT_EQ(full.out, lazy.out);
}

TEST(Decode, RealSemiring) {
  const auto r = run("decode " + kData + "/e1_real.txt " + kE1Syms +
                     " --semiring real --oracle");
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "a b\t0.547791\n");
}

TEST(Decode, Oracle) {
  const auto r = run("decode " + kE1 + " " + kE1Syms + " --oracle");
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.err.find("oracle\ta b\t0.601861"), std::string::npos) << r.err;
}

TEST(Decode, Stats) {
  const auto r = run("decode " + kE1 + " " + kE1Syms + " --stats");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(lines(r.err).at(0));
  EXPECT_EQ(j.at("popped"), 4);
  EXPECT_EQ(j.at("subsets_built"), 3);
  EXPECT_TRUE(j.contains("pushed"));
  EXPECT_TRUE(j.contains("queue_peak"));
  EXPECT_TRUE(j.contains("arcs_relaxed"));
}

TEST(Decode, Trace) {
  const auto r = run("decode " + kE1 + " " + kE1Syms + " --trace");
  ASSERT_EQ(r.status, 0);
  const auto pops = lines(r.err);
  ASSERT_EQ(pops.size(), 4u);
  EXPECT_EQ(pops[3].rfind("pop\tfinal\t", 0), 0u);
}

TEST(Decode, DumpDfa) {
  const std::string path = ::testing::TempDir() + "e1_dfa.txt";
  std::remove(path.c_str());
  const auto r = run("decode " + kE1 + " " + kE1Syms + " --dump-dfa " + path);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(lines(slurp(path)).size(), 4u);  // three arcs and one final
}

TEST(Decode, MalformedInput) {
  const auto r =
      run("decode " + write_temp("bad.txt", "0 1 1 0.5\n1 2 1 zz\n2\n"));
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Decode, CyclicInput) {
  const auto r = run("decode " + write_temp("cycle.txt", "0 1 1 0.5\n1 0 1 0.5\n1\n"));
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("cycle"), std::string::npos) << r.err;
}

TEST(Decode, MissingFile) {
  EXPECT_EQ(run("decode " + kData + "/no_such_file.txt").status, 3);
}

TEST(Decode, EmptyLanguage) {
  const auto r = run("decode " + write_temp("empty.txt", "0 1 1 0.5\n"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("empty language"), std::string::npos);
}

TEST(Decode, Budget) {
  EXPECT_EQ(run("decode " + kE1 + " " + kE1Syms + " --budget 2").status, 4);
}

TEST(Decode, BadArguments) {
  EXPECT_EQ(run("decode " + kE1 + " " + kE1Syms + " --semiring tropical").status, 3);
  EXPECT_EQ(run("").status, 3);
}

TEST(Gen, Deterministic) {
  const std::string args = "gen --depth 5 --width 3 --vocab 4 --seed 42";
  const auto x = run(args);
  const auto y = run(args);
  ASSERT_EQ(x.status, 0);
  EXPECT_EQ(x.out, y.out);
  EXPECT_NE(run("gen --depth 5 --width 3 --vocab 4 --seed 43").out, x.out);

  // The generated file decodes, and the oracle agrees.
  const auto r = run("decode " + write_temp("gen.txt", x.out) + " --oracle");
  EXPECT_EQ(r.status, 0) << r.err;
}

TEST(Bench, Rows) {
  const std::string args = "bench --depths 4,6 --width 3 --vocab 3 --seeds 3";
  const auto r = run(args);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 1u + 6u + 1u);
  EXPECT_EQ(out[0],
            "seed,depth,width,vocab,nfa_states,dfa_states,visited_states,"
            "wall_time_us,status");
  EXPECT_EQ(out[1].rfind("0,4,3,3,13,", 0), 0u) << out[1];
  EXPECT_EQ(out.back().rfind("#slope=", 0), 0u);
  EXPECT_EQ(without_timing(run(args).out), without_timing(r.out));
}

TEST(Bench, BudgetRows) {
  const auto r = run("bench --depths 12 --seeds 2 --budget 10 --no-timing");
  ASSERT_EQ(r.status, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[1].substr(out[1].rfind(',') + 1), "budget");
  EXPECT_EQ(out[2].substr(out[2].rfind(',') + 1), "budget");
}

}  // namespace
