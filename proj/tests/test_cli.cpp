// Copyright 2026 The minsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the installed command-line tool end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Output {
  int code = -1;
  std::string out;
};

Output Run(const std::string& args) {
  const std::string cmd = std::string(MINSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  Output result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Data(const char* name) { return std::string(MINSYM_TEST_DATA_DIR) + "/" + name; }

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool Has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

class Workdir {
 public:
  Workdir() : path_(fs::temp_directory_path() / ("minsym_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }
  std::string operator/(const char* name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

TEST_CASE("solve prints min symbols and the witness") {
  const auto r = Run("solve " + Data("two_symbols.json"));
  CHECK(r.code == 0);
  CHECK(Has(r.out, "min_symbols\t2\n"));
  CHECK(Has(r.out, "witness\ta0=0 a1=0\n"));
  CHECK(Has(r.out, "symbols\t0 3\n"));
  CHECK(Has(Run("solve " + Data("one_symbol.json")).out, "min_symbols\t1\n"));
  CHECK(Has(Run("solve --solver hitting " + Data("duplicate.json")).out,
            "min_symbols\tunsolvable\n"));
  CHECK(Run("solve /nonexistent.json").code == 3);
}

TEST_CASE("prob") {
  const auto r = Run("prob -n 128 -m 2 --classes 10000");
  CHECK(r.code == 0);
  CHECK(Has(r.out, "p_exists_class_at_least\t0.55337540183\n"));
  const auto mc = Run("prob -n 4 -m 2 --classes 2 --monte-carlo 1000 --seed 3");
  CHECK(Has(mc.out, "monte_carlo\t1\n"));
  CHECK(Run("prob -n 0 -m 2").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(Run("").code == 2);
  CHECK(Run("frobnicate").code == 2);
  CHECK(Run("prob --no-such-flag").code == 2);
  CHECK(Run("sample --buckets 2,x --out /tmp/never").code == 2);
}

TEST_CASE("sample, verify, export, eval and analyze") {
  Workdir w;
  const std::string sample = "sample --buckets 2,3 --per-bucket 30 --seed 7 --workers 2 --out ";
  const auto first = Run(sample + (w / "a"));
  REQUIRE(first.code == 0);
  CHECK(Has(first.out, "bucket\t2\t30\n"));
  CHECK(Has(first.out, "complete\ttrue\n"));
  REQUIRE(Run(sample + (w / "b")).code == 0);
  CHECK(Slurp(w / "a/records.jsonl") == Slurp(w / "b/records.jsonl"));
  CHECK(Slurp(w / "a/manifest.json") == Slurp(w / "b/manifest.json"));
  CHECK(Run(sample + (w / "a")).code == 3);
  CHECK(Run(sample + (w / "a") + " --overwrite").code == 0);

  const auto verified = Run("verify --dataset " + (w / "a"));
  CHECK(verified.code == 0);
  CHECK(Has(verified.out, "verified\t60\n"));

  const auto exported = Run("export --dataset " + (w / "a") + " --out " + (w / "oh"));
  CHECK(exported.code == 0);
  CHECK(Has(exported.out, "train\t48\n"));
  CHECK(Has(exported.out, "eval\t12\n"));

  const auto ev = Run("eval --dataset " + (w / "a") + " --bucket 3 --max-len 5 --out " +
                      (w / "curve.csv") + " --log " + (w / "log.jsonl"));
  CHECK(ev.code == 0);
  const auto curve = Run("analyze --curve " + (w / "curve.csv") + " --column expected_accuracy");
  CHECK(curve.code == 0);
  CHECK(Has(curve.out, "effective_symbols\t3\n"));
  const auto log = Run("analyze --log " + (w / "log.jsonl"));
  CHECK(log.code == 0);
  CHECK(Has(log.out, "messages\t150\n"));
  CHECK(Has(log.out, "modal_length\t3\n"));

  // Corrupt one label: verification fails with a data error.
  auto text = Slurp(w / "a/records.jsonl");
  const auto at = text.find("\"min_m\":2");
  REQUIRE(at != std::string::npos);
  text[at + 8] = '3';
  {
    std::ofstream out(w / "a/records.jsonl", std::ios::binary | std::ios::trunc);
    out << text;
  }
  CHECK(Run("verify --dataset " + (w / "a")).code == 5);
}

TEST_CASE("an unreachable bucket is a partial result") {
  Workdir w;
  const auto r = Run("sample --buckets 20 --per-bucket 2 --max-attempts 100 --out " + (w / "p"));
  CHECK(r.code == 4);
  CHECK(Has(r.out, "complete\tfalse\n"));
  CHECK(fs::exists(w / "p/manifest.json"));
}

TEST_CASE("hist is deterministic") {
  const auto a = Run("hist --trials 300 --seed 4");
  const auto b = Run("hist --trials 300 --seed 4 --workers 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Has(a.out, "# top_adjacent_pair\t"));
}

}  // namespace
