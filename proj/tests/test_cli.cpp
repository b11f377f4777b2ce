// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "wgcalc/io.hpp"

using wgcalc::Json;

namespace {

struct Output {
  std::string out;
  std::string err;
  int code = -1;
};

std::string data(const char* name) { return std::string(WGCALC_TEST_DATA) + "/" + name; }

Output run(const std::string& args) {
  std::string err_path = "/tmp/wgcalc_cli_stderr_XXXXXX";
  const int fd = mkstemp(err_path.data());
  REQUIRE(fd >= 0);
  close(fd);
  const std::string cmd = std::string(WGCALC_CLI) + " " + args + " 2>" + err_path;
  Output r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (FILE* f = std::fopen(err_path.c_str(), "r")) {
    while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.err.append(buf.data(), got);
    std::fclose(f);
  }
  std::remove(err_path.c_str());
  return r;
}

Json json_of(const Output& o) {
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("wg command") {
  CHECK(json_of(run("wg --ensemble u --k 2 --z 4 --type 2")) == "-1/60");
  CHECK(json_of(run("wg --ensemble u --k 1 --z 7")).dump() == R"({"1":"1/7"})");
  CHECK(json_of(run("wg --ensemble o --k 1 --z 3")).dump() == R"({"1":"1/3"})");
  CHECK(json_of(run("wg --ensemble u --k 2 --z -3/2")).dump() == R"({"2":"8/15","1,1":"4/5"})");
  // Wg(z) * Wg(w) at k=1 is 1/(zw).
  CHECK(json_of(run("wg --ensemble u --k 1 --z 3 --w 5")).dump() == R"({"1":"1/15"})");
}

TEST_CASE("moment command") {
  const auto u = json_of(run("moment conj-u --n 10 --pairs \"1,1;1,1\""));
  CHECK(u["order"] == 2);
  CHECK(u["basis"] == "unitary-trace");
  CHECK(u["terms"][0]["coeff"] == "1/110");
  CHECK(u["terms"][1]["coeff"] == "1/110");

  const auto o = json_of(run("moment conj-o --n 10 --indices 1,1,1,1"));
  CHECK(o["basis"] == "orthogonal-trace");
  CHECK(o["terms"][0]["partition"].dump() == "[2]");
  CHECK(o["terms"][0]["coeff"] == "1/60");
  CHECK(o["terms"][1]["coeff"] == "1/120");

  const auto lr = json_of(run("moment lr-u --n 3 --p 5 --pairs 1,2"));
  CHECK(lr["terms"][0]["partition"].dump() == "[1]");
  CHECK(lr["terms"][0]["coeff"] == "1/15");
}

TEST_CASE("exact command") {
  CHECK(json_of(run("exact inv-wishart-c --n 4 --p 12 --perm 1")) == "1/2");
  CHECK(json_of(run("exact ginibre-pinv-c --n 4 --p 10 --pairs 1,1")) == "1/60");
  // White compound Wishart: E[w^{11}] = 1/(p-n), and n of them sum to the
  // inverse Wishart trace.
  CHECK(json_of(run("exact compound-inv-c --n 4 --p 12 --pairs 1,1")) == "1/8");
  const auto sigma = data("sigma3.json");
  const auto w = json_of(run("exact inv-wishart-r --sigma " + sigma + " --p 9 --pairing 1,2"));
  wgcalc::Rational sum = 0;
  for (int i = 1; i <= 3; ++i) {
    const auto ii = std::to_string(i) + "," + std::to_string(i);
    sum += wgcalc::parse_rational(
        json_of(run("exact compound-inv-r --sigma " + sigma + " --p 9 --indices " + ii)).get<std::string>());
  }
  CHECK(wgcalc::to_string(sum) == w.get<std::string>());
  // Floating input gives a decimal.
  CHECK(json_of(run("exact inv-wishart-r --sigma " + data("sigma2_real.json") + " --p 8 --pairing 1,2")).is_number());
}

TEST_CASE("exit codes") {
  const auto usage = run("wg --ensemble x --k 2 --z 4");
  CHECK(usage.code == 2);
  CHECK(usage.out.empty());
  CHECK(run("wg --k 2").code == 2);
  CHECK(run("exact haar-u --n 3 --pairs 1,x").code == 2);
  CHECK(run("frobnicate").code == 2);

  const auto capacity = run("wg --ensemble u --k 40 --z 4");
  CHECK(capacity.code == 3);
  CHECK_FALSE(capacity.err.empty());

  const auto domain = run("exact inv-wishart-c --n 4 --p 5 --perm 2,1");
  CHECK(domain.code == 4);
  CHECK(domain.err.find("q = p - n >= k") != std::string::npos);
  const auto domain_r = run("exact inv-wishart-r --n 4 --p 6 --pairing 1,2,3,4");
  CHECK(domain_r.code == 4);
  CHECK(domain_r.err.find("q = p - n - 1 >= 2k - 1") != std::string::npos);
  CHECK(run("exact inv-wishart-c --sigma " + data("not_pd.json") + " --p 5 --perm 1").code == 4);
}

TEST_CASE("verify command") {
  const auto ok = run("verify --model haar-u --n 5 --pairs 1,1 --samples 100000 --seed 42");
  const auto j = json_of(ok);
  CHECK(j["model"] == "haar-u");
  CHECK(j["samples"] == 100000);
  CHECK(j["seed"] == 42);
  CHECK(j["exact"][0].get<double>() == doctest::Approx(0.2));
  CHECK(j["z_score"].get<double>() <= 5);

  CHECK(run("verify --model ginibre-pinv-c --n 4 --p 10 --pairs 1,1 --samples 100000").code == 0);

  // A deliberately wrong reference must fail the run.
  const auto wrong = run("verify --model haar-u --n 5 --pairs 1,1 --samples 100000 --expect 1/4");
  CHECK(wrong.code == 5);
  CHECK(Json::parse(wrong.out)["z_score"].get<double>() > 5);
}

TEST_CASE("output is reproducible") {
  const std::string cmd = "verify --model inv-wishart-c --n 4 --p 12 --perm 2,1 --samples 20000 --seed 7";
  const auto a = run(cmd + " --threads 1");
  const auto b = run(cmd + " --threads 3");
  const auto c = run(cmd + " --threads 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  CHECK(run("wg --ensemble o --k 4 --z 9").out == run("wg --ensemble o --k 4 --z 9").out);
}

TEST_CASE("CSV format") {
  CHECK(run("--format csv wg --ensemble u --k 1 --z 7").out == "key,value\n1,1/7\n");
  const auto o = run("--format csv moment conj-o --n 10 --indices 1,1,1,1");
  CHECK(o.out.find("terms.0.coeff,1/60\n") != std::string::npos);
}
