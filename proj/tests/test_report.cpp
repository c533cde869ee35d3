// Copyright 2026 The swapbound Authors
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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "swapbound/errors.hpp"
#include "swapbound/report.hpp"

using namespace swapbound;

namespace {

const std::string kFixtures = SWAPBOUND_FIXTURES;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t fields(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

BenchRow row(std::size_t u, std::size_t m, std::size_t oracle, double beta,
             const char* path = "similarity") {
  BenchRow r;
  r.benchmark = "b";
  r.device = "d";
  r.u_swap = u;
  r.m_swap_max = m;
  r.oracle = oracle;
  r.beta_star = beta;
  r.assignment_path = path;
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1e-5) == "1e-05");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("pearson") {
  const std::vector<double> x{1, 2, 3, 5, 8};
  const std::vector<double> y{2, 1, 4, 3, 7};
  CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> neg{-1, -2, -3, -5, -8};
  CHECK(pearson(x, neg) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(pearson(x, y) - pearson(y, x)) < 1e-15);
  const std::vector<double> flat{4, 4, 4, 4, 4};
  CHECK(std::isnan(pearson(x, flat)));
  const std::vector<double> shorter{1, 2};
  CHECK_THROWS_AS(pearson(x, shorter), ValidationError);
}

TEST_CASE("sweep and curve csv") {
  const std::vector<BetaResult> per_beta{{BetaValue(1e-5), 0, false},
                                         {BetaValue(2e-5), 3, true}};
  CHECK(sweep_csv(per_beta) == "beta,swaps,stalled\n1e-05,0,false\n2e-05,3,true\n");
  const std::vector<EntropyPoint> curve{{0.0, std::log(2.0)}};
  CHECK(entropy_curve_csv(curve) == "beta,entropy\n0,0.693147180559945\n");
}

TEST_CASE("bench csv layout") {
  std::vector<BenchRow> rows{row(1, 4, 2, 1e-5), row(3, 12, 3, 2e-3)};
  BenchRow failed;
  failed.benchmark = "bad, name";
  failed.device = "d";
  failed.error = "boom";
  rows.push_back(failed);

  for (bool timings : {false, true}) {
    const auto lines = lines_of(bench_csv(rows, timings));
    REQUIRE(lines.size() == 4);
    const std::size_t width = timings ? 19 : 16;
    CHECK(fields(lines[0]) == width);
    CHECK(fields(lines[1]) == width);
    CHECK(fields(lines[3]) == width + 1);  // quoted comma inside the name
    CHECK(lines[3].rfind("\"bad, name\"", 0) == 0);
  }
  const auto lines = lines_of(bench_csv(rows, false));
  CHECK(lines[1] == "b,d,0,0,0,0,similarity,1,1e-05,4,2,0.25,0.25,0.4,false,");
}

TEST_CASE("bench summary") {
  std::vector<BenchRow> rows{row(1, 4, 2, 1e-5), row(3, 12, 3, 2e-3),
                             row(0, 0, 0, 1e-5, "isomorphism"),
                             row(5, 4, 4, 7e2)};
  const BenchSummary s = summarize_bench(rows);
  CHECK(s.rows == 4);
  CHECK(s.sandwich_violations == 1);
  CHECK(s.routed_rows == 3);
  CHECK(s.high_temperature == 1);
  CHECK(s.beta_star_in_grid);
  CHECK(s.beta_histogram[0] == 1);
  CHECK(s.beta_histogram[2] == 1);
  CHECK(s.beta_histogram[7] == 1);
  REQUIRE(s.correlation.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.correlation[i][i] == doctest::Approx(1.0));
  }

  rows.push_back(row(1, 4, 2, 1.5e-5));
  CHECK_FALSE(summarize_bench(rows).beta_star_in_grid);
}

TEST_CASE("manifest") {
  const auto entries = parse_manifest(
      R"({"entries":[{"circuit":"c.json","device":"/abs/d.json"}]})", "/base");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].circuit_path == "/base/c.json");
  CHECK(entries[0].device_path == "/abs/d.json");
  CHECK_THROWS_AS(parse_manifest(R"({"entries":[{"circuit":1}]})", "."),
                  ParseError);
}

TEST_CASE("fixture bench is sound") {
  const std::string path = kFixtures + "/small_manifest.json";
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto manifest = parse_manifest(buf.str(), kFixtures);
  BenchOptions opts;
  const auto rows = run_bench(manifest, opts);
  REQUIRE(rows.size() == manifest.size());
  for (const BenchRow& r : rows) {
    CHECK(r.error.empty());
    CHECK_FALSE(r.stalled);
    REQUIRE(r.oracle.has_value());
    CHECK(r.u_swap <= *r.oracle);
    CHECK(*r.oracle <= r.m_swap_max);
  }
  opts.jobs = 4;
  CHECK(bench_csv(run_bench(manifest, opts), false) == bench_csv(rows, false));
}
