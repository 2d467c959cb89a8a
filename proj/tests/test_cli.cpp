#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "morsekit/errors.hpp"
#include "morsekit/morse.hpp"
#include "morsekit_cli/cli.hpp"
#include "morsekit_cli/ranges.hpp"
#include "morsekit_cli/signal_io.hpp"
#include "morsekit_cli/table.hpp"

namespace fs = std::filesystem;
using namespace morsekit;
using namespace morsekit::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("morsekit_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

// Data rows of a CSV: comment lines and the header are dropped.
std::vector<std::vector<std::string>> csv_rows(const std::string& text,
                                               std::vector<std::string>* header = nullptr) {
  std::vector<std::vector<std::string>> rows;
  bool seen_header = false;
  for (const auto& line : lines_of(text)) {
    if (line.starts_with("#")) continue;
    if (!seen_header) {
      seen_header = true;
      if (header) *header = split(line);
      continue;
    }
    rows.push_back(split(line));
  }
  return rows;
}

const std::string kFixture = std::string(MORSEKIT_TEST_DATA) + "/cosine_1024.txt";

}  // namespace

TEST_CASE("value lists and ranges") {
  CHECK(parse_values("1,2.5,3") == std::vector<double>{1, 2.5, 3});
  const auto r = parse_values("1:100:3");
  REQUIRE(r.size() == 3);
  CHECK(r[1] == doctest::Approx(10));
  CHECK(r[2] == 100.0);
  const auto lin = parse_linear_grid("0.5:0.05:8");
  CHECK(lin.size() == 151);
  CHECK(lin.back() == doctest::Approx(8));
  CHECK_THROWS_AS(parse_values("1,,2"), Error);
  CHECK_THROWS_AS(parse_values("1:2"), Error);
  CHECK_THROWS_AS(parse_real("1.5x"), Error);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(format_double(NAN) == "nan");
  for (double v : {1.0 / 3, 2.718281828459045, 1e-300, 6.02e23}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("signal files") {
  std::istringstream ok("# dt=0.25\n1.0\n\n# comment\n2.0\n-3e-1\n");
  const auto s = read_signal(ok, "ok.txt");
  CHECK(s.size() == 3);
  CHECK(s.dt() == 0.25);
  CHECK(s.is_real());
  std::istringstream cplx("1,2\n3 4\n");
  const auto c = read_signal(cplx);
  CHECK_FALSE(c.is_real());
  CHECK(c.samples()[1] == std::complex<double>(3, 4));

  std::istringstream bad("1.0\n2.0\nabc\n");
  try {
    (void)read_signal(bad, "bad.txt");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("bad.txt:3") != std::string::npos);
  }
  std::istringstream mixed("1.0\n2.0 3.0\n");
  CHECK_THROWS_AS(read_signal(mixed), Error);
  CHECK_THROWS_AS(read_signal_file("/nonexistent/signal.txt"), Error);
}

TEST_CASE("props prints the closed forms") {
  const auto r = invoke({"props", "9,3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("# morsekit props"));
  std::vector<std::string> header;
  const auto rows = csv_rows(r.out, &header);
  REQUIRE(rows.size() == 1);
  REQUIRE(header.size() == 9);
  CHECK(header[2] == "peak_frequency");
  CHECK(std::stod(rows[0][2]) == doctest::Approx(std::cbrt(3.0)).epsilon(1e-14));
  CHECK(std::stod(rows[0][3]) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-14));

  const auto cross = invoke({"props", "--beta", "1,2", "--gamma", "1,3,9"});
  REQUIRE(cross.code == 0);
  CHECK(csv_rows(cross.out).size() == 6);
}

TEST_CASE("json output mirrors csv") {
  const auto r = invoke({"props", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "props");
  CHECK(doc["columns"].size() == 9);
  CHECK(doc["rows"][0][7].get<double>() == doctest::Approx(std::sqrt(0.75)));
  const auto inf = nlohmann::json::parse(invoke({"props", "0.4,2", "--format", "json"}).out);
  CHECK(inf["rows"][0][5] == "inf");
}

TEST_CASE("errors are one line with a kind and a nonzero status") {
  auto r = invoke({"props", "0,1"});
  CHECK(r.code == 1);
  CHECK(r.err.starts_with("error: domain: "));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  r = invoke({});
  CHECK(r.code == 2);
  CHECK(r.err.starts_with("error: argument: "));

  r = invoke({"props", "--format", "xml", "1,1"});
  CHECK(r.code == 2);

  r = invoke({"cwt"});
  CHECK(r.code == 2);

  TempDir dir;
  std::ofstream(dir / "bad.txt") << "0.5\n1.5\nnot-a-number\n";
  r = invoke({"cwt", "--signal", dir / "bad.txt"});
  CHECK(r.code == 1);
  CHECK(r.err.starts_with("error: parse: "));
  CHECK(r.err.find("bad.txt:3") != std::string::npos);

  r = invoke({"map"});
  CHECK(r.code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("map writes its four tables") {
  TempDir dir;
  const auto r = invoke({"map", "--out", dir / "map", "--beta", "0.4,1,3,50", "--gamma", "0.5,1,3,9"});
  REQUIRE(r.code == 0);
  for (const char* name : {"area.csv", "skewness_zero.csv", "localization_border.csv",
                           "duration_lines.csv"}) {
    CHECK(fs::exists(dir.path() / "map" / name));
  }
  const auto area = csv_rows(slurp(dir / "map/area.csv"));
  REQUIRE(area.size() == 16);
  bool found = false;
  for (const auto& row : area) {
    if (row[0] == "1" && row[1] == "1") {
      CHECK(std::stod(row[2]) == doctest::Approx(0.8660254).epsilon(1e-7));
      found = true;
    }
    if (row[0] == "0.4") CHECK(row[2] == "inf");
    if (row[2] != "inf") CHECK(std::stod(row[2]) >= 0.5);
  }
  CHECK(found);
  for (const auto& row : csv_rows(slurp(dir / "map/skewness_zero.csv"))) {
    if (std::stod(row[0]) > 2) {
      const double g = std::stod(row[1]);
      CHECK(g > 2);
      CHECK(g < 5);
    }
  }
}

TEST_CASE("gallery files") {
  TempDir dir;
  const auto r = invoke({"gallery", "--out", dir / "g", "--beta", "3,27", "--gamma", "3,27"});
  REQUIRE(r.code == 0);
  const auto index = csv_rows(slurp(dir / "g/index.csv"));
  CHECK(index.size() == 4);

  std::vector<std::string> header;
  const auto rows = csv_rows(slurp(dir / "g/gmw_0_0.csv"), &header);
  REQUIRE(header.size() == 8);
  double best = 0, best_x = 0;
  for (const auto& row : rows) {
    if (row[0] != "frequency") continue;
    const double x = std::stod(row[1]), v = std::stod(row[5]);
    if (v > best) best = v, best_x = x;
    if (std::abs(x - 1) <= 0.02) {
      CHECK(std::abs(std::stod(row[6]) - std::stod(row[7])) < 1e-6);
    }
  }
  CHECK(best == doctest::Approx(2.0));
  CHECK(best_x == 1.0);

  // (27, 27): modulus symmetric about the center.
  std::vector<double> modulus;
  for (const auto& row : csv_rows(slurp(dir / "g/gmw_1_1.csv"))) {
    if (row[0] == "time") modulus.push_back(std::stod(row[4]));
  }
  REQUIRE(modulus.size() % 2 == 1);
  double peak = 0;
  for (double m : modulus) peak = std::max(peak, m);
  for (std::size_t k = 0; k < modulus.size(); ++k) {
    CHECK(std::abs(modulus[k] - modulus[modulus.size() - 1 - k]) <= 1e-10 * peak);
  }
}

TEST_CASE("curves") {
  TempDir dir;
  const auto r = invoke({"curves", "--out", dir / "curves.csv", "--pgrid", "0.5:0.25:6"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  std::vector<std::string> header;
  const auto rows = csv_rows(slurp(dir / "curves.csv"), &header);
  REQUIRE(header.size() == 16);
  for (const auto& row : rows) {
    const double P = std::stod(row[0]);
    if (P < std::sqrt(0.5)) CHECK(row[1].empty());
    for (int c = 1; c <= 6; ++c) {
      if (!row[c].empty()) CHECK(std::stod(row[c]) <= 2.0);
    }
    if (P >= 2) {
      for (int c : {1, 2, 4, 5, 6}) CHECK(std::stod(row[3]) >= std::stod(row[c]));
    }
    if (P < 1.4) CHECK(row[13].empty());
  }
}

TEST_CASE("cwt on the cosine fixture finds the ridge") {
  const auto r = invoke({"cwt", "--signal", kFixture});
  REQUIRE(r.code == 0);
  std::vector<double> scales;
  for (const auto& line : lines_of(r.out)) {
    if (line.starts_with("# scales: ")) {
      for (const auto& v : split(line.substr(10))) scales.push_back(std::stod(v));
    }
  }
  REQUIRE(scales.size() > 3);
  std::vector<std::string> header;
  const auto rows = csv_rows(r.out, &header);
  REQUIRE(rows.size() == 1024);
  REQUIRE(header.size() == 1 + 2 * scales.size());
  std::vector<double> mean(scales.size(), 0.0);
  for (std::size_t t = 256; t < 768; ++t) {
    for (std::size_t j = 0; j < scales.size(); ++j) {
      mean[j] += std::hypot(std::stod(rows[t][1 + 2 * j]), std::stod(rows[t][2 + 2 * j]));
    }
  }
  const auto best = static_cast<std::size_t>(std::max_element(mean.begin(), mean.end()) - mean.begin());
  const double omega0 = 2 * std::numbers::pi * 64 / 1024;
  const double wp = peak_frequency({9, 3});
  const double step = std::max(scales[best + 1] / scales[best], scales[best] / scales[best - 1]) - 1;
  CHECK(std::abs(scales[best] * omega0 / wp - 1) <= step);
}

TEST_CASE("output is identical across thread counts") {
  TempDir dir;
  for (const std::string threads : {"1", "3", "0"}) {
    const std::string sub = "t" + threads;
    REQUIRE(invoke({"map", "--out", dir / sub, "--beta", "0.55:60:12", "--gamma", "0.3:30:12",
                    "--threads", threads})
                .code == 0);
    REQUIRE(invoke({"curves", "--out", dir / (sub + "/curves.csv"), "--pgrid", "1:0.5:5",
                    "--threads", threads})
                .code == 0);
    REQUIRE(invoke({"cwt", "--signal", kFixture, "--boundary", "mirror", "--out",
                    dir / (sub + "/cwt.json"), "--format", "json", "--threads", threads})
                .code == 0);
    REQUIRE(invoke({"besselfit", "--beta", "1:50:12", "--gamma", "0.02:2:12", "--out",
                    dir / (sub + "/fit.csv"), "--threads", threads})
                .code == 0);
  }
  for (const char* name : {"area.csv", "skewness_zero.csv", "curves.csv", "cwt.json", "fit.csv"}) {
    const std::string a = slurp(dir / ("t1/" + std::string(name)));
    CHECK(!a.empty());
    CHECK(a == slurp(dir / ("t3/" + std::string(name))));
    CHECK(a == slurp(dir / ("t0/" + std::string(name))));
  }
}

TEST_CASE("limits table") {
  const auto r = invoke({"limits", "--duration", "3", "--gamma", "1,0.5,0.1,0.01"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][4]) < std::stod(rows[i - 1][4]));
  }
  CHECK(rows[0][3] == "lognormal");
}

TEST_CASE("besselfit reports the optimum") {
  const auto r = invoke({"besselfit"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(std::stod(rows[0][0]) - 22) <= 2);
  CHECK(std::abs(std::stod(rows[0][1]) - 0.1) <= 0.02);
  CHECK(std::abs(std::stod(rows[0][2]) - 0.9995) <= 0.0005);
  CHECK(rows[0][3] == "10000");
}
