#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/cli.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/report.hpp"
#include "recurpart/saddle.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace recurpart;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv{"recurpart"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary; returns the exit status and stdout.
std::pair<int, std::string> shell(const std::string& args) {
  const char* exe = std::getenv("RECURPART_CLI");
  REQUIRE(exe != nullptr);
  const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) text.append(buf, k);
  const int status = pclose(p);
  return {WEXITSTATUS(status), text};
}

std::string value_line(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  }
  return {};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("count") {
  const Run r = run({"count", "--n", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "p_F(5) = 6\n");
  const Run o = run({"count", "--n", "100", "--oracle"});
  CHECK(o.out.find("p_F(100) = 97075") != std::string::npos);
  CHECK(o.out.find("(match)") != std::string::npos);
}

TEST_CASE("binary and library agree") {
  auto [code, text] = shell("count --n 1000");
  CHECK(code == 0);
  CHECK(text == "p_F(1000) = 1013742289697\n");
  auto [c2, consts] = shell("constants --digits 40");
  CHECK(c2 == 0);
  CHECK(value_line(consts, "c1").rfind("-0.20436188340938606569306837484748208", 0) == 0);
}

TEST_CASE("numbers are printed with the shared formatter") {
  const Run r = run({"constants"});
  CHECK(value_line(r.out, "log_phi") == cli_number(log_phi()));
  CHECK(value_line(r.out, "residue_constant") == cli_number(c2_exact()));
  const Run s = run({"saddle", "--n", "10000"});
  CHECK(value_line(s.out, "solve_alpha") == cli_number(solve_alpha(recurpart::HPReal(10000))));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"count"}).code == kExitUsage);
  CHECK(run({"count", "--n", "abc"}).code == kExitUsage);
  CHECK(run({"count", "--n", "-3"}).code == kExitValidation);
  CHECK(run({"estimate", "--n", "10"}).code == kExitValidation);
  CHECK(run({"count", "--n", "5", "--recurrence", "/nonexistent/r.json"}).code ==
        kExitValidation);
  CHECK(run({"table", "--nmax", "5", "--out", "/nonexistent/dir/t.csv"}).code == kExitValidation);
  CHECK(shell("frobnicate").first == kExitUsage);
  CHECK(shell("count --n -1").first == kExitValidation);
}

TEST_CASE("recurrence files") {
  const fs::path good = temp_file("recurpart_pell.json");
  std::ofstream(good) << R"({"label": "pell", "coeffs": [2, 1], "initial": [1, 2]})";
  const Run r = run({"count", "--n", "100", "--recurrence", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "p_pell(100) = 2871\n");

  const fs::path bad = temp_file("recurpart_bad.json");
  std::ofstream(bad) << R"({"label": "x", "coeffs": [1, 1], "initial": [2, 3]})";
  CHECK(run({"count", "--n", "5", "--recurrence", bad.string()}).code == kExitValidation);
  std::ofstream(bad) << "{not json";
  CHECK(run({"count", "--n", "5", "--recurrence", bad.string()}).code == kExitValidation);
}

TEST_CASE("csv output") {
  const Run t = run({"table", "--nmax", "4"});
  CHECK(t.code == 0);
  std::istringstream is(t.out);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') data.push_back(line);
  }
  REQUIRE(data.size() == 6);
  CHECK(data[0] == "n,count");
  CHECK(data[5] == "4,4");

  const fs::path out = temp_file("recurpart_cmp.csv");
  const Run c = run({"compare", "--nmax", "1000", "--decades", "--out", out.string()});
  CHECK(c.code == 0);
  std::ifstream in(out);
  std::string header;
  while (std::getline(in, header) && (header.empty() || header[0] == '#')) {
  }
  CHECK(header == "n,log_exact,log_estimate,leading,abs_err,normalized_err");
  CHECK(fs::exists(out.string() + ".meta.json"));
}

TEST_CASE("zeta and loggen") {
  const Run z = run({"zeta", "--re", "2", "--im", "3", "--digits", "40"});
  CHECK(z.code == 0);
  CHECK(value_line(z.out, "re").rfind("1.787429197754532114167796098427916", 0) == 0);
  const Run l = run({"loggen", "--s", "0.1"});
  CHECK(l.code == 0);
  CHECK(!value_line(l.out, "difference").empty());
}
