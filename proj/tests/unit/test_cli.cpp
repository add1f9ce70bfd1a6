#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using fobnn::testing::data_path;
using fobnn::testing::read_text;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FOBNN_SAT_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string renz() { return data_path("renz.rn"); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fobnn_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("cli parse echoes the model") {
  const Run r = run("parse " + renz());
  CHECK(r.code == 0);
  CHECK(r.out.find("r_cat: C => E + 2*P @ k_cat*C") != std::string::npos);
  const Run f = run("parse " + renz() + " --fobnn --mass-action all");
  CHECK(f.out.find("P' - P >= 0") != std::string::npos);
  CHECK(run("parse " + data_path("renz.xml")).out == r.out);
}

TEST_CASE("cli encode emits DIMACS") {
  const Run r = run("encode " + renz());
  CHECK(r.code == 0);
  CHECK(r.out == read_text(data_path("renz.cnf")));
}

TEST_CASE("cli fixed points") {
  const Run r = run("fixedpoints " + renz() + " --mass-action all");
  CHECK(r.code == 0);
  CHECK(r.out.find("S=+,E=+,C=+,P=+\n") != std::string::npos);
  CHECK(run("fixedpoints " + renz() + " --mass-action all --backend cdcl").out == r.out);
}

TEST_CASE("cli transitions") {
  const Run r = run("transitions " + renz() + " --mass-action all --from S=+,E=+,C=+,P=+");
  CHECK(r.code == 0);
  CHECK(r.out == "S=+,E=+,C=+,P=+ -> S=+,E=+,C=+,P=+\n");
  const Run lim = run("transitions " + renz() + " --limit 3");
  CHECK(std::count(lim.out.begin(), lim.out.end(), '\n') == 3);
  const Run ext = run("transitions " + renz() + " --limit 1 --extended");
  CHECK(ext.out.find("dot(S)=") != std::string::npos);
  CHECK(run("transitions " + renz() + " --from S=+").code == 2);
}

TEST_CASE("cli graphs") {
  const Run dot = run("stg " + renz() + " --mass-action all --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out == read_text(data_path("renz_ma.dot")));
  CHECK(run("stg " + renz() + " --mass-action all").out == dot.out);
  const Run json = run("stg " + renz() + " --format json");
  CHECK(json.out.find("\"kind\": \"fobnn-base\"") != std::string::npos);
  CHECK(json.out.find("\"backend\"") != std::string::npos);
  CHECK(run("stg " + renz() + " --format json").out == json.out);
  const Run classic = run("classic-stg " + renz() + " --format json");
  CHECK(classic.out.find("\"kind\": \"classic\"") != std::string::npos);
}

TEST_CASE("cli compare") {
  const Run r = run("compare " + renz() + " --mass-action all");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"shared_edges\"") != std::string::npos);
  const std::string saved = temp_file("ma.json", run("stg " + renz() + " --mass-action all --format json").out);
  const Run self = run("compare " + renz() + " --mass-action all --against " + saved);
  CHECK(self.out.find("\"only_in_first\": []") != std::string::npos);
  CHECK(self.out.find("\"only_in_second\": []") != std::string::npos);
}

TEST_CASE("cli constraints file") {
  const std::string c = temp_file("c.txt", "# monotone product\nP' >= P\n");
  const Run with = run("stg " + renz() + " --constraints " + c + " --format json");
  const Run ma = run("stg " + renz() + " --mass-action P --format json");
  CHECK(with.code == 0);
  const auto edges = [](const std::string& s) { return s.substr(s.find("\"edges\""), s.find("\"kind\"") - s.find("\"edges\"")); };
  CHECK(edges(with.out) == edges(ma.out));
}

TEST_CASE("cli exit codes") {
  CHECK(run("parse /nonexistent/model.rn").code == 2);
  CHECK(run("parse " + temp_file("bad.rn", "species: A\nr: A => B @ A\n")).code == 2);
  CHECK(run("frobnicate " + renz()).code == 2);
  CHECK(run("stg " + renz() + " --format png").code == 2);
  CHECK(run("stg " + renz() + " --mass-action Q").code == 2);
  CHECK(run("stg " + renz() + " --backend nope").code == 2);
  std::string text = "species: ";
  for (int i = 0; i < 13; ++i) text += (i ? ", X" : "X") + std::to_string(i);
  CHECK(run("stg " + temp_file("big.rn", text + "\n")).code == 1);
  CHECK(run("classic-stg " + temp_file("big.rn", text + "\n")).code == 1);
  CHECK(run("--help").code == 0);
}
