// Copyright (c) 2026 the zxand developers
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "zxand/cli.hpp"

using namespace zxand;

namespace {

std::filesystem::path write_tmp(const std::string& name,
                                const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::vector<const char*> argv = {"zxand"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval prints the matrix in the text format") {
  auto p = write_tmp("cli_and.zx", "(and)\n");
  Result r = cli({"eval", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "2 4\n1 1 1 0\n0 0 0 1\n");
}

TEST_CASE("eq distinguishes equal from unequal and sets the exit code") {
  auto a = write_tmp("cli_a.zx", "(seq (z 2 1 0) (x 1 2))\n");
  auto b = write_tmp("cli_b.zx",
                     "(seq (par (x 1 2) (x 1 2)) (par (id 1) (swap) (id 1)) "
                     "(par (z 2 1 0) (z 2 1 0)))\n");
  auto c = write_tmp("cli_c.zx", "(z 1 1 pi)\n");
  auto d = write_tmp("cli_d.zx", "(z 1 1 0)\n");
  CHECK(cli({"eq", a.string(), b.string()}).code == 0);
  Result r = cli({"eq", c.string(), d.string()});
  CHECK(r.code == 1);
  CHECK(r.out == "unequal\n");
}

TEST_CASE("circuit inputs are sniffed and classified") {
  auto p = write_tmp("cli_tof.circ", "width 3\ntof 2 0 1\n");
  Result r = cli({"classify", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "Bijection\n");
  Result j = cli({"--json", "classify", p.string()});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"Bijection\"") != std::string::npos);
}

TEST_CASE("check-axioms passes on the lemma set") {
  Result r = cli({"check-axioms", "--set", "lemmas"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS lemma.iwama") != std::string::npos);
}

TEST_CASE("synth output evaluates back to its matrix") {
  auto m = write_tmp("cli_tri.mat", "2 2\n1 0\n1 1\n");
  Result s = cli({"synth", m.string()});
  REQUIRE(s.code == 0);
  auto d = write_tmp("cli_tri.zx", s.out);
  Result e = cli({"eval", d.string()});
  CHECK(e.code == 0);
  CHECK(e.out == "2 2\n1 0\n1 1\n");
}

TEST_CASE("cross-check and dot run on any input kind") {
  auto p = write_tmp("cli_x.zx", "(seq (x 1 2) (par (z 1 1 pi) (id 1)))\n");
  CHECK(cli({"cross-check", p.string()}).code == 0);
  Result r = cli({"dot", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("graph zxand") == 0);
}

TEST_CASE("translate is a semantic bridge in both directions") {
  auto p = write_tmp("cli_cnotish.zx", "(cnot)\n");
  Result totof = cli({"translate", "--to", "tof", p.string()});
  REQUIRE(totof.code == 0);
  auto circ = write_tmp("cli_out.circ", totof.out);
  Result back = cli({"translate", "--to", "zx", circ.string()});
  REQUIRE(back.code == 0);
  auto zx = write_tmp("cli_back.zx", back.out);
  CHECK(cli({"eq", p.string(), zx.string()}).code == 0);
  // A diagram is not a valid --to zx input.
  CHECK(cli({"translate", "--to", "zx", p.string()}).code == 2);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli({"eval", "/nonexistent/zx"}).code == 2);
  auto bad = write_tmp("cli_bad.zx", "(z 1 1 tau)\n");
  CHECK(cli({"eval", bad.string()}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("deterministic output") {
  auto p = write_tmp("cli_det.zx", "(seq (tof) (par (id 1) (cnot)))\n");
  Result r1 = cli({"simplify", "--trace", p.string()});
  Result r2 = cli({"simplify", "--trace", p.string()});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}
