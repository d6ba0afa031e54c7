#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "ivt/cli.hpp"

using namespace ivt;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<const char *> args) {
  args.insert(args.begin(), "ivt");
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval") {
  const Run r = run({"eval", "--i", "13", "--j", "3", "--m", "0", "--n", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "(1,3)\n");
  CHECK(run({"eval", "--i", "16", "--j", "0", "--m", "1", "--n", "1"}).status == 1);
  CHECK(run({"eval", "--i", "1", "--j", "0", "--m", "x"}).status == 1);
  const Run big = run({"eval", "--i", "3", "--j", "12", "--m", "18446744073709551616"});
  CHECK(big.status == 0);
  CHECK(big.out == "(18446744073709551615,18446744073709551616)\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"std", "--i", "1"}).status == 1);
  CHECK(run({"std", "--i", "1", "--j", "2", "--format", "csv"}).status == 1);
  CHECK(run({"classify", "--width", "1"}).status == 1);
  CHECK(run({"orbit", "--i", "1", "--j", "1", "--box", "4"}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("std and orbit") {
  const Run s = run({"std", "--i", "6", "--j", "13"});
  CHECK(s.status == 0);
  CHECK(s.out.find("\"11\" -> \"01\";") != std::string::npos);
  const Run o = run({"orbit", "--i", "13", "--j", "3", "--m", "0", "--n", "2"});
  CHECK(o.status == 0);
  CHECK(o.out.find("steps_to_cycle: 2") != std::string::npos);
  const Run d = run({"orbit", "--i", "10", "--j", "0", "--box", "8", "--format", "dot"});
  CHECK(d.status == 0);
  CHECK(d.out.find("\"7,7\" [peripheries=2]") != std::string::npos);
}

TEST_CASE("orbit that never closes exits with 2") {
  const Run r = run({"orbit", "--i", "1", "--j", "1", "--max-steps", "1"});
  CHECK(r.status == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("collatz and algebra") {
  const Run c = run({"collatz"});
  CHECK(c.status == 0);
  CHECK(c.out.find("16 Collatz-like IVTs") != std::string::npos);
  CHECK(c.out.find("BROOM: 3") != std::string::npos);
  const Run a = run({"algebra", "--format", "json"});
  CHECK(a.status == 0);
  CHECK(a.out.find("\"rank_elimination\": 7") != std::string::npos);
}

TEST_CASE("classify writes into IVT_OUTPUT_DIR") {
  const auto dir = std::filesystem::temp_directory_path() / "ivt_cli_test";
  std::filesystem::create_directories(dir);
  ::setenv("IVT_OUTPUT_DIR", dir.c_str(), 1);
  const Run r = run({"classify", "--width", "4", "--format", "csv", "-o", "w4.csv"});
  ::unsetenv("IVT_OUTPUT_DIR");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "w4.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("i,j,class", 0) == 0);
  std::filesystem::remove_all(dir);

  CHECK(run({"classify", "--width", "4", "-o", "/nonexistent/dir/x.txt"}).status == 1);
}

TEST_CASE("stability check") {
  const Run r = run({"classify", "--check-stability", "--samples", "512", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"stable\": true") != std::string::npos);
}
