#include "spinproj/cli.hpp"
#include "spinproj/serialize.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace spinproj;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "spinproj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("projector") {
  auto r = run({"projector", "--spin", "1", "--m", "0", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("P = 1 - Sz^2 ; diag(0, 1, 0)\n", 0) == 0);

  r = run({"projector", "--spin", "1/2", "--m", "1/2", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\frac{1}{2} + \\hat S_z") != std::string::npos);

  r = run({"projector", "--spin", "3/2", "--m", "-1/2", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["m"]["twice"] == -1);
  CHECK(operator_from_json(j["operator"]).diagonal()[2] == BigRational(1));
}

TEST_CASE("usage errors produce no output") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"projector", "--spin", "1", "--m", "1/2"},
           {"projector", "--spin", "1", "--m", "2"},
           {"projector", "--spin", "-1", "--m", "0"},
           {"projector", "--spin", "1/3", "--m", "0"},
           {"projector", "--spin", "1"},
           {"funcal", "--spin", "1", "--values", "1,2"},
           {"funcal", "--spin", "1", "--values", "1,,2"},
           {"funcal", "--spin", "1"},
           {"interpolate", "--nodes", "1,1", "--values", "1,2"},
           {"interpolate", "--nodes", "1,2", "--values", "1"},
           {"reduce", "--spin", "1", "--power", "-1"},
           {"verify", "--spin", "51"},
           {"verify", "--spin", "2", "--max-twos", "3"},
           {"verify", "--spin", "1", "--format", "yaml"},
           {"bogus"},
           {}}) {
    CAPTURE(args.size() > 0 ? args[0] : "");
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("funcal, reduce and interpolate") {
  CHECK(run({"funcal", "--spin", "1/2", "--values", "1/4,1/4"}).out == "f(Sz) = 1/4 ; diag(1/4, 1/4)\n");
  CHECK(run({"funcal", "--spin", "1", "--values", "1,1,1"}).out == "f(Sz) = 1 ; diag(1, 1, 1)\n");
  CHECK(run({"funcal", "--spin", "1", "--values", "1,0,-1"}).out == "f(Sz) = Sz ; diag(1, 0, -1)\n");
  CHECK(run({"funcal", "--spin", "1", "--values=-1,0,1"}).out == "f(Sz) = -Sz ; diag(-1, 0, 1)\n");
  CHECK(run({"funcal", "--spin", "1", "--coeffs", "0,0,0,1"}).out == "f(Sz) = Sz ; diag(1, 0, -1)\n");
  CHECK(run({"reduce", "--spin", "1", "--power", "3"}).out == "Sz^3 = Sz\n");
  CHECK(run({"interpolate", "--nodes", "1/2,-1/2", "--values", "1,0"}).out == "1/2 + x\n");
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--spin", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 6 checks passed") != std::string::npos);
  r = run({"verify", "--spin", "60", "--max-twos", "120", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["twoS"] == 120);
}
