#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quadnet/cli/app.hpp"
#include "quadnet/cli/corpus.hpp"

using namespace quadnet;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("quadnet_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("net subcommands on the examples") {
  for (const auto& e : example_nets()) {
    auto path = temp_file(e.name + ".net", e.document());
    auto d = run({"discriminant", "--net", path});
    CHECK(d.code == kExitOk);
    auto s = run({"net-stability", "--net", path, "--json"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find(to_string(e.verdict)) != std::string::npos);
    CHECK(s.out.find("\"command\"") != std::string::npos);
    CHECK(s.out.find("\"version\"") != std::string::npos);
    auto b = run({"baselocus", "--net", path});
    CHECK(b.code == kExitOk);
    CHECK(run({"good", "--net", path}).code == kExitOk);
  }
}

TEST_CASE("classify, segre and hm") {
  auto q = temp_file("a4.quartic", "F = l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n\n");
  auto c = run({"classify", "--quartic", q});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("A4") != std::string::npos);

  auto p = temp_file("cone.pencil", "Q1 = y^2 + w^2\nQ2 = 2*x*y + z^2 + w^2\n");
  auto s = run({"segre", "--pencil", p});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("[(2,1),1]") != std::string::npos);

  auto sys = temp_file("family1.system",
                       "Q1 = 3*x0^2 - 2*x0*x1 + 5*x0*x2 + x1^2 - x1*x2 + 7*x2^2 + 4*x0*x3 - x3^2\n"
                       "Q2 = 2*x0^2 + x0*x1 - 6*x1*x3 + x2*x3 + 9*x3^2\nQ3 = 6*x3^2\n");
  auto h = run({"hm", "--system", sys, "--lambda", "21,17,5,-43", "--json"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("\"value\": -6") != std::string::npos);
}

TEST_CASE("gale on the A4 net") {
  auto path = temp_file("a4g.net", example_net("A4").document());
  auto g = run({"gale", "--net", path, "--point", "2,1,0,0", "--verify"});
  CHECK(g.code == kExitOk);
  auto off = run({"gale", "--net", path, "--point", "1,1,1,1"});
  CHECK(off.code == kExitMath);
}

TEST_CASE("exit codes") {
  CHECK(run({"discriminant", "--net", temp_file("bad.net", "Q1 = x^2 +\n")}).code == kExitParse);
  CHECK(run({"discriminant", "--net", temp_file("implicit.net", "Q1 = 2x*y\nQ2 = x^2\nQ3 = y^2\n")}).code ==
        kExitParse);
  CHECK(run({"nonsense"}).code == kExitParse);
  CHECK(run({"hm", "--system", temp_file("sys.system", "F = x0^2\n"), "--lambda", "1,1,-1"}).code == kExitMath);
  auto j = run({"discriminant", "--net", temp_file("bad2.net", "Q1 = x^2 +\n"), "--json"});
  CHECK(j.code == kExitParse);
  CHECK(j.out.find("\"result\": null") != std::string::npos);
}

TEST_CASE("atlas subcommands are deterministic") {
  auto a = run({"atlas", "verify", "--row", "6", "--trials", "2", "--json"});
  auto b = run({"atlas", "verify", "--row", "6", "--trials", "2", "--json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto e = run({"atlas", "enumerate"});
  CHECK(e.code == kExitOk);
}
