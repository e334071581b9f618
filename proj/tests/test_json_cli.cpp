#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ellgen/json_io.hpp"
#include "ellgen/sampling.hpp"
#include "helpers.hpp"

using namespace ellgen;
using ellgen::test::kind_of;
using ellgen::test::random_series;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ellgen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ellgen_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("USeries JSON round trip") {
  std::mt19937_64 rng(test::kSeed + 70);
  for (int trial = 0; trial < 20; ++trial) {
    const USeries s = random_series(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(parse_useries(print_useries(s)) == s);
  }
  CHECK(print_useries(USeries({Rat(2), Rat(0), Rat(-1, 3)}, 4)) ==
        R"j({"coeffs":[[0,"2"],[2,"-1/3"]],"order":4,"u_means":"q^(1/2)","var":"u"})j");
}

TEST_CASE("Manifold JSON round trip") {
  std::mt19937_64 rng(test::kSeed + 71);
  for (int n = 1; n <= 4; ++n) {
    const Manifold m = random_manifold(n, rng);
    CHECK(parse_manifold(print_manifold(m)) == m);
  }
  const Manifold k3 = parse_manifold(R"j({"name":"K3","dim":4,"pontryagin_numbers":{"[1]":-48}})j");
  CHECK(k3.number(Partition({1})) == -48);
}

TEST_CASE("JSON diagnostics") {
  auto message = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const std::string broken = message([] { parse_manifold("{\n  \"dim\": 4,\n  \"pontryagin_numbers\": {\n"); });
  CHECK(broken.find("line 4") != std::string::npos);
  CHECK(message([] { parse_manifold(R"j({"dim":"four","pontryagin_numbers":{}})j"); }).find("'dim'") !=
        std::string::npos);
  CHECK(message([] { parse_manifold(R"j({"dim":4,"pontryagin_numbers":{"[1]":"x/2"}})j"); })
            .find("pontryagin_numbers.[1]") != std::string::npos);
  CHECK(message([] { parse_useries(R"j({"order":2,"coeffs":[[5,"1"]]})j"); }).find("coeffs[0][0]") !=
        std::string::npos);
  CHECK(kind_of([] { parse_manifold(R"j({"dim":4})j"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_manifold(R"j({"dim":6,"pontryagin_numbers":{}})j"); }) == ErrorKind::DimNotMultipleOf4);
}

TEST_CASE("genus command") {
  const std::string k3 = write_file("k3.json", R"j({"name":"K3","dim":4,"pontryagin_numbers":{"[1]":"-48"}})j");
  const std::string zero = write_file("zero.json", R"j({"name":"zero","dim":8,"pontryagin_numbers":{}})j");
  const std::string quadric =
      write_file("quadric.json", R"j({"name":"Q","dim":8,"pontryagin_numbers":{"[1,1]":"8","[2]":"14"}})j");

  Result r = run_cli({"genus", "--manifold", k3, "--genus", "ell2", "--uorder", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 + 48 q^(1/2) + 48 q + 192 q^(3/2) + O(q^2)\n");
  CHECK(run_cli({"genus", "--manifold", zero, "--genus", "ell1"}).out == "0\n");
  CHECK(run_cli({"genus", "--manifold", quadric, "--genus", "ahat"}).out == "0\n");
  CHECK(run_cli({"genus", "--manifold", quadric, "--genus", "signature"}).out == "2\n");

  r = run_cli({"genus", "--manifold", k3, "--genus", "ell2", "--uorder", "3", "--format", "json"});
  CHECK(parse_useries(r.out) == USeries({Rat(2), Rat(48), Rat(48)}, 3));

  ::setenv("GENUS_DEFAULT_UORDER", "2", 1);
  CHECK(run_cli({"genus", "--manifold", k3, "--genus", "ell2"}).out == "2 + 48 q^(1/2) + O(q)\n");
  ::setenv("GENUS_DEFAULT_UORDER", "zero", 1);
  CHECK(run_cli({"genus", "--manifold", k3, "--genus", "ell2"}).code == 2);
  ::unsetenv("GENUS_DEFAULT_UORDER");
}

TEST_CASE("exit-code contract") {
  const std::string bad = write_file("bad.json", "{\"dim\": 4,\n \"pontryagin_numbers\": {\"[1]\": }\n}");
  Result r = run_cli({"genus", "--manifold", bad, "--genus", "ell2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  const std::string six = write_file("six.json", R"j({"dim":6,"pontryagin_numbers":{}})j");
  CHECK(run_cli({"genus", "--manifold", six, "--genus", "ell2"}).code == 3);
  CHECK(run_cli({"genus", "--manifold", "/nonexistent.json", "--genus", "ell2"}).code == 2);
  CHECK(run_cli({"genus", "--manifold", six, "--genus", "nope"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"hypersurface", "--ambient", "4", "--degree", "2"}).code == 3);
  CHECK(run_cli({"sobolev", "--m", "1", "--b", "1"}).code == 3);
  CHECK(run_cli({"verify", "--check", "nope"}).code == 2);
  CHECK(run_cli({"verify", "--check", "transformation-laws", "--tau", "-1"}).code == 3);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify command") {
  Result r = run_cli({"verify", "--check", "cancellation", "--samples", "100", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["residuals"].size() == 100);
  CHECK(run_cli({"verify", "--check", "modular-relation", "--n", "2", "--uorder", "12"}).code == 0);
  CHECK(run_cli({"verify", "--check", "route-equivalence", "--n", "2", "--samples", "2"}).code == 0);
  r = run_cli({"verify", "--check", "transformation-laws", "--tau", "i"});
  CHECK(r.code == 0);
  CHECK(run_cli({"verify", "--check", "transformation-laws", "--tau", "0.2+0.9i"}).code == 0);
  // Too short a truncation cannot meet the tolerance: a check failure, not a usage error.
  CHECK(run_cli({"verify", "--check", "transformation-laws", "--tau", "0.1+0.3i", "--uorder", "6"}).code == 1);
  const Result a = run_cli({"verify", "--check", "cancellation", "--seed", "7"});
  const Result b = run_cli({"verify", "--check", "cancellation", "--seed", "7"});
  CHECK(a.out == b.out);
}

TEST_CASE("hypersurface, bundles and sobolev commands") {
  Result r = run_cli({"hypersurface", "--ambient", "5", "--degree", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["manifold"]["pontryagin_numbers"]["[1,1]"] == "8");
  CHECK(j["manifold"]["pontryagin_numbers"]["[2]"] == "14");
  CHECK(j["signature"] == "2");
  CHECK(j["ahat"] == "0");
  const USeries ell2 = useries_from_json(j["ell2"]);
  CHECK(ell2[0] == 0);
  CHECK(ell2[1] == 2);
  r = run_cli({"hypersurface", "--ambient", "3", "--degree", "1"});
  CHECK(r.out.find("\"[1]\":\"3\"") != std::string::npos);
  CHECK(r.out.find("signature = 1") != std::string::npos);

  r = run_cli({"bundles", "--n", "2", "--twist", "theta2", "--uorder", "2"});
  CHECK(r.out == "u^0: 1\nu^1: -Λ^1(T) + 8·1\n");

  r = run_cli({"sobolev", "--m", "16", "--b", "1.0", "--diam", "2"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["residual"].get<double>() < 1e-12);
  CHECK(j["R"].get<double>() == doctest::Approx(2.0 / j["C_b"].get<double>()));
}
