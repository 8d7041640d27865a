#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hornlr/cli.hpp"

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hornlr::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

void check_error_record(const Run& r, const std::string& kind) {
  CHECK(r.out.empty());
  REQUIRE(!r.err.empty());
  CHECK(r.err.find('\n') == r.err.size() - 1);
  const auto j = parse(r.err);
  CHECK(j.at("error") == kind);
  CHECK(j.at("message").is_string());
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("lr") {
  const auto r = call({"lr", "--mu", "2,1,0", "--nu", "2,1,0", "--lambda", "3,2,1"});
  CHECK(r.code == 0);
  CHECK(parse(r.out).at("coefficient") == 2);

  const auto u = call({"lr", "--mu", "1", "--nu", "1", "--lambda", "3"});
  CHECK(u.code == 0);
  CHECK(parse(u.out).at("coefficient") == 0);

  const auto b = call({"lr", "--mu", "2,1,0", "--nu", "2,1,0", "--lambda", "3,2,1", "--method", "both", "--find-scaling", "4"});
  CHECK(b.code == 0);
  const auto j = parse(b.out);
  CHECK(j.at("oracle_coefficient") == 2);
  CHECK(j.at("agree") == true);
  CHECK(j.at("scaling") == 1);

  const auto neg = call({"lr", "--mu", "0,-1", "--nu", "1,0", "--lambda", "1,-1"});
  CHECK(parse(neg.out).at("coefficient") == 1);
}

TEST_CASE("estimate") {
  const auto r = call({"estimate", "--rho-diag", "0.5,0.5", "--k", "2"});
  CHECK(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j.at("k") == 2);
  CHECK(j.at("d") == 2);
  const auto& o = j.at("outcomes");
  REQUIRE(o.size() == 2);
  CHECK(o[0].at("frame") == nlohmann::json::array({2, 0}));
  CHECK(o[0].at("prob").get<double>() == doctest::Approx(0.75));
  CHECK(o[1].at("frame") == nlohmann::json::array({1, 1}));
  CHECK(o[1].at("prob").get<double>() == doctest::Approx(0.25));
  CHECK(o[0].contains("bound"));
}

TEST_CASE("estimate from a matrix file") {
  const auto path = std::filesystem::temp_directory_path() / "hornlr_cli_rho.json";
  {
    std::ofstream f(path);
    f << R"([[[0.5,0],[0,0.5]],[[0,-0.5],[0.5,0]]])";
  }
  const auto r = call({"estimate", "--rho-file", path.string(), "--k", "2", "--direct"});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  const auto o = parse(r.out).at("outcomes");
  // a pure state: all weight on the symmetric frame
  CHECK(o[0].at("prob").get<double>() == doctest::Approx(1.0));
  CHECK(o[1].at("prob").get<double>() == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
}

TEST_CASE("realize") {
  const auto r = call({"realize", "--mu", "1,0", "--nu", "1,0", "--lambda", "1,1"});
  CHECK(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j.at("residual").get<double>() <= 1e-6);
  CHECK(j.at("converged") == true);
  CHECK(j.at("A").size() == 2);
  CHECK(j.at("A")[0][0].size() == 2);

  const auto bad = call({"realize", "--mu", "1,0", "--nu", "1,0", "--lambda", "3,0", "--restarts", "2", "--steps", "50"});
  CHECK(bad.code == 1);
}

TEST_CASE("scan") {
  const auto r = call({"scan", "--rhoA", "0.5,0.5", "--rhoB", "0.5,0.5", "--p", "0.5", "--n-list", "4,8"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].at("n") == 4);
  CHECK(ls[1].at("n") == 8);
  CHECK(ls[0].at("coefficient").get<int>() >= 1);
  CHECK(ls[2].at("summary").at("witnesses") == 2);

  const auto csv = call({"scan", "--rhoA", "0.5,0.5", "--rhoB", "0.5,0.5", "--p", "0.5", "--n-list", "4,8", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
}

TEST_CASE("sweep") {
  const auto r = call({"sweep-theorem1", "--max-boxes", "3", "--d", "2"});
  CHECK(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j.at("success_rate") == 1.0);
}

TEST_CASE("check") {
  const auto r = call({"check", "--quick"});
  CHECK(r.code == 0);
  CHECK(parse(r.out).at("passed") == true);
}

TEST_CASE("identical arguments give identical bytes") {
  const std::vector<std::vector<std::string>> cmds{
      {"realize", "--mu", "2,1,0", "--nu", "2,1,0", "--lambda", "3,2,1", "--seed", "5"},
      {"scan", "--rhoA", "0.7,0.3", "--rhoB", "0.6,0.4", "--p", "0.5", "--n-list", "8,16"},
      {"estimate", "--rho-diag", "0.6,0.3,0.1", "--k", "6"},
  };
  for (const auto& c : cmds) {
    const auto a = call(c);
    auto with_workers = c;
    with_workers.insert(with_workers.begin(), {"--workers", "1"});
    const auto b = call(with_workers);
    CHECK(a.code == 0);
    CHECK(a.out == call(c).out);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("error records and exit codes") {
  check_error_record(call({}), "usage");
  CHECK(call({}).code == 2);
  check_error_record(call({"frobnicate"}), "usage");
  CHECK(call({"frobnicate"}).code == 2);
  check_error_record(call({"lr", "--mu", "1", "--nu", "1"}), "usage");
  CHECK(call({"lr", "--mu", "1", "--nu", "1", "--lambda", "2", "--bogus"}).code == 2);
  const auto dom = call({"lr", "--mu", "1,2", "--nu", "1", "--lambda", "2"});
  CHECK(dom.code == 1);
  check_error_record(dom, "domain");
  const auto cap = call({"estimate", "--rho-diag", "0.5,0.5", "--k", "13", "--direct"});
  CHECK(cap.code == 1);
  check_error_record(cap, "resource");
  const auto rho = call({"estimate", "--rho-diag", "0.5,0.7", "--k", "2"});
  CHECK(rho.code == 1);
  check_error_record(rho, "domain");
  const auto p = call({"scan", "--rhoA", "1,0", "--rhoB", "1,0", "--p", "1.5", "--n-list", "4"});
  CHECK(p.code == 1);
}

}
