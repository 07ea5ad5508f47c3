#include "test_util.hpp"

#include "cli.hpp"
#include "sj/actions.hpp"
#include "sj/json_io.hpp"

#include <sstream>

using namespace sjt;

namespace {

struct Run {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "sj");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = sj::cli::run(args, in, out, err);
  return {code, out.str()};
}

const char* kPoint = R"({"X":[[0.1]],"Y":[[1.5]],"U":[[0.2]],"V":[[0.3]]})";

}  // namespace

TEST_CASE("json round trip") {
  Rng rng(81);
  const auto p = rng.jacobi_point(2, 1);
  const auto q = jacobi_point_from_json(Json::parse(to_json(p).dump()));
  CHECK(max_abs_diff(q.omega(), p.omega()) == 0.0);
  CHECK(max_abs_diff(q.Z(), p.Z()) == 0.0);
  const auto g = rng.jacobi_element(2, 2);
  const auto h = jacobi_element_from_json(Json::parse(to_json(g).dump()));
  CHECK(jacobi_distance(g, h) == 0.0);
  const auto d = rng.disk_point(1, 2);
  CHECK(max_abs_diff(disk_point_from_json(to_json(d)).eta(), d.eta()) == 0.0);
  CHECK(cplx_from_json(Json::parse("[1.5, -2]")) == cplx(1.5, -2));
  CHECK_THROWS_AS(rmat_from_json(Json::parse("[[1, 2], [3]]")), MalformedInput);
  CHECK_THROWS_AS(siegel_point_from_json(Json::parse(R"({"X": [[0]]})")), MalformedInput);
  CHECK_THROWS_AS(tolerances_from_json(Json::parse(R"({"bogus": 1})")), MalformedInput);
  CHECK(tolerances_from_json(Json::parse(R"({"memb_tol": 1e-7})")).memb_tol == 1e-7);
}

TEST_CASE("cli volume") {
  const auto r = run({"volume", "--n", "1", "--json-indent", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"value\":1.0471975511965976}\n");
  CHECK(run({"volume", "--n", "9"}).code == 64);
}

TEST_CASE("cli act with the identity echoes the point") {
  const std::string in = std::string(R"({"g":{"A":[[1]],"B":[[0]],"C":[[0]],"D":[[1]]},"p":)") + kPoint + "}";
  const auto r = run({"act"}, in);
  REQUIRE(r.code == 0);
  CHECK(r.json()["point"] == Json::parse(kPoint));
}

TEST_CASE("cli error mapping") {
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"act"}, "{not json").code == 65);
  CHECK(run({"act"}, R"({"g": {}})").code == 65);
  const auto bad = run({"reduce", "--space", "hn"}, R"({"X":[[0]],"Y":[[-2]]})");
  CHECK(bad.code == 2);
  const auto e = bad.json()["error"];
  CHECK(e["code"] == "NotPositiveDefinite");
  CHECK(e.contains("message"));
  CHECK(e["defect"].is_number());
  CHECK(run({"cayley"}, kPoint).code == 64);
}

TEST_CASE("cli subcommands produce json") {
  CHECK(run({"cayley", "--to-disk"}, kPoint).json()["round_trip_residual"].get<double>() < 1e-12);
  CHECK(run({"metric"}, kPoint).json()["dimension"] == 4);
  CHECK(run({"volume-density"}, R"({"X":[[0]],"Y":[[2]],"U":[[0]],"V":[[0]]})").json()["value"] == 0.125);
  CHECK(run({"laplacian"}, kPoint).json()["relative_defect"].get<double>() < 1e-6);
  CHECK(run({"operator", "--name", "T"}, kPoint).code == 0);
  CHECK(run({"operator", "--name", "nope"}, kPoint).code == 2);
  CHECK(run({"invariance-test", "--what", "operator", "--name", "K", "--trials", "3"}).json()["max_defect"].get<double>() <
        1e-8);
  CHECK(run({"invariance-test", "--what", "volume", "--space", "hn", "--n", "2"}).json()["max_defect"].get<double>() <
        1e-9);
  const auto ip = run({"invariant-poly", "--family", "p", "--indices", "1"},
                      R"({"omega":{"re":[[0]],"im":[[1]]},"z":{"re":[[1]],"im":[[0]]}})");
  CHECK(ip.json()["value"] == 1.0);
  const auto red = run({"reduce", "--space", "hn"}, R"({"X":[[5]],"Y":[[1]]})").json();
  CHECK(red["word"] == Json::parse(R"(["T^-5"])"));
  CHECK(red["membership"]["member"] == true);
  CHECK(run({"membership", "--space", "hnm"}, kPoint).json()["membership"]["member"] == true);
  CHECK(run({"bessel", "--s-re", "0.5", "--z", "1"}).json()["values"][0][0].get<double>() ==
        doctest::Approx(0.4610685044478946));
  CHECK(run({"eigen-check", "--entry", "2"}).json()["entries"].size() == 3);
  CHECK(run({"eigen-check", "--entry", "4"}).json()["entries"].size() == 6);
  CHECK(run({"eigen-check", "--entry", "7"}).code == 64);
  CHECK(run({"eisenstein", "--bound", "3"}).json()["cocycle_max_defect"].get<double>() < 1e-10);
  CHECK(run({"torus-gram", "--grid", "64"}).json()["gram_max_deviation"].get<double>() < 1e-6);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"invariance-test", "--what", "metric", "--space", "disk", "--n", "2", "--seed", "5"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto w = args;
  w.insert(w.end(), {"--workers", "3"});
  CHECK(run(w).out == a.out);
  CHECK(run({"volume", "--n", "1", "--estimate", "--samples", "5000", "--workers", "1"}).out ==
        run({"volume", "--n", "1", "--estimate", "--samples", "5000", "--workers", "4"}).out);
}
