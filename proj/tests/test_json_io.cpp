#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "poincare/json_io.hpp"
#include "poincare/verify.hpp"
#include "test_support.hpp"

using namespace poincare;

TEST_CASE("matrices round-trip row-major as [re, im] pairs") {
  MatX m(2, 3);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(-1, 0), Complex(0, -1), Complex(0.25, 0.5);
  const Json j = matrix_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["data"][1][0] == 3.0);
  CHECK(j["data"][1][1] == 4.0);
  CHECK(j["data"][3][0] == -1.0);
  CHECK(matrix_from_json(j) == m);
  Json bad = j;
  bad["data"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(bad), DomainError);
  bad = j;
  bad["data"][0] = Json::array({1.0});
  CHECK_THROWS_AS(matrix_from_json(bad), DomainError);
}

TEST_CASE("wave functions and fields round-trip exactly") {
  const auto grid = make_grid({1.5, 5.0, 4, "lebedev26"});
  for (int twice : {0, 1, 3}) {
    const WaveFunction f = support::random_wave(grid, SpinLabel(twice), 9 + twice);
    const Json j = wave_json(f);
    CHECK(j["schema"] == 1);
    CHECK(j["twice_spin"] == twice);
    CHECK(j["mass"] == 1.5);
    CHECK(j["grid"]["angular"] == "lebedev26");
    const WaveFunction g = wave_from_json(Json::parse(j.dump()));
    CHECK(g.amp == f.amp);
    CHECK(*g.grid == *f.grid);

    std::vector<Field> fields{phi_from_f(f), bispinor_from_f(f, BoostChoice::helicity), bw_construct(f)};
    if (twice > 0) fields.push_back(pf_construct(f, 1));
    if (twice == 3) fields.push_back(rarita_schwinger(f));
    for (const Field& fl : fields) {
      const Json fj = field_json(fl);
      CHECK(fj["layout"] == layout_name(fl.layout));
      const Field back = field_from_json(Json::parse(fj.dump()));
      CHECK(back.values == fl.values);
      CHECK(back.layout == fl.layout);
      CHECK(back.section == fl.section);
      CHECK(back.undotted == fl.undotted);
    }
  }
  Json j = wave_json(support::random_wave(grid, SpinLabel(1), 1));
  j["twice_spin"] = 2;  // rows now have the wrong width
  CHECK_THROWS_AS(wave_from_json(j), DomainError);
  j = wave_json(support::random_wave(grid, SpinLabel(1), 1));
  j.erase("grid");
  CHECK_THROWS_AS(wave_from_json(j), DomainError);
}

TEST_CASE("group specs") {
  // Z3 x| Z2 with inversion: S3
  const Json s3 = Json::parse(R"({"A": [[0,1,2],[1,2,0],[2,0,1]], "H": [[0,1],[1,0]], "action": [[0,1,2],[0,2,1]]})");
  const SemidirectProduct g = group_from_json(s3, "s3-json");
  CHECK(g.size() == 6);
  CHECK_FALSE(g.group().abelian());
  const MackeyReport r = verify_mackey(g);
  CHECK(r.passed());
  CHECK(r.sum_dim_squared == 6);
  const Json rj = mackey_json(r);
  CHECK(rj["passed"] == true);
  CHECK(rj["classes"].size() == 3);

  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"A": [[0]], "H": [[0]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"A": [[0,1],[1,1]], "H": [[0]], "action": [[0,1]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"A": [[0,1],[1,0]], "H": [[0]], "action": [[1,0]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"A": [["x"]], "H": [[0]], "action": [[0]]})")), DomainError);
  CHECK_THROWS_AS(group_from_json(Json::parse("[1, 2]")), DomainError);
}

TEST_CASE("atomic writes replace the target") {
  const auto path = std::filesystem::temp_directory_path() / "poincare_atomic_test.txt";
  write_atomic(path, "first");
  write_atomic(path, "second");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  CHECK(s == "second");
  auto tmp = path;
  tmp += ".tmp";
  CHECK_FALSE(std::filesystem::exists(tmp));
  std::filesystem::remove(path);
  CHECK_THROWS(write_atomic("/nonexistent-dir/x.json", "x"));
}

TEST_CASE("verify configuration is validated") {
  VerifyConfig c;
  c.tolerance["minkowski.no_such_check"] = 1.0;
  CHECK_THROWS_AS(run_verify(c), DomainError);
  c = VerifyConfig();
  c.mass = 0.0;
  CHECK_THROWS_AS(run_verify(c), DomainError);
  c = VerifyConfig();
  c.grid.angular = "icosahedron";
  CHECK_THROWS_AS(run_verify(c), DomainError);
  const auto names = verify_invariant_names();
  CHECK(std::find(names.begin(), names.end(), "fock.covariance_rotation") != names.end());
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}
