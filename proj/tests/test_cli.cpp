#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "amitsur/errors.hpp"
#include "amitsur/pipeline.hpp"
#include "io.hpp"

using namespace amitsur;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args, const std::string& stdin_text = {}) {
  static int counter = 0;
  const std::string in = "cli_in_" + std::to_string(counter) + ".json";
  const std::string out = "cli_out_" + std::to_string(counter++) + ".json";
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string(AMITSUR_CLI) + " " + args + " < " + in + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::stringstream text;
  text << std::ifstream(out).rdbuf();
  std::remove(in.c_str());
  std::remove(out.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

}  // namespace

TEST_CASE("JSON roundtrips") {
  CHECK(io::rational_from(io::to_json(Rational(-7) / 3)) == Rational(-7) / 3);
  CHECK(io::rational_from(Json(5)) == 5);
  CHECK_THROWS_AS(io::rational_from(Json(0.5)), InvalidInput);

  const Instance inst = generate_instance(2, RngSeed{2}, Witness::SplitU);
  const Json a = io::to_json(inst.algebra, inst.split_u);
  CHECK(io::algebra_from(a).table() == inst.algebra.table());
  CHECK(io::witness_from(a) == inst.split_u);

  const auto cert = explicit_isomorphism(inst.algebra, RngSeed{0});
  const auto back = io::certificate_from(Json::parse(io::to_json(cert).dump()));
  CHECK(back.map == cert.map);
  CHECK(back.presentation.c.value() == cert.presentation.c.value());
  CHECK(back.trivialisation == cert.trivialisation);
  CHECK(verify(back).passed());

  CHECK_THROWS_AS(io::algebra_from(Json::parse(R"({"dim": 1})")), InvalidInput);
}

TEST_CASE("command line exit codes") {
  const Run gen = cli("gen --degree 2 --seed 3");
  REQUIRE(gen.code == 0);
  CHECK(Json::parse(gen.out).at("dim") == 4);

  const Run split = cli("split --seed 1", gen.out);
  REQUIRE(split.code == 0);
  const Run check = cli("verify", split.out);
  CHECK(check.code == 0);
  CHECK(Json::parse(check.out).at("passed") == true);

  const Run present = cli("present --seed 1", gen.out);
  REQUIRE(present.code == 0);
  const Run triv = cli("trivialize", present.out);
  REQUIRE(triv.code == 0);
  CHECK(cli("verify", triv.out).code == 0);

  Json tampered = Json::parse(split.out);
  tampered["map"][0][0] = "12345";
  CHECK(cli("verify", tampered.dump()).code == 1);

  const Json hamilton = io::to_json(StructureConstantAlgebra::quaternion(-1, -1));
  const Run h = cli("split", hamilton.dump());
  CHECK(h.code == 2);
  CHECK(Json::parse(h.out).at("error") == "NotACoboundary");

  const Run cubic = cli("split --max-disc 1", cli("gen --degree 3").out);
  CHECK(cubic.code == 3);
  CHECK(Json::parse(cubic.out).contains("error"));

  CHECK(cli("split", "{not json").code == 4);
  CHECK(cli("verify", R"({"degree": 2})").code == 4);
  CHECK(cli("present --witness split-u", gen.out).code == 4);
}
