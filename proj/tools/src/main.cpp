#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "amitsur/errors.hpp"
#include "amitsur/pipeline.hpp"
#include "io.hpp"

using namespace amitsur;
using io::Json;

namespace {

enum Exit : int { Ok = 0, Failure = 1, NotSplit = 2, OutOfScope = 3, Malformed = 4 };

struct Flags {
  std::uint64_t seed = 0;
  std::size_t degree = 0;
  std::string witness = "none";
  std::string max_disc = "1000000";
  std::size_t max_tries = 0;
  std::string input, output;
  bool bach = false;
};

Json read_input(const Flags& f) {
  std::stringstream text;
  if (f.input.empty() || f.input == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(f.input);
    if (!in) throw InvalidInput("cannot open " + f.input);
    text << in.rdbuf();
  }
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void write_output(const Flags& f, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (f.output.empty() || f.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output);
  out << text;
}

PipelineOptions options(const Flags& f) {
  PipelineOptions opts;
  opts.search.max_tries = f.max_tries;
  std::optional<Integer> bound;
  if (f.max_disc != "none" && f.max_disc != "0") {
    Integer b;
    if (b.set_str(f.max_disc, 10) != 0 || b < 0) throw InvalidInput("--max-disc expects a nonnegative integer");
    bound = b;
  }
  opts.search.max_disc = bound;
  opts.arithmetic.max_disc = bound;
  opts.arithmetic.factor_base.bach = f.bach;
  return opts;
}

std::optional<std::vector<Rational>> chosen_witness(const Flags& f, const Json& input) {
  if (f.witness == "none") return std::nullopt;
  auto w = io::witness_from(input);
  if (!w) throw InvalidInput("--witness split-u needs a 'witness_u' field in the input algebra");
  return w;
}

int run(const std::string& command, const Flags& f) {
  const RngSeed seed{f.seed};
  if (command == "gen") {
    const Instance inst = generate_instance(f.degree, seed, f.witness == "split-u" ? Witness::SplitU : Witness::None);
    write_output(f, io::to_json(inst.algebra, inst.split_u));
    return Ok;
  }
  const Json input = read_input(f);
  const PipelineOptions base = options(f);
  if (command == "present") {
    const StructureConstantAlgebra a = io::algebra_from(input);
    const AmitsurPresentation pres = present(a, seed, base.search, chosen_witness(f, input));
    write_output(f, Json{{"algebra", io::to_json(a)}, {"presentation", io::to_json(pres)}});
    return Ok;
  }
  if (command == "trivialize") {
    const Json& pres_json = input.contains("presentation") ? input.at("presentation") : input;
    AmitsurPresentation pres = io::presentation_from(pres_json);
    Trivialisation triv = trivialize_coboundary(pres.c, base.arithmetic);
    if (!input.contains("algebra")) {
      Json primes = Json::array();
      for (const auto& p : triv.s_primes) primes.push_back(p.get_str());
      write_output(f, Json{{"trivialisation", io::to_json(triv.a)},
                           {"s_primes", std::move(primes)},
                           {"divisor", io::to_json(divisor_of(triv.a))}});
      return Ok;
    }
    const StructureConstantAlgebra a = io::algebra_from(input.at("algebra"));
    write_output(f, io::to_json(assemble_certificate(a, std::move(pres), std::move(triv))));
    return Ok;
  }
  if (command == "split") {
    const StructureConstantAlgebra a = io::algebra_from(input);
    PipelineOptions opts = base;
    opts.witness_u = chosen_witness(f, input);
    write_output(f, io::to_json(explicit_isomorphism(a, seed, opts)));
    return Ok;
  }
  if (command == "verify") {
    const VerificationReport report = verify(io::certificate_from(input));
    write_output(f, io::to_json(report));
    return report.passed() ? Ok : Failure;
  }
  throw InvalidInput("unknown command " + command);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotACoboundary: return NotSplit;
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::DiscriminantTooLarge: return OutOfScope;
    case ErrorKind::InvalidInput:
    case ErrorKind::DimensionMismatch: return Malformed;
    default: return Failure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amitsur cocycles and explicit splittings of central simple algebras over Q"};
  app.require_subcommand(1, 1);
  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--witness", f.witness, "split-u | none")->check(CLI::IsMember({"split-u", "none"}));
    sub->add_option("--max-disc", f.max_disc, "discriminant bound, 'none' to disable");
    sub->add_option("--max-tries", f.max_tries, "sampling attempts per search (0: 16(dim+1))");
    sub->add_option("--output", f.output, "output file (default stdout)");
    sub->add_flag("--bach-bound", f.bach, "use the GRH factor-base bound");
  };
  auto* gen = app.add_subcommand("gen", "generate a conjugated matrix algebra");
  common(gen);
  gen->add_option("--degree", f.degree, "matrix degree d")->required();
  for (const char* name : {"present", "trivialize", "split", "verify"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    sub->add_option("--input", f.input, "input JSON file (default stdin)");
  }
  app.get_subcommand("present")->description("compute an Amitsur presentation");
  app.get_subcommand("trivialize")->description("trivialise the cocycle of a presentation");
  app.get_subcommand("split")->description("explicit isomorphism to M_d(Q)");
  app.get_subcommand("verify")->description("re-check a certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return Ok;
    std::cout << Json{{"error", "InvalidArguments"}, {"message", e.what()}}.dump() << "\n";
    return Malformed;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, f);
  } catch (const Error& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_output(f, Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_output(f, Json{{"error", "InvalidInput"}, {"message", e.what()}});
    return Malformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_output(f, Json{{"error", "InvalidInput"}, {"message", e.what()}});
    return Malformed;
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_output(f, Json{{"error", "Internal"}, {"message", e.what()}});
    return Failure;
  }
}
