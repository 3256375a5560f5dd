// Command-line front end: instance generation, encoding, Groebner basis
// computation, the full pipeline, and brute-force verification.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "fracgb/encode.hpp"
#include "fracgb/errors.hpp"
#include "fracgb/groebner.hpp"
#include "fracgb/oracle.hpp"
#include "fracgb/pipeline.hpp"
#include "fracgb/tailor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuaranteeViolated = 2;
constexpr int kExitInputError = 3;

fracgb::PredicateInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fracgb::InputError("cannot open " + path);
  return fracgb::parse_instance(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fracgb::InputError("cannot write " + path);
  out << text;
}

fracgb::Kind parse_kind(const std::string& name) {
  if (name == "not2") return fracgb::Kind::Not2;
  if (name == "oxr") return fracgb::Kind::Oxr;
  throw fracgb::InputError("unknown kind '" + name + "' (expected not2 or oxr)");
}

fracgb::Strategy parse_strategy(const std::string& name) {
  if (name == "empty") return fracgb::Strategy::Empty;
  if (name == "greedy") return fracgb::Strategy::Greedy;
  if (name == "random") return fracgb::Strategy::Random;
  throw fracgb::InputError("unknown strategy '" + name + "'");
}

int cmd_gen(const std::string& kind, int literals, int predicates, std::uint64_t seed,
            const std::string& out) {
  const auto [inst, planted] = fracgb::generate_satisfiable(parse_kind(kind), literals, predicates, seed);
  std::ostringstream text;
  text << "c planted instance, seed " << seed << "\n" << fracgb::serialize_instance(inst);
  write_output(out, text.str());
  return kExitOk;
}

int cmd_run(const std::string& in, const std::string& kind, const std::string& q,
            const std::string& strategy, std::uint64_t seed, std::uint32_t prime,
            const std::string& report_path) {
  const fracgb::PredicateInstance inst = read_instance(in);
  if (!kind.empty() && parse_kind(kind) != inst.kind)
    throw fracgb::InputError("instance file is of kind " + std::string(fracgb::kind_name(inst.kind)));

  fracgb::PipelineOptions opts;
  opts.q = fracgb::parse_rational(q);
  opts.strategy = parse_strategy(strategy);
  opts.seed = seed;
  opts.prime = prime;
  const fracgb::PipelineReport report = fracgb::run_pipeline(inst, opts);
  write_output(report_path, report.to_text());
  if (!report_path.empty()) std::cout << (report.all_flags() ? "ok" : "GUARANTEE VIOLATED") << "\n";
  return report.all_flags() ? kExitOk : kExitGuaranteeViolated;
}

int cmd_encode(const std::string& in, std::uint32_t prime, const std::string& out) {
  const fracgb::PredicateInstance inst = read_instance(in);
  const fracgb::TailorResult tailored = fracgb::tailor(inst);
  const fracgb::PolynomialSystem sys = fracgb::encode(tailored.instance, prime);
  write_output(out, sys.to_text());
  return kExitOk;
}

/// Reads one polynomial per line; `c` lines are comments, and an optional
/// `c vars=<k> p=<prime>` header pins the ring. Otherwise the arity is the
/// largest variable index seen and the modulus comes from --prime.
std::vector<fracgb::Polynomial> read_system(const std::string& path, std::uint32_t default_prime,
                                            int* num_vars_out) {
  std::ifstream in(path);
  if (!in) throw fracgb::InputError("cannot open " + path);
  std::vector<std::string> lines;
  int num_vars = 0;
  std::uint32_t prime = default_prime;

  std::string line;
  const std::regex header(R"(^c\s+vars=(\d+)\s+p=(\d+)\s*$)");
  const std::regex var(R"(y(\d+))");
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      num_vars = std::max(num_vars, std::stoi(m[1]));
      prime = static_cast<std::uint32_t>(std::stoul(m[2]));
      continue;
    }
    if (line.empty() || line[0] == 'c') continue;
    lines.push_back(line);
    for (auto it = std::sregex_iterator(line.begin(), line.end(), var); it != std::sregex_iterator();
         ++it) {
      num_vars = std::max(num_vars, std::stoi((*it)[1]));
    }
  }

  std::vector<fracgb::Polynomial> polys;
  for (const std::string& text : lines)
    polys.push_back(fracgb::Polynomial::parse(text, num_vars, prime));
  if (num_vars_out != nullptr) *num_vars_out = num_vars;
  return polys;
}

int cmd_gb(const std::string& in, std::uint32_t prime, const std::string& out) {
  int num_vars = 0;
  const std::vector<fracgb::Polynomial> polys = read_system(in, prime, &num_vars);
  const fracgb::GroebnerBasis basis = fracgb::buchberger(polys, fracgb::LexOrder::natural(num_vars));
  std::ostringstream text;
  for (const fracgb::Polynomial& g : basis.generators) text << g.to_string() << "\n";
  write_output(out, text.str());
  return kExitOk;
}

int cmd_verify(const std::string& in, std::uint32_t prime) {
  const fracgb::PredicateInstance inst = read_instance(in);
  if (inst.num_literals > fracgb::kMaxEnumerationVars)
    throw fracgb::InputError("verify needs at most 20 literals");

  bool ok = true;
  const auto report = [&](bool pass, const std::string& name) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
    ok = ok && pass;
  };

  if (!fracgb::is_satisfiable(inst)) {
    std::cout << "NotSatisfiable\n";
    return kExitGuaranteeViolated;
  }
  report(true, "satisfiable (brute force)");

  const fracgb::TailorResult tailored = fracgb::tailor(inst);
  report(fracgb::holds_property1(tailored.instance), "property 1 structural scan");
  report(fracgb::holds_property2(tailored.instance), "property 2 structural scan");
  report(fracgb::check_two_fifths(tailored.instance), "two-fifths bound");
  report(tailored.instance.predicates.empty() ||
             fracgb::brute_max_fraction(tailored.instance).fraction == fracgb::Rational(1, 1),
         "tailored instance satisfiable (brute force)");

  const fracgb::PolynomialSystem sys = fracgb::encode(tailored.instance, prime);
  bool degrees_ok = true;
  const int max_degree = inst.kind == fracgb::Kind::Not2 ? 3 : 2;
  for (const auto& [poly, id] : sys.predicate_polys) {
    degrees_ok = degrees_ok && poly.total_degree() <= max_degree && poly.support().size() <= 3;
  }
  report(degrees_ok, "degree and sparsity bounds");
  report(sys.size() == tailored.instance.predicates.size() +
                           fracgb::remaining_literals(tailored.instance).size(),
         "|F| = |P| + |L|");
  report(fracgb::check_variety_equivalence(sys, tailored.instance), "variety equivalence");

  // Removed predicates recover under loner reinsertion for satisfying
  // assignments of the tailored instance.
  const std::vector<std::uint32_t> variety = fracgb::brute_variety(sys.all_polys(), sys.num_vars);
  bool recovery = !variety.empty();
  std::mt19937_64 rng(0);
  for (int round = 0; round < 10 && recovery; ++round) {
    const std::uint32_t mask = variety[rng() % variety.size()];
    fracgb::Assignment partial(inst.num_literals, fracgb::kUnassigned);
    for (int v = 0; v < sys.num_vars; ++v)
      partial[sys.literal_of_var[v]] = static_cast<std::int8_t>((mask >> v) & 1);
    const fracgb::Assignment full = fracgb::reinsert_loners(partial, tailored.record, inst);
    recovery = fracgb::count_satisfied(inst, full) == static_cast<long long>(inst.predicates.size());
  }
  report(recovery, "removed predicates recovered (10 satisfying assignments)");

  std::cout << (ok ? "verify: all checks passed" : "verify: FAILURES") << "\n";
  return ok ? kExitOk : kExitGuaranteeViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-fractional Groebner pipeline for Max Not-2 and Max OXR instances"};
  app.require_subcommand(1);

  std::string kind = "not2", in, out, report_path, q = "3/4", strategy = "greedy";
  int literals = 10, predicates = 30;
  std::uint64_t seed = 0;
  std::uint32_t prime = 32003;

  CLI::App* gen = app.add_subcommand("gen", "write a planted satisfiable instance");
  gen->add_option("--kind", kind, "not2 or oxr")->required();
  gen->add_option("--literals", literals, "number of literals")->required();
  gen->add_option("--predicates", predicates, "number of predicates")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out, "output file (default stdout)");

  std::string run_kind;
  CLI::App* run = app.add_subcommand("run", "run the full pipeline and emit a report");
  run->add_option("--in", in, "instance file")->required();
  run->add_option("--kind", run_kind, "expected kind (cross-checked)");
  run->add_option("--q", q, "rational a/b in [0,1]");
  run->add_option("--strategy", strategy, "empty, greedy or random");
  run->add_option("--seed", seed, "seed for the random strategy");
  run->add_option("--prime", prime, "coefficient field modulus");
  run->add_option("--report", report_path, "report file (default stdout)");

  CLI::App* enc = app.add_subcommand("encode", "tailor an instance and write its polynomial system");
  enc->add_option("--in", in, "instance file")->required();
  enc->add_option("--prime", prime, "coefficient field modulus");
  enc->add_option("--out", out, "output file (default stdout)");

  CLI::App* gb = app.add_subcommand("gb", "print the reduced lex Groebner basis of a system file");
  gb->add_option("--in", in, "polynomial system file")->required();
  gb->add_option("--prime", prime, "modulus when the file has no header");
  gb->add_option("--out", out, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the brute-force oracle suite on an instance");
  verify->add_option("--in", in, "instance file")->required();
  verify->add_option("--prime", prime, "coefficient field modulus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(kind, literals, predicates, seed, out);
    if (run->parsed()) return cmd_run(in, run_kind, q, strategy, seed, prime, report_path);
    if (enc->parsed()) return cmd_encode(in, prime, out);
    if (gb->parsed()) return cmd_gb(in, prime, out);
    if (verify->parsed()) return cmd_verify(in, prime);
  } catch (const fracgb::ContradictionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuaranteeViolated;
  } catch (const fracgb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
