// Batch front end: validate W-graph data, compute and verify primitive Gram
// matrices, and expose the recovery utilities (rational number, polynomial,
// degree detection) for scripted use. Deterministic by construction: fixed
// prime and place schedules, no wall clock, no ambient randomness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wgram/gram_pipeline.hpp"

namespace {

using namespace wgram;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation or verification failure
constexpr int kExitUsage = 2;

WGraph load_wgraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open W-graph file " + path);
  return read_wgraph(in);
}

CoxeterSystem load_coxeter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Coxeter file " + path);
  return read_coxeter(in);
}

std::uint32_t parse_subset(const std::string& arg, int rank) {
  std::uint32_t mask = 0;
  std::istringstream is(arg);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int s = std::stoi(tok);
    if (s < 1 || s > rank) throw std::runtime_error("--subset-J: generator out of range");
    mask |= 1u << (s - 1);
  }
  return mask;
}

std::string rat_str(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

int cmd_validate(const std::string& wgraph_path, const std::string& coxeter_path) {
  WGraph g = load_wgraph(wgraph_path);
  CoxeterSystem cox = load_coxeter(coxeter_path);
  ValidationReport rep = validate_wgraph(g, cox);
  if (rep.ok()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
  return kExitFailure;
}

struct GramFlags {
  std::string wgraph_path, coxeter_path, subset, output, name = "rep";
  std::uint32_t prime = 251;
  int degree_bound = 200;
  long denominator_bound = 20;
  long place_start = 101;
  int jobs = 1;
  unsigned seed = 0;
  bool diag = false;
};

int cmd_gram(const GramFlags& f) {
  WGraph g = load_wgraph(f.wgraph_path);
  CoxeterSystem cox = load_coxeter(f.coxeter_path);
  ValidationReport rep = validate_wgraph(g, cox);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << "violation: " << v << '\n';
    return kExitFailure;
  }
  PipelineOptions opt;
  opt.lift.prime = f.prime;
  opt.lift.policy.degree_bound = f.degree_bound;
  opt.lift.policy.denominator_bound = f.denominator_bound;
  opt.lift.detect_start = f.place_start;
  opt.lift.jobs = f.jobs;
  opt.spot_seed = f.seed;
  std::optional<std::uint32_t> jmask;
  if (!f.subset.empty()) {
    try {
      jmask = parse_subset(f.subset, cox.rank());
    } catch (const std::exception& e) {
      std::cerr << "bad --subset-J: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  GramRun run;
  try {
    run = compute_gram(g, cox, jmask, opt);
  } catch (const std::exception& e) {
    std::cerr << "gram failed: " << e.what() << '\n';
    return kExitFailure;
  }
  if (!f.output.empty()) {
    std::ofstream out(f.output);
    if (!out) {
      std::cerr << "cannot write " << f.output << '\n';
      return kExitUsage;
    }
    write_matrix(out, run.P);
  } else {
    write_matrix(std::cout, run.P);
  }
  std::cout << run.stats.csv(f.name) << '\n';
  if (f.diag) std::cout << diagnostics(run, opt.lift).summary();
  return kExitOk;
}

struct RecoverFlags {
  std::string mode;
  int degree_bound = 200;
  long denominator_bound = 20;
  long place_start = 2;
};

std::vector<EvalSample> read_samples(std::istream& is) {
  std::vector<EvalSample> samples;
  std::string place, value;
  while (is >> place >> value) {
    Rat v(value);
    v.canonicalize();
    samples.push_back({Int(place), v});
  }
  return samples;
}

int cmd_recover(const RecoverFlags& f) {
  RecoveryPolicy policy;
  policy.degree_bound = f.degree_bound;
  policy.denominator_bound = f.denominator_bound;
  policy.place_start = f.place_start;

  if (f.mode == "rational") {
    Int a, b;
    int status = kExitOk;
    while (std::cin >> a >> b) {
      auto r = recover_rational(Residue(a, b));
      if (!r) {
        std::cout << "failure\n";
        status = kExitFailure;
      } else if (r->denominator == 1) {
        std::cout << r->numerator.get_str() << '\n';
      } else {
        std::cout << r->numerator.get_str() << '/' << r->denominator.get_str() << '\n';
      }
    }
    return status;
  }
  if (f.mode == "poly") {
    auto samples = read_samples(std::cin);
    LiftError why = LiftError::None;
    auto poly = lift_from_samples(samples, policy, &why);
    if (!poly) {
      std::cerr << "recovery failed (add places)\n";
      return kExitFailure;
    }
    std::cout << poly->str() << '\n';
    return kExitOk;
  }
  if (f.mode == "degree-detect") {
    auto samples = read_samples(std::cin);
    auto det = detect_degree(samples, policy);
    if (!det) {
      std::cerr << "no complete component yielded a lift (add samples)\n";
      return kExitFailure;
    }
    std::cout << "degree " << det->degree << '\n';
    std::cout << "places";
    for (int idx : det->chosen) std::cout << ' ' << samples[idx].place.get_str();
    std::cout << '\n';
    std::cout << "coefficients ";
    for (int i = 0; i <= det->scaled.degree(); ++i) {
      if (i) std::cout << ',';
      std::cout << rat_str(det->scaled[i]);
    }
    std::cout << '\n';
    return kExitOk;
  }
  std::cerr << "unknown recover mode " << f.mode << " (rational|poly|degree-detect)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gram matrices for W-graph representations of Hecke algebras"};
  app.require_subcommand(1);

  std::string wgraph_path, coxeter_path;
  auto* validate = app.add_subcommand("validate", "check W-graph conditions and relations");
  validate->add_option("--wgraph", wgraph_path)->required();
  validate->add_option("--coxeter", coxeter_path)->required();

  GramFlags gf;
  auto* gram = app.add_subcommand("gram", "compute a verified primitive Gram matrix");
  gram->add_option("--wgraph", gf.wgraph_path)->required();
  gram->add_option("--coxeter", gf.coxeter_path)->required();
  gram->add_option("--subset-J", gf.subset, "comma-separated generator list, e.g. 1,2,3");
  gram->add_option("--output", gf.output, "write the Gram matrix here instead of stdout");
  gram->add_option("--name", gf.name, "label for the statistics row");
  gram->add_option("--prime", gf.prime, "first prime of the p-adic schedule");
  gram->add_option("--degree-bound", gf.degree_bound);
  gram->add_option("--denominator-bound", gf.denominator_bound);
  gram->add_option("--place-start", gf.place_start);
  gram->add_option("--jobs", gf.jobs, "parallel per-place solves");
  gram->add_option("--seed", gf.seed, "offsets the verification spot place");
  gram->add_flag("--diagnostics", gf.diag, "print the observation probes");

  RecoverFlags rf;
  auto* recover = app.add_subcommand("recover", "recovery utilities reading stdin");
  recover->add_option("mode", rf.mode, "rational | poly | degree-detect")->required();
  recover->add_option("--degree-bound", rf.degree_bound);
  recover->add_option("--denominator-bound", rf.denominator_bound);
  recover->add_option("--place-start", rf.place_start);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(wgraph_path, coxeter_path);
    if (gram->parsed()) return cmd_gram(gf);
    if (recover->parsed()) return cmd_recover(rf);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
