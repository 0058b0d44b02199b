// poldif: polynomial solutions of constant-coefficient PDEs p(D) f = q.
//
// Exit codes: 0 success, 1 verified-false / no solution / selftest
// failures, 2 usage or parse errors, 3 internal invariant violation.

#include "poldif/document.hpp"
#include "poldif/errors.hpp"
#include "poldif/expr.hpp"
#include "poldif/selftest.hpp"
#include "poldif/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace poldif;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

enum class OutputFormat { Text, Structured };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string vars = "x,y";
  std::string format;
  std::string p, q, f;
  std::optional<long> ambient;
  bool family = false;

  std::optional<long> arity;
  std::optional<long> degree;
  bool hom = false;
  std::vector<long> sigma;
  std::vector<long> kernel_dim;

  std::uint64_t seed = kDefaultSelftestSeed;
  long cases = 200;
};

// "@path" reads the expression from a file.
std::string resolve_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OutputFormat output_format(const std::string& flag) {
  std::string value = flag;
  if (value.empty()) {
    const char* env = std::getenv("POLDIF_FORMAT");
    value = env ? env : "text";
  }
  if (value == "text") return OutputFormat::Text;
  if (value == "structured") return OutputFormat::Structured;
  throw UsageError("unknown output format '" + value + "' (expected text or structured)");
}

class Runner {
 public:
  explicit Runner(const Options& opts)
      : opts_(opts), vars_(VariableSet::from_list(opts.vars)), format_(output_format(opts.format)) {}

  int solve() {
    const Polynomial p = input(opts_.p);
    const Polynomial q = input(opts_.q);
    if (!opts_.family && !opts_.ambient) {
      const SolveOutcome outcome = solve_pde(p, q);
      if (format_ == OutputFormat::Text) return emit(format(outcome.particular, vars_));
      return emit(to_structured(outcome, vars_).dump());
    }
    if (p.is_zero()) throw ZeroOperator(q.is_zero());
    const long k = opts_.ambient.value_or(std::max(0L, degree(q) + zero_order(p)));
    const SolveOutcome outcome = solution_family(p, q, k);
    if (format_ == OutputFormat::Structured) return emit(to_structured(outcome, vars_).dump());

    std::ostringstream out;
    out << "particular: " << format(outcome.particular, vars_) << "\n";
    out << "zero_order: " << outcome.zero_order << "\n";
    out << "ambient_degree: " << outcome.ambient_degree << "\n";
    out << "free_count: " << outcome.free_count;
    for (std::size_t i = 0; i < outcome.kernel_basis.size(); ++i) {
      out << "\nkernel[" << i + 1 << "]: " << format(outcome.kernel_basis[i], vars_);
    }
    return emit(out.str());
  }

  int verify_cmd() {
    const Polynomial residual = verify(input(opts_.p), input(opts_.f), input(opts_.q));
    const bool ok = residual.is_zero();
    if (format_ == OutputFormat::Text) {
      emit(format(residual, vars_) + "\n" + (ok ? "true" : "false"));
    } else {
      Document doc;
      doc["residual"] = to_structured(residual, vars_);
      doc["verified"] = ok;
      emit(doc.dump());
    }
    return ok ? kExitOk : kExitFalse;
  }

  int kernel() {
    const std::vector<Polynomial> basis = kernel_basis(input(opts_.p), *opts_.ambient);
    if (format_ == OutputFormat::Structured) {
      Document doc;
      doc["ambient_degree"] = *opts_.ambient;
      doc["free_count"] = basis.size();
      doc["kernel_basis"] = Document::array();
      for (const auto& g : basis) doc["kernel_basis"].push_back(to_structured(g, vars_));
      return emit(doc.dump());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? "\n" : "") << format(basis[i], vars_);
    return emit(out.str());
  }

  int dims() {
    const int modes = (opts_.arity || opts_.degree ? 1 : 0) + (opts_.sigma.empty() ? 0 : 1) +
                      (opts_.kernel_dim.empty() ? 0 : 1);
    if (modes != 1) throw UsageError("dims needs exactly one of --arity/--degree, --sigma, --kernel-dim");
    BigInt value;
    if (!opts_.sigma.empty()) {
      const long n = opts_.sigma[0], m = opts_.sigma[1], k = opts_.sigma[2];
      if (n < 0 || m < 0 || k < 1) throw UsageError("--sigma needs n >= 0, m >= 0, k >= 1");
      value = sigma_free(n, m, k);
    } else if (!opts_.kernel_dim.empty()) {
      const long s = opts_.kernel_dim[0], k = opts_.kernel_dim[1];
      if (s < 0 || k < 0) throw UsageError("--kernel-dim needs s >= 0, k >= 0");
      value = kernel_dim(s, k);
    } else {
      if (!opts_.arity || !opts_.degree) throw UsageError("dims needs both --arity and --degree");
      if (*opts_.arity < 1 || *opts_.degree < -1) throw UsageError("dims needs arity >= 1, degree >= -1");
      value = opts_.hom ? dim_hom(*opts_.degree, *opts_.arity) : dim_pi(*opts_.degree, *opts_.arity);
    }
    if (format_ == OutputFormat::Text) return emit(value.str());
    Document doc;
    doc["value"] = value.str();
    return emit(doc.dump());
  }

  int apply() {
    const Polynomial image = apply_operator(input(opts_.p), input(opts_.f));
    if (format_ == OutputFormat::Text) return emit(format(image, vars_));
    return emit(to_structured(image, vars_).dump());
  }

  int oracle() {
    const auto solution = oracle_solve(input(opts_.p), input(opts_.q), *opts_.ambient);
    if (format_ == OutputFormat::Text) {
      emit(solution ? format(*solution, vars_) : "no solution");
    } else {
      Document doc;
      doc["solution"] = solution ? to_structured(*solution, vars_) : Document(nullptr);
      emit(doc.dump());
    }
    return solution ? kExitOk : kExitFalse;
  }

  int selftest() {
    if (opts_.cases < 0) throw UsageError("--cases must be non-negative");
    const SelftestReport report = run_selftest(opts_.seed, opts_.cases);
    if (format_ == OutputFormat::Text) {
      std::cout << report.to_text() << std::flush;
    } else {
      Document doc;
      doc["seed"] = report.seed;
      doc["cases"] = report.cases;
      doc["properties"] = Document::array();
      for (const auto& prop : report.properties) {
        Document entry;
        entry["name"] = prop.name;
        entry["passed"] = prop.passed;
        entry["failed"] = prop.failed;
        doc["properties"].push_back(std::move(entry));
      }
      doc["failures"] = report.failures();
      emit(doc.dump());
    }
    return report.failures() == 0 ? kExitOk : kExitFalse;
  }

 private:
  Polynomial input(const std::string& arg) const { return parse(resolve_input(arg), vars_); }

  static int emit(const std::string& text) {
    std::cout << text << "\n" << std::flush;
    return kExitOk;
  }

  const Options& opts_;
  VariableSet vars_;
  OutputFormat format_;
};

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Polynomial solutions of constant-coefficient PDEs p(D) f = q"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--vars", opts.vars, "Comma-separated variable names")->capture_default_str();
  app.add_option("--format", opts.format, "text or structured (default: $POLDIF_FORMAT or text)");

  auto* solve = app.add_subcommand("solve", "Particular solution (and family with --family)");
  solve->add_option("-p", opts.p, "Operator polynomial")->required();
  solve->add_option("-q", opts.q, "Right-hand side")->required();
  solve->add_option("--ambient", opts.ambient, "Ambient degree k >= deg(q) + s");
  solve->add_flag("--family", opts.family, "Also print the kernel basis in Pi_k");

  auto* verify_sc = app.add_subcommand("verify", "Residual q - p(D) f");
  verify_sc->add_option("-p", opts.p)->required();
  verify_sc->add_option("-f", opts.f)->required();
  verify_sc->add_option("-q", opts.q)->required();

  auto* kernel = app.add_subcommand("kernel", "Basis of the solutions of p(D) f = 0 in Pi_k");
  kernel->add_option("-p", opts.p)->required();
  kernel->add_option("--ambient", opts.ambient)->required()->check(CLI::NonNegativeNumber);

  auto* dims = app.add_subcommand("dims", "Dimension formulas");
  dims->add_option("--arity", opts.arity);
  dims->add_option("--degree", opts.degree);
  dims->add_flag("--hom", opts.hom, "Homogeneous polynomials of exactly this degree");
  dims->add_option("--sigma", opts.sigma, "n m k: free unknowns of the layer system")->expected(3);
  dims->add_option("--kernel-dim", opts.kernel_dim, "s k: bivariate kernel dimension")->expected(2);

  auto* apply = app.add_subcommand("apply", "p(D) f");
  apply->add_option("-p", opts.p)->required();
  apply->add_option("-f", opts.f)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force dense solve in Pi_k");
  oracle->add_option("-p", opts.p)->required();
  oracle->add_option("-q", opts.q)->required();
  oracle->add_option("--ambient", opts.ambient)->required()->check(CLI::NonNegativeNumber);

  auto* selftest = app.add_subcommand("selftest", "Randomized property suite");
  selftest->add_option("--seed", opts.seed)->capture_default_str();
  selftest->add_option("--cases", opts.cases)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Runner runner(opts);
    if (*solve) return runner.solve();
    if (*verify_sc) return runner.verify_cmd();
    if (*kernel) return runner.kernel();
    if (*dims) return runner.dims();
    if (*apply) return runner.apply();
    if (*oracle) return runner.oracle();
    if (*selftest) return runner.selftest();
  } catch (const InternalDefect& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
