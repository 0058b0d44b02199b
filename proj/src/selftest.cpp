#include "poldif/selftest.hpp"

#include "poldif/document.hpp"
#include "poldif/errors.hpp"
#include "poldif/expr.hpp"
#include "poldif/random_instances.hpp"
#include "poldif/solver.hpp"

#include <functional>
#include <sstream>

namespace poldif {

namespace {

constexpr std::size_t kKeptFailures = 3;

// Runs `check` and records pass/fail; exceptions count as failures.
void record(PropertyTally& tally, long case_index, const std::function<bool()>& check) {
  std::string detail;
  bool ok = false;
  try {
    ok = check();
    if (!ok) detail = "property violated";
  } catch (const std::exception& e) {
    detail = e.what();
  }
  if (ok) {
    ++tally.passed;
    return;
  }
  ++tally.failed;
  if (tally.first_failures.size() < kKeptFailures) {
    tally.first_failures.push_back("case " + std::to_string(case_index) + ": " + detail);
  }
}

}  // namespace

long SelftestReport::failures() const {
  long total = 0;
  for (const auto& p : properties) total += p.failed;
  return total;
}

std::string SelftestReport::to_text() const {
  std::ostringstream out;
  out << "selftest seed=" << seed << " cases=" << cases << "\n";
  for (const auto& p : properties) {
    out << "  " << p.name << ": " << p.passed << "/" << (p.passed + p.failed) << " passed\n";
    for (const auto& f : p.first_failures) out << "    " << f << "\n";
  }
  out << "failures: " << failures() << "\n";
  return out.str();
}

SelftestReport run_selftest(std::uint64_t seed, long cases) {
  SelftestReport report;
  report.seed = seed;
  report.cases = cases;
  for (const char* name : {"residual_and_degree_bound", "oracle_equivalence", "unit_uniqueness",
                           "layer_free_count", "bivariate_kernel_dim", "text_round_trip",
                           "structured_round_trip"}) {
    report.properties.push_back(PropertyTally{name, 0, 0, {}});
  }
  auto& props = report.properties;
  PropertyTally& residual = props[0];
  PropertyTally& oracle = props[1];
  PropertyTally& unique = props[2];
  PropertyTally& layer_count = props[3];
  PropertyTally& kernel = props[4];
  PropertyTally& text_rt = props[5];
  PropertyTally& doc_rt = props[6];

  Rng rng(seed);
  for (long c = 0; c < cases; ++c) {
    const PdeInstance inst = random_pde_instance(rng);
    const long bound = degree(inst.q) + zero_order(inst.p);

    Polynomial particular(inst.p.arity());
    record(residual, c, [&] {
      particular = solve_pde(inst.p, inst.q).particular;
      return verify(inst.p, particular, inst.q).is_zero() && degree(particular) <= bound;
    });
    record(oracle, c, [&] {
      const auto brute = oracle_solve(inst.p, inst.q, bound);
      return brute && apply_operator(inst.p, particular - *brute).is_zero();
    });

    const auto arity = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    Polynomial unit_p = random_operator(rng, arity, 0, 3);
    RandomPolynomialOptions q_opts;
    q_opts.max_degree = uniform_int(rng, 0, 3);
    const Polynomial unit_q = random_polynomial(rng, arity, q_opts);
    record(unique, c, [&] {
      const Polynomial f = solve_unit(unit_p, unit_q);
      const auto brute = oracle_solve(unit_p, unit_q, std::max(0L, degree(unit_q)));
      return brute && f == solve_pde(unit_p, unit_q).particular && f == *brute;
    });

    const auto hom_arity = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const long n = uniform_int(rng, 0, 4);
    const long m = uniform_int(rng, 0, 3);
    const Polynomial hom = random_homogeneous(rng, hom_arity, n);
    record(layer_count, c, [&] {
      const LayerSystem sys = build_layer_system(hom, Polynomial(hom_arity), m);
      const Elimination e = eliminate(sys.matrix);
      return BigInt(e.rank) == dim_hom(m, static_cast<long>(hom_arity)) &&
             BigInt(e.free_columns.size()) == sigma_free(n, m, static_cast<long>(hom_arity));
    });

    const long s = uniform_int(rng, 0, 3);
    const long k = uniform_int(rng, 0, 4);
    const Polynomial biv = random_operator(rng, 2, s, s + 2);
    record(kernel, c, [&] {
      return BigInt(kernel_basis(biv, k).size()) == kernel_dim(s, k);
    });

    const VariableSet vars = VariableSet::indexed(inst.p.arity());
    record(text_rt, c, [&] {
      return parse(format(inst.p, vars), vars) == inst.p && parse(format(inst.q, vars), vars) == inst.q;
    });
    record(doc_rt, c, [&] {
      const Document doc = to_structured(particular, vars);
      return polynomial_from_structured(parse_document(doc.dump())) == particular;
    });
  }
  return report;
}

}  // namespace poldif
