#include "poldif/document.hpp"

#include "poldif/errors.hpp"

#include <algorithm>
#include <set>

namespace poldif {

namespace {

const Document& field(const Document& doc, const char* name) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

long integer_field(const Document& doc, const char* name, long min_value) {
  const Document& v = field(doc, name);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + name + "\" must be an integer");
  const long value = v.get<long>();
  if (value < min_value) {
    throw SchemaError(std::string("field \"") + name + "\" must be >= " + std::to_string(min_value));
  }
  return value;
}

BigInt decimal(const Document& v, const char* name) {
  if (!v.is_string()) throw SchemaError(std::string("field \"") + name + "\" must be a decimal string");
  const std::string s = v.get<std::string>();
  const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw SchemaError(std::string("field \"") + name + "\" is not a decimal integer: " + s);
  }
  return BigInt(s);
}

}  // namespace

Document to_structured(const Polynomial& f, const VariableSet& vars) {
  if (f.arity() != vars.arity()) {
    throw ArityMismatch("polynomial arity " + std::to_string(f.arity()) + " does not match " +
                        std::to_string(vars.arity()) + " variables");
  }
  Document doc;
  doc["arity"] = f.arity();
  doc["vars"] = vars.names();
  doc["terms"] = Document::array();
  for (const auto& [alpha, c] : f.terms()) {
    Document term;
    term["exp"] = alpha.exponents();
    term["num"] = numerator_of(c).str();
    term["den"] = denominator_of(c).str();
    doc["terms"].push_back(std::move(term));
  }
  return doc;
}

Document to_structured(const SolveOutcome& outcome, const VariableSet& vars) {
  Document doc;
  doc["particular"] = to_structured(outcome.particular, vars);
  doc["kernel_basis"] = Document::array();
  for (const auto& g : outcome.kernel_basis) doc["kernel_basis"].push_back(to_structured(g, vars));
  doc["free_count"] = outcome.free_count;
  doc["zero_order"] = outcome.zero_order;
  doc["rhs_degree"] = outcome.rhs_degree;
  doc["ambient_degree"] = outcome.ambient_degree;
  return doc;
}

Polynomial polynomial_from_structured(const Document& doc) {
  const auto arity = static_cast<std::size_t>(integer_field(doc, "arity", 1));
  if (auto it = doc.find("vars"); it != doc.end()) {
    if (!it->is_array() || it->size() != arity) throw SchemaError("\"vars\" must list arity names");
    std::vector<std::string> names;
    for (const auto& n : *it) {
      if (!n.is_string()) throw SchemaError("\"vars\" entries must be strings");
      names.push_back(n.get<std::string>());
    }
    try {
      VariableSet checked(std::move(names));
    } catch (const Error& e) {
      throw SchemaError(std::string("invalid \"vars\": ") + e.what());
    }
  }

  const Document& terms = field(doc, "terms");
  if (!terms.is_array()) throw SchemaError("\"terms\" must be an array");
  Polynomial f(arity);
  std::set<MultiIndex> seen;
  for (const auto& term : terms) {
    const Document& exp = field(term, "exp");
    if (!exp.is_array() || exp.size() != arity) {
      throw SchemaError("term exponent must be an array of length " + std::to_string(arity));
    }
    std::vector<unsigned> exps;
    for (const auto& e : exp) {
      if (!e.is_number_integer() || e.get<long>() < 0) {
        throw SchemaError("exponents must be non-negative integers");
      }
      exps.push_back(e.get<unsigned>());
    }
    MultiIndex alpha(std::move(exps));
    if (!seen.insert(alpha).second) throw SchemaError("duplicate term exponent");
    const BigInt num = decimal(field(term, "num"), "num");
    const BigInt den = decimal(field(term, "den"), "den");
    if (den <= 0) throw SchemaError("denominator must be positive");
    f.add_term(alpha, Rational(num, den));
  }
  return f;
}

SolveOutcome outcome_from_structured(const Document& doc) {
  SolveOutcome out;
  out.particular = polynomial_from_structured(field(doc, "particular"));
  const Document& basis = field(doc, "kernel_basis");
  if (!basis.is_array()) throw SchemaError("\"kernel_basis\" must be an array");
  for (const auto& g : basis) {
    out.kernel_basis.push_back(polynomial_from_structured(g));
    if (out.kernel_basis.back().arity() != out.particular.arity()) {
      throw SchemaError("kernel basis arity differs from particular solution");
    }
  }
  out.free_count = integer_field(doc, "free_count", 0);
  out.zero_order = integer_field(doc, "zero_order", 0);
  out.rhs_degree = integer_field(doc, "rhs_degree", -1);
  out.ambient_degree = integer_field(doc, "ambient_degree", -1);
  return out;
}

Document parse_document(const std::string& text) {
  try {
    return Document::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace poldif
