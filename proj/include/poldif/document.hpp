#pragma once

// Structured (JSON) documents for polynomials and solver outcomes.
//
// Polynomial:
//   {"arity": k, "vars": [...], "terms": [{"exp": [e1..ek], "num": "..", "den": ".."}]}
// Outcome:
//   {"particular": <poly>, "kernel_basis": [<poly>...], "free_count": n,
//    "zero_order": s, "rhs_degree": m, "ambient_degree": k}
//
// Big integers travel as decimal strings. Terms are written in descending
// graded-lex order; on input, field order is irrelevant.

#include "poldif/expr.hpp"
#include "poldif/polynomial.hpp"
#include "poldif/solver.hpp"

#include <json.hpp>

#include <string>

namespace poldif {

using Document = nlohmann::ordered_json;

Document to_structured(const Polynomial& f, const VariableSet& vars);
Document to_structured(const SolveOutcome& outcome, const VariableSet& vars);

/// Throws SchemaError on any malformed field.
Polynomial polynomial_from_structured(const Document& doc);
SolveOutcome outcome_from_structured(const Document& doc);

/// Parses JSON text; throws SchemaError on invalid JSON.
Document parse_document(const std::string& text);

}  // namespace poldif
