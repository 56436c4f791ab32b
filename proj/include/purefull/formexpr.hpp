#pragma once

#include <optional>

#include "purefull/form.hpp"

namespace purefull {

// Text grammar for forms, used by the CLI and the catalog JSON schema:
//   expr   := term (('+'|'-') term)*
//   term   := (factor '*')* atom | factor ('*' factor)*
//   factor := RATIONAL | 'i' | 't' | 'tbar'
//   atom   := 'e' DIGITS            (compact, indices 1..9)
//           | 'e{' INT (',' INT)* '}'
//           | 'phi' INT | 'phibar' INT   (requires a coframe context)
// Examples: "e14+e25+e36", "e{1,10}", "phi1 + t*phibar1", "1/2i*e12".
struct FormExprContext {
    int dim = 0;
    std::vector<Form> coframe10; // for phi/phibar atoms; may be empty
    int series_order = 2;        // truncation for t/tbar factors
};

Form parse_form_expr(const std::string& text, const FormExprContext& ctx);

} // namespace purefull
