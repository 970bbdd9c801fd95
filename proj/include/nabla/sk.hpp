#pragma once

#include "nabla/term.hpp"

namespace nabla {

// Bracket abstraction into the S/K basis.  The result is lambda-free, has
// the same type, and denotes the same function in every model.
TermPtr compile_sk(const TermPtr& t);

bool is_lambda_free(const TermPtr& t);

}  // namespace nabla
