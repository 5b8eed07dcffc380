#pragma once

#include <string>

#include "sftcross/crossed.hpp"
#include "sftcross/system_file.hpp"

namespace sftcross {

// expr   := term (('+'|'-') term)*
// term   := '-'? factor ('*' factor)*
// factor := atom ('^' nat)? ("'")?
// atom   := ident | 'S' | scalar | '(' expr ')'
//
// Scalars: integers, p/q, sqrt(n), i. Identifiers: S (the isometry, reserved),
// named functions from the system file, then the builtins Lam and ind (the
// preimage-count function), u<k> (quasi-basis), e_<word> (cylinder indicator
// by symbol indices, '_'-separated when an index exceeds 9). Postfix ' is the
// adjoint and binds after '^', so S^2' is the adjoint of S^2.
CrossedElement parse_expression(const std::string& text, const SystemFile& sys);

}  // namespace sftcross
