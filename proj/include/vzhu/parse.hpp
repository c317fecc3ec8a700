#ifndef VZHU_PARSE_HPP
#define VZHU_PARSE_HPP

#include <string_view>

#include "vzhu/algebra.hpp"

namespace vzhu {

// vector   := '0' | term (('+'|'-') term)*
// term     := ['+'|'-'] [rational '*'] monomial
// monomial := (gen '(' '-'? int ')' ('^' int)?)* '|0>'
// gen      := 'a' | 'L' | 'psi'   (must match the algebra)
// rational := int ['/' int]
//
// Modes are applied to the vacuum right to left, so the result is normal
// ordered (with fermionic signs and Virasoro reordering terms).
Vec parse_vector(std::string_view text, const Algebra& alg);

}  // namespace vzhu

#endif  // VZHU_PARSE_HPP
