#pragma once

#include "nilrev/matrix.hpp"

namespace nilrev {

// exp X = sum_{k=0}^{n-1} X^k / k!. The series terminates because X^n = 0;
// coefficients are exact rationals. Maps u_n onto U_n and u_n^* onto U_n^*
// (the (i, i+1) entries of X and exp X coincide).
SignedUnipotent exp_nilpotent(const NilpotentUpper& x);

// Inverse of exp on the all-plus-diagonal unipotents:
// log u = -(Id-u) - (Id-u)^2/2 - ... - (Id-u)^{n-1}/(n-1).
// Throws NotUnipotentError if any diagonal entry differs from 1; a signed
// diagonal is a hard error, not a branch-cut choice.
NilpotentUpper log_unipotent(const SignedUnipotent& u);

}  // namespace nilrev
