#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilrev/matrix.hpp"
#include "nilrev/tags.hpp"

namespace nilrev {

enum class ProducedBy { Induction, Parity, Oracle, ClosedForm };
const char* produced_by_name(ProducedBy p);
ProducedBy produced_by_from_name(const std::string& name);

// Self-contained, re-checkable record of one reversal identity.
struct ReversalCertificate {
    Ring ring;
    int n;
    GroupTag group_tag;
    CertLevel level;
    Matrix input;  // X (algebra level) or u (group level)
    SignedUnipotent g;
    bool involution;
    ProducedBy produced_by;
};

// One step of the dimension induction: the leading k x k block's reverser,
// the appended diagonal sign and the solved column.
struct InductionLevel {
    int k;
    Matrix g_k;  // k x k
    int eps;     // +1 / -1, the (k, k) diagonal entry
    Matrix a;    // (k-1) x 1, first entry fixed to 0
    Matrix b;    // (k-1) x 1, right-hand side; last entry vanishes
};

struct InductionTrace {
    std::vector<InductionLevel> levels;
};

// Builds g in U_n^{+-1} with g X g^{-1} = -X for X with nonzero
// superdiagonal, by induction on n. The appended signs alternate
// (1, -1, 1, ...). Throws NotStarError off u_n^*.
ReversalCertificate reverse_star(const NilpotentUpper& X);
ReversalCertificate reverse_star_traced(const NilpotentUpper& X, InductionTrace* trace);

// Constraint cycle of odd length proving no sign diagonal works.
struct OddCycle {
    std::vector<std::pair<int, int>> edges;  // 1-based (i, j), X_ij != 0
};

// diag(eps) X diag(eps)^{-1} = -X demands eps_i eps_j = -1 on every
// nonzero entry: a graph 2-coloring problem. Total: every X either gets a
// diagonal involution certificate or an explicit odd cycle.
std::variant<ReversalCertificate, OddCycle> diagonal_parity_reverser(const NilpotentUpper& X);

// Transport along exp: h = reverse_star(log u) satisfies h u h^{-1} = u^{-1}.
// Throws NotUnipotentError on signed diagonals, NotStarError off U_n^*.
ReversalCertificate reverse_group_star(const SignedUnipotent& u);

// Fixture family: n = 2 gives diag(1, -1); n = 3 with X = [[0,a,b],[0,0,c]],
// a != 0, gives the involution [[1,p,-pr/2],[0,-1,r],[0,0,1]] where p = 1
// and r solves pc + ar + 2b = 0 (left division by a; the factor order
// matters over Quat). Throws NotApplicableError elsewhere.
ReversalCertificate closed_form_reverser(const NilpotentUpper& X);

// Recomputes the certificate's defining identity from scratch; true iff it
// holds exactly and the involution flag is correct. Shape violations
// (group tag vs diagonal, level vs input form) raise
// MalformedCertificateError.
bool check_certificate(const ReversalCertificate& c);

}  // namespace nilrev
