#include <utility>

#include "nilrev/errors.hpp"
#include "nilrev/jordan.hpp"
#include "nilrev/oracle.hpp"

namespace nilrev {

namespace {

const char* kStatement =
    "X is conjugate to its Jordan form J, so any unipotent reverser of X "
    "would yield a unipotent reverser g of J. In the interleaved chain "
    "basis such a g is block upper triangular and the diagonal block paired "
    "with the first equals its negative. Diagonal blocks of a unipotent "
    "block-triangular matrix are Id + nilpotent; a block and its negative "
    "cannot both have that form, since (Id + N1) = -(Id + N2) forces "
    "N1 + N2 = -2 Id, while a sum of an invertible and a nilpotent term "
    "cannot vanish. Hence no unipotent reverser exists. The signed-diagonal "
    "reverser recorded here shows the obstruction is the diagonal, not the "
    "reversal itself.";

}  // namespace

NoUnipotentReverserRecord no_unipotent_reverser_certificate(const NilpotentUpper& X,
                                                            const NoUnipotentOptions& opts) {
    if (X.matrix().is_zero())
        throw ZeroInputError("X = 0 is reversed by the identity; the refutation covers X != 0");
    JordanData data = jordan_structure(X);
    SignedUnipotent reverser = alternating_chain_reverser(X.ring(), data.partition);
    PairedBlockWitness witness = paired_block_witness(data.J, reverser.matrix());

    bool checked = false;
    if (opts.oracle_check && X.n() <= opts.oracle_dim_limit) {
        OracleOptions oracle_opts;
        oracle_opts.dim_limit = opts.oracle_dim_limit;
        const FeasibilityResult r = reverser_feasible(X, GroupTag::Unipotent, oracle_opts);
        if (r.status != Feasibility::Infeasible)
            throw WitnessViolationError(
                "oracle found a unipotent reverser, contradicting the paired-block witness");
        checked = true;
    }
    return {std::move(data), std::move(reverser), std::move(witness), kStatement, checked};
}

}  // namespace nilrev
