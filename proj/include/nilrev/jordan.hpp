#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilrev/matrix.hpp"

namespace nilrev {

// Jordan type of a nilpotent matrix: part sizes d_1 > ... > d_s with
// multiplicities t_r and sum t_r * d_r = n.
struct Partition {
    std::vector<std::pair<int, int>> parts;  // (size, multiplicity)

    int n() const;
    int distinct() const { return static_cast<int>(parts.size()); }
    // Sizes repeated by multiplicity, weakly decreasing: [3, 2, 2, 1].
    std::vector<int> block_sizes() const;
    // Bracket notation "[3^1, 2^2, 1^1]".
    std::string bracket() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
};

// One chain: top generator v with X^{length} v = 0 and X^{length-1} v != 0.
struct JordanChain {
    Matrix top;  // n x 1 column
    int length;
    // 1-based index i when the top is exactly the standard vector e_i,
    // 0 otherwise. Drives the printed basis labels.
    int standard_index;
};

struct JordanData {
    Ring ring;
    int n;
    Partition partition;
    std::vector<JordanChain> chains;        // weakly decreasing length
    std::vector<Matrix> ordered_basis;      // layer-interleaved basis columns
    std::vector<std::string> basis_labels;  // "X^2 e3", "X e5", "e6", ...
    Matrix beta;                            // beta X beta^{-1} = J
    Matrix beta_inv;                        // columns: X^{d-1}v, ..., Xv, v per chain
    NilpotentUpper J;                       // Jordan form of X
};

// Chain decomposition with deterministic top selection: kernels of the
// powers of X are computed over the realified rationals, and candidate
// tops are taken in kernel-basis order (increasing free column), skipping
// anything already reachable over K from longer chains.
JordanData jordan_structure(const NilpotentUpper& X);

// Jordan matrix of a partition: superdiagonal 1-blocks, sizes weakly
// decreasing.
Matrix jordan_matrix(Ring ring, const Partition& p);

// A conjugator g with g J g^{-1} = -J, rewritten in the layer-interleaved
// basis, is block upper triangular, and the diagonal block paired with the
// first equals its negative. A unipotent g cannot satisfy that.
struct PairedBlockWitness {
    Matrix conjugator_in_basis;     // [g]_B
    std::vector<int> block_layout;  // segment sizes, layer by layer
    Matrix first_block;             // leading t_1 x t_1 diagonal block
    Matrix paired_block;            // diagonal block s+1, equals -first_block
    int s;                          // number of distinct part sizes
};

// J must already be in Jordan form; callers conjugate by beta first.
// Throws NotAReverserError unless g J = -J g with g invertible,
// NotApplicableError for J = 0 (no paired block exists), and
// WitnessViolationError if the block structure fails, which no valid
// input can trigger.
PairedBlockWitness paired_block_witness(const NilpotentUpper& J, const Matrix& g);

// diag(..., (-1)^{d-m}, ...) along each size-d block: a reverser of
// jordan_matrix(p) inside U_n^{+-1}.
SignedUnipotent alternating_chain_reverser(Ring ring, const Partition& p);

// Structured refutation of unipotent reversers for X != 0: the Jordan data,
// a signed-diagonal reverser of J witnessing that reversal is possible at
// all, the paired-block witness for it, and a prose statement of the
// contradiction argument.
struct NoUnipotentReverserRecord {
    JordanData data;
    SignedUnipotent canonical_reverser;
    PairedBlockWitness witness;
    std::string statement;
    bool oracle_checked;  // independent infeasibility run performed
};

struct NoUnipotentOptions {
    bool oracle_check = true;  // cross-check with the brute-force oracle
    int oracle_dim_limit = 8;  // skip the cross-check above this n
};

// Throws ZeroInputError when X = 0 (the zero element is reversed by Id).
// Defined in certify.cpp; the oracle cross-check lives there so this
// header stays free of the oracle types.
NoUnipotentReverserRecord no_unipotent_reverser_certificate(
    const NilpotentUpper& X, const NoUnipotentOptions& opts = {});

}  // namespace nilrev
