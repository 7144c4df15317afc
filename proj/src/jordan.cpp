#include "nilrev/jordan.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "nilrev/errors.hpp"

namespace nilrev {

namespace {

Matrix columns_matrix(Ring ring, int n, const std::vector<Matrix>& cols) {
    Matrix m(ring, n, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i < n; ++i) m(i, j) = cols[static_cast<std::size_t>(j)](i, 0);
    return m;
}

// Membership of v in the right K-span of cols, as one realified solve.
bool in_span(Ring ring, int n, const std::vector<Matrix>& cols, const Matrix& v) {
    if (cols.empty()) return v.is_zero();
    return columns_matrix(ring, n, cols).realify().solve(Matrix::coords(v)).has_value();
}

std::vector<Matrix> kernel_columns(const Matrix& m) {
    std::vector<Matrix> out;
    for (const RatMatrix& k : m.realify().kernel_basis())
        out.push_back(Matrix::from_coords(k, m.ring()));
    return out;
}

// 1-based index when v is exactly a standard basis column, else 0.
int standard_index_of(const Matrix& v) {
    int idx = 0;
    for (int i = 0; i < v.rows(); ++i) {
        if (v(i, 0).is_zero()) continue;
        if (idx != 0 || !v(i, 0).is_one()) return 0;
        idx = i + 1;
    }
    return idx;
}

std::string power_label(int l, const std::string& base) {
    if (l == 0) return base;
    if (l == 1) return "X " + base;
    return "X^" + std::to_string(l) + " " + base;
}

// Reads the partition off a matrix required to be exactly in Jordan form.
Partition partition_of_jordan(const Matrix& J) {
    const int n = J.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool super = (j == i + 1);
            if (!J(i, j).is_zero() && !(super && J(i, j).is_one()))
                throw NotApplicableError("matrix is not in Jordan form");
        }
    std::vector<int> sizes;
    int run = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (J(i, i + 1).is_one()) {
            ++run;
        } else {
            sizes.push_back(run);
            run = 1;
        }
    }
    sizes.push_back(run);
    Partition part;
    for (int s : sizes) {
        if (!part.parts.empty() && part.parts.back().first < s)
            throw NotApplicableError("Jordan blocks not in weakly decreasing order");
        if (!part.parts.empty() && part.parts.back().first == s)
            ++part.parts.back().second;
        else
            part.parts.emplace_back(s, 1);
    }
    return part;
}

}  // namespace

int Partition::n() const {
    int total = 0;
    for (const auto& [size, mult] : parts) total += size * mult;
    return total;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> out;
    for (const auto& [size, mult] : parts)
        for (int i = 0; i < mult; ++i) out.push_back(size);
    return out;
}

std::string Partition::bracket() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(parts[i].first) + "^" + std::to_string(parts[i].second);
    }
    return out + "]";
}

Matrix jordan_matrix(Ring ring, const Partition& p) {
    const int n = p.n();
    Matrix m(ring, n, n);
    int c = 0;
    for (int size : p.block_sizes()) {
        for (int i = 1; i < size; ++i) m(c + i - 1, c + i) = Scalar::one(ring);
        c += size;
    }
    return m;
}

JordanData jordan_structure(const NilpotentUpper& X) {
    const Ring ring = X.ring();
    const int n = X.n();
    const Matrix& M = X.matrix();
    const int d = ring_dim(ring);

    std::vector<Matrix> power;  // power[k] = X^k up to the first zero power
    power.push_back(Matrix::identity(ring, n));
    while (!power.back().is_zero()) power.push_back(power.back() * M);
    const int p = static_cast<int>(power.size()) - 1;  // X^p = 0, X^{p-1} != 0

    std::vector<int> rank(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k)
        rank[static_cast<std::size_t>(k)] = power[static_cast<std::size_t>(k)].realify().rank() / d;

    // ge[k] = number of chains of length >= k
    std::vector<int> ge(static_cast<std::size_t>(p) + 2, 0);
    for (int k = 1; k <= p; ++k)
        ge[static_cast<std::size_t>(k)] =
            rank[static_cast<std::size_t>(k - 1)] - rank[static_cast<std::size_t>(k)];

    Partition part;
    for (int k = p; k >= 1; --k) {
        const int mult = ge[static_cast<std::size_t>(k)] - ge[static_cast<std::size_t>(k + 1)];
        if (mult > 0) part.parts.emplace_back(k, mult);
    }

    std::vector<std::vector<Matrix>> ker(static_cast<std::size_t>(p) + 1);
    for (int k = 1; k <= p; ++k)
        ker[static_cast<std::size_t>(k)] = kernel_columns(power[static_cast<std::size_t>(k)]);

    // Staircase: walk levels downward, adopting kernel vectors that are new
    // modulo the smaller kernel and the shadows of longer chains.
    std::vector<JordanChain> chains;
    for (int k = p; k >= 1; --k) {
        std::vector<Matrix> modulus = ker[static_cast<std::size_t>(k - 1)];
        for (const JordanChain& c : chains)
            modulus.push_back(power[static_cast<std::size_t>(c.length - k)] * c.top);
        int need = ge[static_cast<std::size_t>(k)] - static_cast<int>(chains.size());
        for (const Matrix& cand : ker[static_cast<std::size_t>(k)]) {
            if (need == 0) break;
            if (in_span(ring, n, modulus, cand)) continue;
            chains.push_back({cand, k, standard_index_of(cand)});
            modulus.push_back(cand);
            --need;
        }
        if (need != 0) throw Error("internal: chain selection ran out of candidates");
    }

    std::vector<Matrix> chain_major;
    for (const JordanChain& c : chains)
        for (int l = c.length - 1; l >= 0; --l)
            chain_major.push_back(power[static_cast<std::size_t>(l)] * c.top);
    Matrix beta_inv = columns_matrix(ring, n, chain_major);
    auto inv = beta_inv.realify().inverse();
    if (!inv) throw Error("internal: chain vectors do not form a basis");
    Matrix beta = Matrix::derealify(*inv, ring);
    Matrix J = beta * M * beta_inv;
    if (J != jordan_matrix(ring, part))
        throw Error("internal: conjugation missed the Jordan form");

    const int d1 = part.parts.front().first;
    std::vector<Matrix> basis;
    std::vector<std::string> labels;
    for (int j = 1; j <= d1; ++j) {
        int pos = 0;
        for (const JordanChain& c : chains) {
            ++pos;
            if (c.length < j) continue;
            basis.push_back(power[static_cast<std::size_t>(c.length - j)] * c.top);
            const std::string name = c.standard_index > 0
                                         ? "e" + std::to_string(c.standard_index)
                                         : "v" + std::to_string(pos);
            labels.push_back(power_label(c.length - j, name));
        }
    }

    return {ring, n, part, chains, basis, labels, beta, beta_inv, NilpotentUpper(J)};
}

PairedBlockWitness paired_block_witness(const NilpotentUpper& Jn, const Matrix& g) {
    const Matrix& J = Jn.matrix();
    const Ring ring = Jn.ring();
    const int n = Jn.n();
    if (g.ring() != ring) throw RingMismatchError("conjugator ring differs from J");
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatchError("conjugator shape differs from J");
    const Partition part = partition_of_jordan(J);
    if (J.is_zero())
        throw NotApplicableError("J = 0 is fixed by every conjugation; no paired block exists");
    if (g * J != -(J * g)) throw NotAReverserError("g J != -J g");
    if (!g.realify().inverse()) throw NotAReverserError("g is not invertible");

    const std::vector<int> sizes = part.block_sizes();
    std::vector<int> start(sizes.size(), 0);
    for (std::size_t b = 1; b < sizes.size(); ++b)
        start[b] = start[b - 1] + sizes[b - 1];

    // Basis order: layer j picks coordinate j of every block tall enough.
    // Blocks are grouped by part size, so each (layer, size) run is one
    // segment of the block layout.
    const int d1 = part.parts.front().first;
    std::vector<int> perm;
    std::vector<int> layout;
    for (int j = 1; j <= d1; ++j) {
        for (const auto& [size, mult] : part.parts)
            if (size >= j) layout.push_back(mult);
        for (std::size_t b = 0; b < sizes.size(); ++b)
            if (sizes[b] >= j) perm.push_back(start[b] + j - 1);
    }

    Matrix in_basis(ring, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            in_basis(a, b) = g(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);

    std::vector<int> seg(layout.size() + 1, 0);
    for (std::size_t q = 0; q < layout.size(); ++q) seg[q + 1] = seg[q] + layout[q];

    for (std::size_t qr = 0; qr < layout.size(); ++qr)
        for (std::size_t qc = 0; qc < qr; ++qc)
            for (int a = seg[qr]; a < seg[qr + 1]; ++a)
                for (int b = seg[qc]; b < seg[qc + 1]; ++b)
                    if (!in_basis(a, b).is_zero())
                        throw WitnessViolationError(
                            "conjugator is not block upper triangular in the interleaved basis");

    auto diag_block = [&](int q) {
        Matrix blk(ring, layout[static_cast<std::size_t>(q)], layout[static_cast<std::size_t>(q)]);
        for (int a = 0; a < blk.rows(); ++a)
            for (int b = 0; b < blk.cols(); ++b) blk(a, b) = in_basis(seg[static_cast<std::size_t>(q)] + a, seg[static_cast<std::size_t>(q)] + b);
        return blk;
    };
    const int s = part.distinct();
    Matrix first = diag_block(0);
    Matrix paired = diag_block(s);
    if (paired != -first)
        throw WitnessViolationError("paired diagonal block is not the negative of the first");
    return {in_basis, layout, first, paired, s};
}

SignedUnipotent alternating_chain_reverser(Ring ring, const Partition& p) {
    const int n = p.n();
    Matrix m = Matrix::identity(ring, n);
    int c = 0;
    for (int size : p.block_sizes()) {
        for (int i = 1; i <= size; ++i)
            m(c + i - 1, c + i - 1) = Scalar::integer(ring, (size - i) % 2 == 0 ? 1 : -1);
        c += size;
    }
    return SignedUnipotent(m);
}

}  // namespace nilrev
