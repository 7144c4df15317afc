#include "nilrev/oracle.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "nilrev/errors.hpp"
#include "nilrev/random_gen.hpp"
#include "nilrev/text_format.hpp"

namespace nilrev {

namespace {

const char* kTagNames[] = {"unipotent", "signed_unipotent"};
const char* kLevelNames[] = {"algebra", "group"};

// Slot numbering of the strictly-upper unknowns g_{ik}, row-major.
struct Slots {
    int n;
    std::vector<std::vector<int>> at;
    explicit Slots(int n_) : n(n_), at(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1)) {
        int next = 0;
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) at[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = next++;
    }
    int count() const { return n * (n - 1) / 2; }
};

void add_block(RatMatrix& a, int row, int col, const RatMatrix& blk, bool negate) {
    for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) {
            if (negate)
                a(row + i, col + j) = a(row + i, col + j) - blk(i, j);
            else
                a(row + i, col + j) = a(row + i, col + j) + blk(i, j);
        }
}

void set_rhs(RatMatrix& rhs, int row, const Scalar& value) {
    const RatMatrix c = Matrix::coords([&] {
        Matrix m(value.ring(), 1, 1);
        m(0, 0) = value;
        return m;
    }());
    for (int i = 0; i < c.rows(); ++i) rhs(row + i, 0) = c(i, 0);
}

// Reassembles g = diag(eps) + N from the solved realified coordinates.
SignedUnipotent assemble(Ring ring, int n, const std::vector<int>& eps, const Slots& slots,
                         const RatMatrix& sol) {
    const int d = ring_dim(ring);
    Matrix g(ring, n, n);
    for (int i = 0; i < n; ++i) g(i, i) = Scalar::integer(ring, eps[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            const int slot = slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            RatMatrix column(d, 1);
            for (int c = 0; c < d; ++c) column(c, 0) = sol(slot * d + c, 0);
            Matrix entry = Matrix::from_coords(column, ring);
            g(i, k) = entry(0, 0);
        }
    return SignedUnipotent(g);
}

// Runs one tagged feasibility question over a system builder that only
// depends on the sign pattern through the right-hand side.
template <typename RhsFn, typename VerifyFn>
FeasibilityResult enumerate_patterns(Ring ring, int n, GroupTag tag, const OracleOptions& opts,
                                     CertLevel level, const RatMatrix& coeff, const Slots& slots,
                                     RhsFn make_rhs, VerifyFn verify) {
    if (n > opts.dim_limit)
        throw DimensionTooLargeError("n = " + std::to_string(n) + " exceeds the oracle bound " +
                                     std::to_string(opts.dim_limit));
    long total = 1;
    int free_bits = 0;
    if (tag == GroupTag::SignedUnipotent) {
        free_bits = opts.normalize_first_sign ? n - 1 : n;
        total = 1L << free_bits;
    }
    FeasibilityResult result{Feasibility::Infeasible, std::nullopt, 0, level};
    for (long t = 0; t < total; ++t) {
        const long gray = t ^ (t >> 1);
        std::vector<int> eps(static_cast<std::size_t>(n), 1);
        for (int b = 0; b < free_bits; ++b)
            if ((gray >> b) & 1)
                eps[static_cast<std::size_t>(opts.normalize_first_sign ? b + 1 : b)] = -1;
        ++result.patterns_tried;
        const RatMatrix rhs = make_rhs(eps);
        if (auto sol = coeff.solve(rhs)) {
            SignedUnipotent g = assemble(ring, n, eps, slots, *sol);
            if (!verify(g)) throw Error("internal: oracle solution failed re-verification");
            result.status = Feasibility::Feasible;
            result.g = g;
            return result;
        }
    }
    return result;
}

}  // namespace

const char* group_tag_name(GroupTag t) { return kTagNames[static_cast<int>(t)]; }

GroupTag group_tag_from_name(const std::string& name) {
    if (name == kTagNames[0]) return GroupTag::Unipotent;
    if (name == kTagNames[1]) return GroupTag::SignedUnipotent;
    throw Error("unknown group tag: " + name);
}

const char* level_name(CertLevel l) { return kLevelNames[static_cast<int>(l)]; }

CertLevel level_from_name(const std::string& name) {
    if (name == kLevelNames[0]) return CertLevel::Algebra;
    if (name == kLevelNames[1]) return CertLevel::Group;
    throw Error("unknown certificate level: " + name);
}

FeasibilityResult reverser_feasible(const NilpotentUpper& X, GroupTag tag,
                                    const OracleOptions& opts) {
    const Ring ring = X.ring();
    const int n = X.n();
    const int d = ring_dim(ring);
    const Matrix& x = X.matrix();
    const Slots slots(n);
    const int rows = slots.count() * d;

    // (N X + X N)_{ij} = -(eps_i + eps_j) X_{ij} on the strictly-upper
    // entries; N multiplies X from the left in the first term, so X acts
    // by right multiplication on those unknowns.
    RatMatrix coeff(rows, slots.count() * d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int row = slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * d;
            for (int k = i + 1; k < j; ++k) {
                if (!x(k, j).is_zero())
                    add_block(coeff, row, slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * d,
                              right_mul_matrix(x(k, j)), false);
                if (!x(i, k).is_zero())
                    add_block(coeff, row, slots.at[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * d,
                              left_mul_matrix(x(i, k)), false);
            }
        }

    auto make_rhs = [&](const std::vector<int>& eps) {
        RatMatrix rhs(rows, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int row = slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * d;
                const int sum = eps[static_cast<std::size_t>(i)] + eps[static_cast<std::size_t>(j)];
                set_rhs(rhs, row, Scalar::integer(ring, -sum) * x(i, j));
            }
        return rhs;
    };
    auto verify = [&](const SignedUnipotent& g) { return conjugate(g, x) == -x; };
    return enumerate_patterns(ring, n, tag, opts, CertLevel::Algebra, coeff, slots, make_rhs,
                              verify);
}

FeasibilityResult group_reverser_feasible(const SignedUnipotent& u, GroupTag tag,
                                          const OracleOptions& opts) {
    const Ring ring = u.ring();
    const int n = u.n();
    const int d = ring_dim(ring);
    const Matrix& um = u.matrix();
    const Matrix ui = invert(u).matrix();
    const Slots slots(n);
    const int rows = slots.count() * d;

    // (N u - u^{-1} N)_{ij} = (u^{-1})_{ij} eps_j - eps_i u_{ij} for i < j;
    // the diagonal of g u = u^{-1} g holds identically for sign diagonals.
    RatMatrix coeff(rows, slots.count() * d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int row = slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * d;
            for (int k = i + 1; k <= j; ++k)
                if (!um(k, j).is_zero())
                    add_block(coeff, row, slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * d,
                              right_mul_matrix(um(k, j)), false);
            for (int k = i; k < j; ++k)
                if (!ui(i, k).is_zero())
                    add_block(coeff, row, slots.at[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * d,
                              left_mul_matrix(ui(i, k)), true);
        }

    auto make_rhs = [&](const std::vector<int>& eps) {
        RatMatrix rhs(rows, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int row = slots.at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * d;
                const Scalar value = ui(i, j) * Scalar::integer(ring, eps[static_cast<std::size_t>(j)]) -
                                     Scalar::integer(ring, eps[static_cast<std::size_t>(i)]) * um(i, j);
                set_rhs(rhs, row, value);
            }
        return rhs;
    };
    auto verify = [&](const SignedUnipotent& g) { return conjugate(g, um) == ui; };
    return enumerate_patterns(ring, n, tag, opts, CertLevel::Group, coeff, slots, make_rhs,
                              verify);
}

SearchReport nonreal_search(Ring ring, int n, long budget, std::uint64_t seed,
                            const OracleOptions& opts) {
    if (n > opts.dim_limit)
        throw DimensionTooLargeError("n = " + std::to_string(n) + " exceeds the oracle bound " +
                                     std::to_string(opts.dim_limit));
    SearchReport report;
    report.ring = ring;
    report.n = n;
    report.budget = budget;
    report.seed = seed;
    for (long t = 0; t < budget; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        const SignedUnipotent u = random_signed_unipotent(ring, n, rng);
        const FeasibilityResult r = group_reverser_feasible(u, GroupTag::SignedUnipotent, opts);
        if (r.status == Feasibility::Feasible) {
            ++report.feasible;
        } else {
            ++report.infeasible;
            report.nonreal_candidates.push_back(matrix_to_text(u.matrix()));
        }
    }
    return report;
}

}  // namespace nilrev
