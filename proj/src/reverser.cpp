#include "nilrev/reverser.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "nilrev/errors.hpp"
#include "nilrev/expmap.hpp"

namespace nilrev {

namespace {

const char* kProducedNames[] = {"induction", "parity", "oracle", "closed_form"};

GroupTag tag_of(const SignedUnipotent& g) {
    return g.all_plus_diagonal() ? GroupTag::Unipotent : GroupTag::SignedUnipotent;
}

ReversalCertificate make_algebra_cert(const Matrix& x, const SignedUnipotent& g,
                                      ProducedBy produced) {
    if (conjugate(g, x) != -x) throw Error("internal: constructed g does not reverse X");
    return {x.ring(), x.rows(), tag_of(g), CertLevel::Algebra, x, g, is_involution(g), produced};
}

}  // namespace

const char* produced_by_name(ProducedBy p) { return kProducedNames[static_cast<int>(p)]; }

ProducedBy produced_by_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i)
        if (name == kProducedNames[i]) return static_cast<ProducedBy>(i);
    throw Error("unknown producer: " + name);
}

ReversalCertificate reverse_star(const NilpotentUpper& X) {
    return reverse_star_traced(X, nullptr);
}

ReversalCertificate reverse_star_traced(const NilpotentUpper& X, InductionTrace* trace) {
    if (!X.is_star())
        throw NotStarError("superdiagonal has a zero entry; the induction cannot divide by it");
    const Ring ring = X.ring();
    const int n = X.n();
    const Matrix& m = X.matrix();

    Matrix g = Matrix::identity(ring, 1);
    if (trace)
        trace->levels.push_back({1, g, 1, Matrix(ring, 0, 1), Matrix(ring, 0, 1)});
    for (int k = 2; k <= n; ++k) {
        // X_k = [[X_{k-1}, x],[0, 0]]; extend g by a column a and a sign eps.
        Matrix x(ring, k - 1, 1);
        for (int i = 0; i < k - 1; ++i) x(i, 0) = m(i, k - 1);
        const Scalar eps = -g(k - 2, k - 2);
        const int eps_int = eps.is_one() ? 1 : -1;
        const Matrix b = -(g * x + x.scaled(Rational(eps_int)));
        if (!b(k - 2, 0).is_zero())
            throw Error("internal: last entry of b must vanish by the choice of eps");
        // Solve sum_{j>i} X_{ij} a_j = b_i upward; left-divide by the
        // superdiagonal coefficient. a_1 stays 0: the system never
        // constrains it.
        Matrix a(ring, k - 1, 1);
        for (int i = k - 3; i >= 0; --i) {
            Scalar rhs = b(i, 0);
            for (int j = i + 2; j <= k - 2; ++j) rhs -= m(i, j) * a(j, 0);
            a(i + 1, 0) = m(i, i + 1).inverse() * rhs;
        }
        Matrix next(ring, k, k);
        for (int i = 0; i < k - 1; ++i)
            for (int j = 0; j < k - 1; ++j) next(i, j) = g(i, j);
        for (int i = 0; i < k - 1; ++i) next(i, k - 1) = a(i, 0);
        next(k - 1, k - 1) = eps;
        g = next;
        if (trace) trace->levels.push_back({k, g, eps_int, a, b});
    }
    return make_algebra_cert(m, SignedUnipotent(g), ProducedBy::Induction);
}

std::variant<ReversalCertificate, OddCycle> diagonal_parity_reverser(const NilpotentUpper& X) {
    const int n = X.n();
    const Matrix& m = X.matrix();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }

    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 unvisited, else +1/-1
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != 0) continue;
        color[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == 0) {
                    color[static_cast<std::size_t>(w)] = -color[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    // Same color at both ends: the two tree paths plus this
                    // edge close an odd cycle.
                    std::vector<int> va{v};
                    for (int c = v; parent[static_cast<std::size_t>(c)] != -1;) {
                        c = parent[static_cast<std::size_t>(c)];
                        va.push_back(c);
                    }
                    std::vector<int> wa{w};
                    int meet = -1;
                    for (int c = w;;) {
                        for (int u : va)
                            if (u == c) { meet = c; break; }
                        if (meet != -1) break;
                        c = parent[static_cast<std::size_t>(c)];
                        wa.push_back(c);
                    }
                    OddCycle cycle;
                    auto push_path = [&](const std::vector<int>& path) {
                        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                            if (path[i] == meet) break;
                            const int a = std::min(path[i], path[i + 1]);
                            const int b = std::max(path[i], path[i + 1]);
                            cycle.edges.emplace_back(a + 1, b + 1);
                        }
                    };
                    push_path(va);
                    push_path(wa);
                    cycle.edges.emplace_back(std::min(v, w) + 1, std::max(v, w) + 1);
                    std::sort(cycle.edges.begin(), cycle.edges.end());
                    return cycle;
                }
            }
        }
    }
    std::vector<int> signs(color.begin(), color.end());
    SignedUnipotent g = SignedUnipotent::diagonal(X.ring(), signs);
    return make_algebra_cert(m, g, ProducedBy::Parity);
}

ReversalCertificate reverse_group_star(const SignedUnipotent& u) {
    if (!u.all_plus_diagonal())
        throw NotUnipotentError("group-level reversal via log needs an all-plus diagonal");
    if (!u.is_star()) throw NotStarError("superdiagonal has a zero entry");
    const NilpotentUpper x = log_unipotent(u);
    const ReversalCertificate inner = reverse_star(x);
    const SignedUnipotent& h = inner.g;
    if (conjugate(h, u.matrix()) != invert(u).matrix())
        throw Error("internal: transported reverser fails the group identity");
    return {u.ring(), u.n(),     tag_of(h),           CertLevel::Group,
            u.matrix(), h, is_involution(h), ProducedBy::Induction};
}

ReversalCertificate closed_form_reverser(const NilpotentUpper& X) {
    const Ring ring = X.ring();
    const Matrix& m = X.matrix();
    if (X.n() == 2) {
        SignedUnipotent g = SignedUnipotent::diagonal(ring, {1, -1});
        return make_algebra_cert(m, g, ProducedBy::ClosedForm);
    }
    if (X.n() == 3 && !m(0, 1).is_zero()) {
        const Scalar a = m(0, 1), b = m(0, 2), c = m(1, 2);
        const Scalar p = Scalar::one(ring);
        const Scalar r = a.inverse() * (-(p * c + b + b));
        Matrix g = Matrix::identity(ring, 3);
        g(1, 1) = -Scalar::one(ring);
        g(0, 1) = p;
        g(0, 2) = -(p * r) * Scalar::rational(ring, Rational(1, 2));
        g(1, 2) = r;
        const ReversalCertificate cert = make_algebra_cert(m, SignedUnipotent(g), ProducedBy::ClosedForm);
        if (!cert.involution) throw Error("internal: closed form must be an involution");
        return cert;
    }
    throw NotApplicableError("closed forms cover n = 2 and n = 3 with a nonzero (1,2) entry");
}

bool check_certificate(const ReversalCertificate& c) {
    const Matrix& input = c.input;
    const SignedUnipotent& g = c.g;
    if (input.ring() != c.ring || g.ring() != c.ring)
        throw MalformedCertificateError("ring tag does not match the matrices");
    if (input.rows() != c.n || input.cols() != c.n || g.n() != c.n)
        throw MalformedCertificateError("dimension tag does not match the matrices");
    if (c.group_tag == GroupTag::Unipotent && !g.all_plus_diagonal())
        throw MalformedCertificateError("unipotent tag with a -1 diagonal sign");
    if (c.level == CertLevel::Algebra) {
        if (!input.is_strictly_upper())
            throw MalformedCertificateError("algebra-level input must be strictly upper");
        if (conjugate(g, input) != -input) return false;
    } else {
        if (!input.is_upper() || !input.has_sign_diagonal())
            throw MalformedCertificateError("group-level input must be upper with a sign diagonal");
        const SignedUnipotent u{input};
        if (conjugate(g, input) != invert(u).matrix()) return false;
    }
    return c.involution == is_involution(g);
}

}  // namespace nilrev
