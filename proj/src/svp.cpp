#include "latproj/svp.hpp"

#include <algorithm>
#include <cmath>

namespace latproj {

std::optional<Ldlt> ldlt(const RationalMatrix& a) {
    if (!a.is_symmetric()) return std::nullopt;
    const std::size_t n = a.rows();
    Ldlt r{RationalMatrix::identity(n), std::vector<Rat>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= r.l(i, k) * r.l(j, k) * r.d[k];
            r.l(i, j) = s / r.d[j];
        }
        Rat s = a(i, i);
        for (std::size_t k = 0; k < i; ++k) s -= r.l(i, k) * r.l(i, k) * r.d[k];
        if (s <= 0) return std::nullopt;
        r.d[i] = s;
    }
    return r;
}

bool is_positive_definite(const RationalMatrix& a) {
    return a.is_square() && ldlt(a).has_value();
}

RationalMatrix lll_transform(const RationalMatrix& gram, double delta) {
    const std::size_t n = gram.rows();
    auto f = ldlt(gram);
    if (!f) throw definiteness_error("Gram matrix is not positive definite");

    // rows of B = L sqrt(D): a float Cholesky basis for the quadratic form
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j)
            b[i][j] = to_double(f->l(i, j)) * std::sqrt(to_double(f->d[j]));
    }
    std::vector<std::vector<long>> u(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };

    std::vector<std::vector<double>> bs(n, std::vector<double>(n));
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    std::vector<double> bnorm(n, 0.0);
    auto gso = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            bs[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = bnorm[j] > 0 ? dot(b[i], bs[j]) / bnorm[j] : 0.0;
                for (std::size_t k = 0; k < n; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            bnorm[i] = dot(bs[i], bs[i]);
        }
    };

    gso();
    std::size_t k = 1, steps = 0;
    const std::size_t max_steps = 20000 + 4000 * n * n;
    while (k < n && steps++ < max_steps) {
        for (std::size_t j = k; j-- > 0;) {
            double q = std::round(mu[k][j]);
            if (q != 0.0 && std::abs(q) < 9e18) {
                long qi = static_cast<long>(q);
                for (std::size_t t = 0; t < n; ++t) {
                    b[k][t] -= q * b[j][t];
                    u[k][t] -= qi * u[j][t];
                }
                gso();
            }
        }
        if (bnorm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            gso();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }

    RationalMatrix um(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) um(i, j) = Rat(Int(u[i][j]));
    return um;
}

namespace {

// Schnorr-Euchner depth-first enumeration on an exact LDL^t factorization.
struct Enumerator {
    const RationalMatrix& l;
    const std::vector<Rat>& d;
    std::size_t n;
    std::vector<Int> x, best_x;
    Rat best;

    Enumerator(const Ldlt& f, Rat bound)
        : l(f.l), d(f.d), n(f.d.size()), x(n, Int(0)), best_x(n, Int(0)), best(std::move(bound)) {}

    void run() { descend(n, Rat(0), true); }

    // level counts down; i = number of still-free coordinates
    void descend(std::size_t i, const Rat& partial, bool all_zero_above) {
        if (i == 0) {
            if (!all_zero_above && partial < best) {
                best = partial;
                best_x = x;
            }
            return;
        }
        const std::size_t lev = i - 1;
        Rat c = 0;
        for (std::size_t j = lev + 1; j < n; ++j)
            if (x[j] != 0) c += l(j, lev) * x[j];
        Int x0 = round_nearest(-c);
        // expanding rings around the continuous minimizer; both directions
        // exhausted once the ring contributes nothing under the current bound
        for (Int ring(0);; ++ring) {
            bool any = false;
            for (int s = 0; s < (ring == 0 ? 1 : 2); ++s) {
                Int xi = (s == 0) ? Int(x0 + ring) : Int(x0 - ring);
                Rat y = Rat(xi) + c;
                Rat t = partial + d[lev] * y * y;
                if (t < best || (all_zero_above && xi == 0 && t <= best)) {
                    // strict '<' prunes ties except the all-zero prefix path,
                    // which must stay open to reach nonzero deeper levels
                    any = true;
                    x[lev] = xi;
                    descend(lev, t, all_zero_above && xi == 0);
                }
            }
            if (!any && ring > 0) break;
            if (ring == 0 && !any) {
                // centre already over budget: rings can only grow
                bool grow = false;
                for (int s = 0; s < 2; ++s) {
                    Int xi = (s == 0) ? Int(x0 + 1) : Int(x0 - 1);
                    Rat y = Rat(xi) + c;
                    if (partial + d[lev] * y * y < best) grow = true;
                }
                if (!grow) break;
            }
        }
        x[lev] = 0;
    }
};

}  // namespace

SvpResult shortest_vector(const RationalMatrix& gram) {
    if (!gram.is_square()) throw dimension_error("Gram matrix must be square");
    const std::size_t n = gram.rows();
    RationalMatrix u = lll_transform(gram);
    RationalMatrix ared = u * gram * u.transpose();
    auto f = ldlt(ared);
    if (!f) throw definiteness_error("Gram matrix is not positive definite");

    Rat bound = ared(0, 0);
    std::vector<Int> init(n, Int(0));
    init[0] = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (ared(i, i) < bound) {
            bound = ared(i, i);
            std::fill(init.begin(), init.end(), Int(0));
            init[i] = 1;
        }

    Enumerator e(*f, bound);
    e.best_x = init;
    e.run();

    // exact re-verification of the winner against the reduced Gram
    Rat check = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e.best_x[i] != 0 && e.best_x[j] != 0)
                check += Rat(e.best_x[i]) * ared(i, j) * Rat(e.best_x[j]);
    if (check != e.best) throw error("enumeration winner failed exact re-verification");

    SvpResult r;
    r.min_norm2 = e.best;
    r.coeffs.assign(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) r.coeffs[j] += u(i, j).get_num() * e.best_x[i];
    return r;
}

}  // namespace latproj
