#include "latproj/lifting.hpp"

#include <cmath>

#include "latproj/svp.hpp"

namespace latproj {

bool Lifting::has_zero_last_column() const {
    for (std::size_t i = 0; i < gstar.rows(); ++i)
        if (gstar(i, gstar.cols() - 1) != 0) return false;
    return true;
}

RationalMatrix Lifting::gram_at(const Int& w) const {
    Rat w2(w * w), wr(w);
    return astar * w2 + q1 * wr + q0;
}

Lifting make_lifting(const RationalMatrix& gstar, const RationalMatrix& p) {
    if (gstar.rows() + 1 != gstar.cols()) throw dimension_error("Gstar must be n x (n+1)");
    if (p.rows() != gstar.rows() || p.cols() != gstar.cols())
        throw dimension_error("P shape must match Gstar");
    if (!gstar.is_integer() || !p.is_integer())
        throw argument_error("Gstar and P must be integer matrices");
    Lifting l;
    l.gstar = gstar;
    l.p = p;
    l.astar = gstar * gstar.transpose();
    l.q1 = gstar * p.transpose() + p * gstar.transpose();
    l.q0 = p * p.transpose();
    return l;
}

PolyMatrix h_matrix(const Lifting& l) {
    PolyMatrix gw = l.lifted();
    PolyMatrix h(gw.rows(), gw.cols() - 1);
    for (std::size_t i = 0; i < gw.rows(); ++i)
        for (std::size_t j = 1; j < gw.cols(); ++j) h(i, j - 1) = gw(i, j);
    return h;
}

Cond1Result check_cond1(const Lifting& l) {
    Cond1Result r;
    r.det_poly = poly_det(h_matrix(l));
    if (r.det_poly.is_constant() && !r.det_poly.is_zero()) {
        Int c = r.det_poly.coeff(0);
        if (c == 1 || c == -1) {
            r.pass = true;
            r.det_value = c;
        }
    }
    return r;
}

Cond2Result check_cond2(const Lifting& l) {
    Cond2Result r;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (l.astar(i, j) != 0) {
                Rat a = l.q1(i, j) / l.astar(i, j);
                if (l.q1 == l.astar * a) {
                    r.pass = true;
                    r.alpha = a;
                }
                return r;
            }
    return r;
}

Lifting with_cond2(Lifting l) {
    Cond2Result c = check_cond2(l);
    if (c.pass) l.alpha = c.alpha;
    return l;
}

std::vector<IntPoly> normalize_family(std::vector<IntPoly> fam) {
    for (const auto& p : fam) {
        if (p.is_zero()) continue;
        if (p.leading() < 0)
            for (auto& q : fam) q = -q;
        break;
    }
    return fam;
}

std::vector<IntPoly> projection_family(const Lifting& l) {
    Cond1Result c1 = check_cond1(l);
    if (!c1.pass)
        throw construction_error("lifting does not certify projection lattices: det H_w = " +
                                 c1.det_poly.pretty());
    return normalize_family(cross_product(l.lifted()));
}

std::vector<Int> eval_family(const std::vector<IntPoly>& fam, const Int& w) {
    std::vector<Int> v(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) v[i] = fam[i].eval(w);
    return v;
}

Rat c_w(const Rat& alpha, const Int& w) {
    if (w == 0) throw argument_error("c_w undefined at w = 0");
    Rat t = make_rat(1, w) - alpha / Rat(2 * w * w);
    return t * t;
}

ConvergenceReport convergence_report(const Lifting& l, const RationalMatrix& a,
                                     const std::vector<long>& ws, const std::string& family_id) {
    if (!is_positive_definite(a)) throw definiteness_error("target Gram must be positive definite");
    Cond2Result c2 = check_cond2(l);
    ConvergenceReport rep;
    rep.family_id = family_id;
    rep.claimed_order = c2.pass ? "1/w^2" : "1/w";
    for (long wv : ws) {
        if (wv < 1) throw argument_error("convergence report needs w >= 1");
        ConvergencePoint pt;
        pt.w = wv;
        Int wi(wv);
        pt.cw = c2.pass ? c_w(c2.alpha, wi) : make_rat(1, Int(wv) * wv);
        RationalMatrix asw = l.gram_at(wi);
        RationalMatrix aw;
        try {
            aw = inverse(asw);
        } catch (const singular_error&) {
            throw singular_error("A*_w is singular at w = " + std::to_string(wv));
        }
        pt.error = (a - aw * (Rat(1) / pt.cw)).inf_norm();
        pt.error_f = to_double(pt.error);
        rep.points.push_back(std::move(pt));
    }
    // least-squares log-log slope over the three largest w
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : rep.points)
        if (p.error > 0) pts.emplace_back(std::log(static_cast<double>(p.w)), std::log(p.error_f));
    if (pts.size() > 3) pts.erase(pts.begin(), pts.end() - 3);
    if (pts.size() >= 2) {
        double xb = 0, yb = 0;
        for (auto& [x, y] : pts) { xb += x; yb += y; }
        xb /= pts.size(); yb /= pts.size();
        double num = 0, den = 0;
        for (auto& [x, y] : pts) { num += (x - xb) * (y - yb); den += (x - xb) * (x - xb); }
        rep.slope = den > 0 ? num / den : 0.0;
    }
    return rep;
}

RationalMatrix transport_perturbation(const RationalMatrix& p1, const RationalMatrix& u) {
    if (!is_unimodular(u)) throw argument_error("transport needs a unimodular matrix");
    return inverse(u) * p1;
}

Lifting transport_lifting(const Lifting& l, const RationalMatrix& u) {
    if (!is_unimodular(u)) throw argument_error("transport needs a unimodular matrix");
    RationalMatrix ui = inverse(u);
    return make_lifting(ui * l.gstar, ui * l.p);
}

NeumannResult neumann_truncation_check(const Lifting& l, const Int& w, int k_max) {
    if (w < 1) throw argument_error("w must be >= 1");
    if (k_max < 0) throw argument_error("k_max must be >= 0");
    RationalMatrix a = inverse(l.astar);
    Rat w2inv = make_rat(1, w * w);
    RationalMatrix a_over_w2 = a * w2inv;
    RationalMatrix m = a_over_w2 * (l.q1 * Rat(-w) - l.q0);
    RationalMatrix aw = inverse(l.gram_at(w));

    NeumannResult res;
    RationalMatrix term = a_over_w2;  // k = 0
    RationalMatrix partial = term;
    res.residuals.push_back((aw - partial).inf_norm());
    for (int k = 1; k <= k_max; ++k) {
        term = m * term;
        partial = partial + term;
        res.residuals.push_back((aw - partial).inf_norm());
    }
    res.residual = res.residuals.back();
    int grew = 0;
    for (std::size_t i = 1; i < res.residuals.size(); ++i) {
        grew = res.residuals[i] > res.residuals[i - 1] ? grew + 1 : 0;
        if (grew >= 3) {
            res.below_w0 = true;
            break;
        }
    }
    return res;
}

}  // namespace latproj
