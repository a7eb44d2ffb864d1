#include "latproj/int_poly.hpp"

#include <sstream>

namespace latproj {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t deg, const Int& coeff) {
    IntPoly p;
    if (coeff == 0) return p;
    p.c_.assign(deg + 1, Int(0));
    p.c_[deg] = coeff;
    return p;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw argument_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw argument_error("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw argument_error("inexact polynomial division");
    std::vector<Int> rem(c_);
    std::vector<Int> quo(c_.size() - d.c_.size() + 1, Int(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        Int top = rem[k + d.c_.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (r != 0) throw argument_error("inexact polynomial division");
        quo[k] = q;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw argument_error("inexact polynomial division");
    return IntPoly(std::move(quo));
}

Int IntPoly::eval(const Int& w) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * w + c_[i];
    return acc;
}

std::string IntPoly::pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string IntPoly::coeff_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].get_str();
    }
    return os.str();
}

IntPoly IntPoly::from_coeff_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<Int> c;
    std::string tok;
    while (is >> tok) {
        Int x;
        if (x.set_str(tok, 10) != 0) throw parse_error("bad integer coefficient: " + tok);
        c.push_back(x);
    }
    return IntPoly(std::move(c));
}

}  // namespace latproj
