#include "hyperforge/poly.hpp"

#include <cmath>

namespace hyperforge {

PolyQ::PolyQ(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

PolyQ::PolyQ(std::initializer_list<Rational> c) : c_(c) { trim(); }

PolyQ::PolyQ(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::rising(const Rational& c0, const Rational& c1, long n) {
    PolyQ r(1);
    for (long j = 0; j < n; ++j) r *= PolyQ{c0 + j, c1};
    return r;
}

Rational PolyQ::coeff(int i) const {
    if (i < 0 || i >= int(c_.size())) return 0;
    return c_[i];
}

Rational PolyQ::operator()(const Rational& t) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

Real PolyQ::operator()(const Real& t) const {
    Real r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + to_real(*it);
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

PolyQ PolyQ::compose_linear(const Rational& a, const Rational& b) const {
    PolyQ r, lin{b, a};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= lin;
        r += PolyQ(*it);
    }
    return r;
}

PolyQ PolyQ::derivative() const {
    std::vector<Rational> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * long(i));
    return PolyQ(std::move(r));
}

double PolyQ::norm() const {
    double s = 0;
    for (const auto& x : c_) s = std::max(s, std::fabs(x.convert_to<double>()));
    return s;
}

std::string PolyQ::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c_[i]) + ")";
        if (i == 1) s += "*t";
        if (i > 1) s += "*t^" + std::to_string(i);
    }
    return s;
}

PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }

}  // namespace hyperforge
