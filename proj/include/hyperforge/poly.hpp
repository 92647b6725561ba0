#pragma once

#include "hyperforge/exact.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hyperforge {

// Dense polynomial over the rationals, constant term first.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Rational& c);
    PolyQ(int c) : PolyQ(Rational(c)) {}
    PolyQ(std::initializer_list<Rational> c);
    explicit PolyQ(std::vector<Rational> c);

    static PolyQ zero() { return PolyQ(); }
    static PolyQ t() { return PolyQ{Rational(0), Rational(1)}; }
    // (c0 + c1 t)_n as a polynomial in t
    static PolyQ rising(const Rational& c0, const Rational& c1, long n);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    Rational operator()(const Rational& t) const;
    Real operator()(const Real& t) const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rational& s);

    // p(a t + b)
    PolyQ compose_linear(const Rational& a, const Rational& b) const;
    PolyQ derivative() const;
    double norm() const;
    std::string str() const;

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<Rational> c_;
};

PolyQ operator+(PolyQ a, const PolyQ& b);
PolyQ operator-(PolyQ a, const PolyQ& b);
PolyQ operator*(PolyQ a, const PolyQ& b);
PolyQ operator*(PolyQ a, const Rational& s);
PolyQ operator*(const Rational& s, PolyQ a);

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(const Real& r, const Real& i = Real(0)) : re(r), im(i) {}
    Complex(const Rational& q) : re(to_real(q)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Real abs(const Complex& z);
Complex sqrt(const Complex& z);
std::string to_string(const Complex& z, int digits);

Complex eval(const PolyQ& p, const Complex& t);

// All complex roots, sorted by (re, im). Residual |p(r)| <= 10^(8-P)*|p|.
std::vector<Complex> poly_roots(const PolyQ& p, int precision);

}  // namespace hyperforge
