#include "hyperforge/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>

namespace hyperforge {

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    if (d == 0) fail(ErrorKind::DivisionByZero, "complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Real abs(const Complex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

Complex sqrt(const Complex& z) {
    Real m = abs(z);
    if (m == 0) return Complex();
    Real r = boost::multiprecision::sqrt((m + z.re) / 2);
    Real i = boost::multiprecision::sqrt((m - z.re) / 2);
    if (z.im < 0) i = -i;
    return Complex(r, i);
}

std::string to_string(const Complex& z, int digits) {
    if (z.im == 0) return to_string(z.re, digits);
    return to_string(z.re, digits) + (z.im < 0 ? " - " : " + ") + to_string(Real(boost::multiprecision::abs(z.im)), digits) + "i";
}

Complex eval(const PolyQ& p, const Complex& t) {
    Complex r;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + Complex(*it);
    return r;
}

namespace {

std::vector<Complex> seeds(const PolyQ& p) {
    int n = p.degree();
    std::vector<Complex> out;
    double lead = p.coeff(n).convert_to<double>();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i).convert_to<double>() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    auto ev = es.eigenvalues();
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = ev(i);
        // nudge off exact coincidences so Aberth's repulsion term stays finite
        out.emplace_back(Real(z.real() + 1e-9 * (i + 1)), Real(z.imag() + 1e-10 * (i + 1)));
    }
    return out;
}

}  // namespace

std::vector<Complex> poly_roots(const PolyQ& p, int precision) {
    int n = p.degree();
    if (n < 1) fail(ErrorKind::Unsupported, "poly_roots needs degree >= 1");
    if (n == 1) return {Complex(to_real(-p.coeff(0) / p.coeff(1)))};

    std::unique_ptr<PrecisionScope> scope;
    if (Real::default_precision() < unsigned(working_digits(precision)))
        scope = std::make_unique<PrecisionScope>(precision);

    PolyQ dp = p.derivative();
    std::vector<Complex> z = seeds(p);
    Real eps = pow(Real(10), -int(Real::default_precision()) + 5);
    for (int iter = 0; iter < 500; ++iter) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            Complex pv = eval(p, z[i]);
            if (abs(pv) == 0) continue;
            Complex w = pv / eval(dp, z[i]);
            Complex s;
            for (int j = 0; j < n; ++j)
                if (j != i) s += Complex(Real(1)) / (z[i] - z[j]);
            Complex step = w / (Complex(Real(1)) - w * s);
            z[i] -= step;
            Real rel = abs(step) / std::max(Real(1), abs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) break;
    }

    Real pnorm = 0;
    for (const auto& c : p.coeffs()) pnorm = std::max(pnorm, Real(boost::multiprecision::abs(to_real(c))));
    Real bound = pnorm * pow(Real(10), 8 - precision);
    Real tiny = pow(Real(10), -precision);
    for (auto& r : z) {
        if (boost::multiprecision::abs(r.im) < tiny * std::max(Real(1), abs(r))) r.im = 0;
        Real res = abs(eval(p, r));
        if (res > bound) fail(ErrorKind::IllConditioned, "root residual above bound");
    }
    // real coefficients: make conjugate pairs exact
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i].im <= 0) continue;
        size_t best = i;
        Real bd = -1;
        for (size_t j = 0; j < z.size(); ++j) {
            if (z[j].im >= 0) continue;
            Real d = abs(z[j] - z[i].conj());
            if (bd < 0 || d < bd) bd = d, best = j;
        }
        if (best != i) {
            Real re = (z[i].re + z[best].re) / 2;
            Real im = (z[i].im - z[best].im) / 2;
            z[i] = Complex(re, im);
            z[best] = Complex(re, -im);
        }
    }
    std::sort(z.begin(), z.end(), [&](const Complex& a, const Complex& b) {
        Real d = a.re - b.re;
        if (boost::multiprecision::abs(d) > tiny * std::max(Real(1), abs(a))) return d < 0;
        return a.im < b.im;
    });
    return z;
}

}  // namespace hyperforge
