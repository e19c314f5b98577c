#include "pvi/connection.hpp"

#include <Eigen/LU>

#include <array>
#include <cmath>

namespace pvi {

namespace {

constexpr double kPi = M_PI;
const Complex kI(0.0, 1.0);

double resonance_check(double mu) {
    const double two_mu = 2.0 * mu;
    if (std::abs(two_mu - std::round(two_mu)) < 1e-12) throw ResonantMu("2mu is an integer");
    return two_mu;
}

} // namespace

std::string point_name(CriticalPoint p) {
    switch (p) {
    case CriticalPoint::Zero: return "0";
    case CriticalPoint::One: return "1";
    case CriticalPoint::Infinity: return "inf";
    }
    return "0";
}

Complex complex_gamma(Complex z) {
    static const std::array<double, 9> c = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                            771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        const Complex s = std::sin(kPi * z);
        if (std::abs(s) == 0.0) throw SingularPoint("gamma pole");
        return kPi / (s * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[static_cast<std::size_t>(i)] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Rational index_from_angle(const Rational& r) {
    if (r <= 0 || r >= 1) throw InvalidArgument("angle must lie in (0, 1)");
    return r <= Rational(1, 2) ? Rational(2 * r) : Rational(2 - 2 * r);
}

double sigma_from_x0(double x0) {
    if (std::abs(x0) > 2.0) throw OutOfRange("|x0| > 2");
    return 2.0 / kPi * std::asin(std::abs(x0) / 2.0);
}

Complex gamma_ratio(double l, double mu) {
    const double p = (1.0 + l) / 2.0, m = (1.0 - l) / 2.0;
    const auto G = [](Complex z) { return complex_gamma(z); };
    const Complex num = G(1.0 - l) * G(1.0 - l) * G(p) * G(p) * G(p + mu) * G(p - mu);
    const Complex den = G(l) * G(l) * G(m) * G(m) * G(m + mu) * G(m - mu);
    return num / den;
}

AsymptoticDatum coefficient_at(CriticalPoint point, const RealTriple& t, double mu) {
    const double two_mu = resonance_check(mu);
    double x0 = t(0), x1 = t(1), xi = t(2);
    if (point == CriticalPoint::One) std::swap(x0, x1);
    if (point == CriticalPoint::Infinity) {
        const double a = t(2), b = -t(1), c = t(0) - t(1) * t(2);
        x0 = a;
        x1 = b;
        xi = c;
    }
    if (x1 == 0.0 && xi == 0.0) throw DegenerateTriple("both companion coordinates vanish");
    AsymptoticDatum d;
    d.point = point;
    if (x0 == 0.0) {
        d.sigma = 0.0;
        d.l = 1.0;
        d.a = xi * xi / (x1 * x1 + xi * xi);
        return d;
    }
    d.sigma = sigma_from_x0(x0);
    d.l = 1.0 - d.sigma;
    const double sg = x0 > 0 ? 1.0 : -1.0;
    const double den = 2.0 * (x1 * x1 - x0 * x1 * xi + xi * xi);
    if (den == 0.0) throw DegenerateTriple("vanishing normalization");
    const Complex e = Complex(x0 * x0 * x1 * x1 - 2 * x1 * x1 - 2 * x0 * x1 * xi + 2 * xi * xi,
                              x1 * sg * std::sqrt(4.0 - x0 * x0) * (2 * xi - x0 * x1)) /
                      den;
    const double shift = two_mu + d.l - 1.0;
    d.a = 4.0 * gamma_ratio(d.l, mu) / (e * shift * shift);
    return d;
}

MonodromyTriple monodromy_from_asymptotics(double sigma0, double mu, Complex a0, Complex r_free) {
    const double theta = resonance_check(mu);
    if (std::abs(r_free) == 0.0) throw InvalidArgument("r must be nonzero");
    MonodromyTriple out;
    out.r = r_free;
    if (sigma0 == 0.0) {
        const double h = kPi * theta / 2.0, sec = 1.0 / std::cos(h), tn = std::tan(h), sn2 = std::sin(h) * std::sin(h);
        const Complex eh = std::exp(kI * h);
        out.s = a0;
        out.m1 << sec / eh, kI * kPi * sec / eh, -kI / kPi * sn2 * eh * sec, sec * eh;
        auto local = [&](Complex s) {
            Matrix2c m;
            m << 1.0 - kI * s * tn, -kI * s * kPi * eh * sec, kI / kPi * s * sn2 / eh * sec, 1.0 + kI * s * tn;
            return m;
        };
        out.m0 = local(a0);
        out.mx = local(1.0 - a0);
        return out;
    }
    const double sg = sigma0;
    const auto G = [](Complex z) { return complex_gamma(z); };
    const Complex ratio = G(1 + sg) * G(1 + sg) * G(1 - sg / 2) * G(1 - sg / 2) * G(1 + mu - sg / 2) *
                          G(1 - mu - sg / 2) /
                          (G(1 - sg) * G(1 - sg) * G(1 + sg / 2) * G(1 + sg / 2) * G(1 + mu + sg / 2) *
                           G(1 - mu + sg / 2));
    const Complex s = -r_free / (4.0 * a0) * (theta + sg) / (theta - sg) * ratio;
    out.s = s;
    const double sp = std::sin(kPi * (theta + sg) / 2.0), sm = std::sin(kPi * (theta - sg) / 2.0);
    const Complex et = std::exp(-kI * kPi * theta);
    const Complex f1 = -kI / std::sin(kPi * theta);
    out.m1 << f1 * (std::cos(kPi * sg) - et), f1 * (-2.0 * et * sp * sm), f1 * (2.0 / et * sp * sm),
        f1 * (-std::cos(kPi * sg) + 1.0 / et);
    const Complex e = std::exp(kI * kPi * sg);
    const double sn = std::sin(kPi * sg / 2.0) * std::sin(kPi * sg / 2.0);
    const Complex f0 = -kI / std::sin(kPi * sg);
    Matrix2c mt, m0, c;
    mt << f0 * (e - 1.0), f0 * (2.0 * s * e * sn), f0 * (-2.0 * sn / (s * e)), f0 * (1.0 - 1.0 / e);
    m0 << f0 * (e - 1.0), f0 * (-2.0 * s * sn), f0 * (2.0 * sn / s), f0 * (1.0 - 1.0 / e);
    c << sm, r_free * sp, sp / r_free, sm;
    if (std::abs(c.determinant()) < 1e-14) throw SingularC("det C = 0");
    const Matrix2c ci = c.inverse();
    out.mx = ci * mt * c;
    out.m0 = ci * m0 * c;
    return out;
}

ComplexTriple triple_from_asymptotics(Complex a0, double sigma0, double mu, double tol) {
    resonance_check(mu);
    const double smu = std::sin(kPi * mu);
    ComplexTriple x;
    if (sigma0 == 0.0) {
        if (a0 == 0.0 || a0 == 1.0) throw InvalidArgument("a0 must differ from 0 and 1 when sigma0 = 0");
        x << 0.0, -2.0 * std::abs(smu) * std::sqrt(1.0 - a0), -2.0 * std::abs(smu) * std::sqrt(a0);
    } else {
        if (sigma0 < 0.0 || sigma0 >= 1.0) throw OutOfRange("sigma0 outside [0, 1)");
        const double shift = 2.0 * mu - sigma0;
        const Complex eiphi = 4.0 * gamma_ratio(1.0 - sigma0, mu) / (a0 * shift * shift);
        const Complex phi = -std::log(eiphi) / (kI * kPi);
        const Complex k = std::sqrt(Complex(2.0 * (std::cos(kPi * sigma0) - std::cos(2.0 * kPi * mu))));
        const double cs = std::cos(kPi * sigma0 / 2.0);
        x << -2.0 * std::sin(kPi * sigma0 / 2.0), -k * std::sin(kPi * phi / 2.0) / cs,
            -k * std::cos(kPi * (sigma0 + phi) / 2.0) / cs;
    }
    const Complex q = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) - x(0) * x(1) * x(2);
    if (std::abs(q - 4.0 * smu * smu) > tol * std::max(1.0, std::abs(q)))
        throw InconsistentData("recovered triple violates the mu relation");
    return x;
}

ComplexTriple triple_via_matrices(Complex a0, double sigma0, double mu) {
    MonodromyTriple m;
    try {
        m = monodromy_from_asymptotics(sigma0, mu, a0, 1.0);
    } catch (const SingularC&) {
        m = monodromy_from_asymptotics(sigma0, mu, a0, 2.0);
    }
    return triple_from_matrices(m.m0, m.mx, m.m1, 1e-8);
}

bool same_class(const ComplexTriple& a, const ComplexTriple& b, double tol) {
    for (const auto& v : sign_variants(a))
        if ((v - b).cwiseAbs().maxCoeff() <= tol) return true;
    return false;
}

} // namespace pvi
