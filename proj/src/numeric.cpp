#include "uavdd/numeric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace uavdd {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth) {
    if (!(b >= a)) throw std::invalid_argument("integrate: b < a");
    if (a == b) return {0.0, 0.0, true};
    QuadResult out;
    double err = 0.0;
    out.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, abs_tol, &err);
    out.error_estimate = err;
    out.converged = err <= std::max(abs_tol * 16.0, 1e-14);
    return out;
}

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  int max_iter) {
    if (!(hi > lo)) throw std::invalid_argument("bisect: empty bracket");
    double flo = f(lo);
    double fhi = f(hi);
    RootResult out;
    if (flo == 0.0) return {lo, 0.0, true};
    if (fhi == 0.0) return {hi, 0.0, true};
    if ((flo > 0.0) == (fhi > 0.0)) {
        out.bracketed = false;
        // Report the boundary whose value is closer to zero.
        out.x = std::fabs(flo) < std::fabs(fhi) ? lo : hi;
        out.f_at_x = std::fabs(flo) < std::fabs(fhi) ? flo : fhi;
        return out;
    }
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return {mid, 0.0, true};
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    out.x = 0.5 * (lo + hi);
    out.f_at_x = f(out.x);
    return out;
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
    if (!(hi >= lo)) throw std::invalid_argument("golden_minimize: empty interval");
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace uavdd
