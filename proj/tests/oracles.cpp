#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double m,
                double fm, double b, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: depth exhausted");
    if (std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive(f, a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb), tol, 50);
}

double quartic_profile_integral(double z) {
    if (z < 1.0) {
        return adaptive_simpson(
            [z](double t) { return 1.0 / std::sqrt(1.0 - z * t * t * t * t); }, 0.0, 1.0,
            1e-13);
    }
    // At z = 1 substitute t = 1 - s^2; the integrand becomes smooth:
    // dt/sqrt(1-t^4) = 2 ds / sqrt((1+t)(1+t^2)).
    return adaptive_simpson(
        [](double s) {
            const double t = 1.0 - s * s;
            return 2.0 / std::sqrt((1.0 + t) * (1.0 + t * t));
        },
        0.0, 1.0, 1e-13);
}

qcent::PhasePoint rk4_step(const qcent::ModelParams& p, const qcent::PhasePoint& s,
                           double dt) {
    using qcent::PhasePoint;
    auto deriv = [&p](const PhasePoint& u) {
        const auto f = qcent::force(p, u.x, u.y);
        return PhasePoint{u.px / p.mass, u.py / p.mass, f.fx, f.fy};
    };
    auto add = [](const PhasePoint& a, const PhasePoint& b, double c) {
        return PhasePoint{a.x + c * b.x, a.y + c * b.y, a.px + c * b.px, a.py + c * b.py};
    };
    const PhasePoint k1 = deriv(s);
    const PhasePoint k2 = deriv(add(s, k1, 0.5 * dt));
    const PhasePoint k3 = deriv(add(s, k2, 0.5 * dt));
    const PhasePoint k4 = deriv(add(s, k3, dt));
    PhasePoint out = s;
    out.x += dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    out.y += dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    out.px += dt / 6.0 * (k1.px + 2.0 * k2.px + 2.0 * k3.px + k4.px);
    out.py += dt / 6.0 * (k1.py + 2.0 * k2.py + 2.0 * k3.py + k4.py);
    return out;
}

double half_period_rk4(const qcent::ModelParams& p, qcent::PhasePoint start, double dt,
                       double t_max) {
    // Launched from x = 0 with px > 0; first return of x through zero from
    // above closes half the oscillation.
    qcent::PhasePoint s = start;
    double t = 0.0;
    double prev_x = s.x;
    while (t < t_max) {
        const qcent::PhasePoint next = rk4_step(p, s, dt);
        t += dt;
        if (t > dt && prev_x > 0.0 && next.x <= 0.0) {
            const double frac = prev_x / (prev_x - next.x);
            return t - dt + frac * dt;
        }
        prev_x = next.x;
        s = next;
    }
    throw std::runtime_error("half_period_rk4: no return within t_max");
}

qcent::Force fd_force(const qcent::ModelParams& p, double x, double y, double h) {
    const double vxp = qcent::potential(p, x + h, y), vxm = qcent::potential(p, x - h, y);
    const double vyp = qcent::potential(p, x, y + h), vym = qcent::potential(p, x, y - h);
    return {-(vxp - vxm) / (2.0 * h), -(vyp - vym) / (2.0 * h)};
}

}  // namespace oracle
