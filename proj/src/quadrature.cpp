#include "qcspec/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qcspec::quadrature {

namespace {

Rule1D build_gl(int n) {
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

}  // namespace

const Rule1D& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
    static std::map<int, Rule1D> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gl(n)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int n, int panels) {
    const Rule1D& rule = gauss_legendre(n);
    const double hp = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * hp;
        for (int i = 0; i < n; ++i)
            sum += rule.weights[i] * f(c + 0.5 * hp * rule.nodes[i]);
    }
    return sum * 0.5 * hp;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double m, double b,
               double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double m, double b,
             double fa, double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, lm, m, fa, flm, fm);
    const double right = simpson(f, m, rm, b, fm, frm, fb);
    if (depth > 50) return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(f, a, m, b, fa, fm, fb);
    const double scale = std::max(std::abs(whole), 1e-300);
    return adapt(f, a, m, b, fa, fm, fb, whole, rel_tol * scale, 0);
}

namespace {

double radical_inverse(long index, int base) {
    double r = 0.0, f = 1.0 / base;
    for (long i = index + 1; i > 0; i /= base) {
        r += f * (i % base);
        f /= base;
    }
    return r;
}

}  // namespace

void halton2(long index, double& u, double& v) {
    u = radical_inverse(index, 2);
    v = radical_inverse(index, 3);
}

}  // namespace qcspec::quadrature
