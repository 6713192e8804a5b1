#include "staircase/limit_shape.hpp"

#include <algorithm>
#include <cmath>

#include "staircase/error.hpp"

namespace staircase {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kHalfDiagonal = kSqrt2 / 2;
constexpr double kPi = 3.14159265358979323846;
constexpr double kSlack = 1e-12;

void require_unit(double a, const char* what)
{
    if (!(a >= -kSlack && a <= 1 + kSlack)) fail(ErrorKind::OutOfRange, std::string(what) + " outside [0, 1]");
}

double clamp_unit(double a)
{
    return std::clamp(a, 0.0, 1.0);
}

// Curve value for 0 < alpha < 1/2.
double lower_curve(double alpha, double u)
{
    double r2 = 2 * alpha * (1 - alpha);
    double inside = r2 - u * u;
    if (inside <= 0) return std::abs(u);
    double s = std::sqrt(inside);
    double tilt = 1 - 2 * alpha;
    return 2 * u / kPi * std::atan2(tilt * u, s) + kSqrt2 / kPi * std::atan2(kSqrt2 * s, tilt);
}

// Times at which the curve through a boundary point with y - x = d detaches
// from |u| resp. sqrt2 - |u|. 1 - d^2 is factored to keep the corners exact.
double detach_low(double d)
{
    return (1 - std::sqrt(std::max(0.0, (1 - d) * (1 + d)))) / 2;
}

double detach_high(double d)
{
    return (1 + std::sqrt(std::max(0.0, (1 - d) * (1 + d)))) / 2;
}

double interpolate(const std::vector<std::pair<double, double>>& pts, double u)
{
    if (u < pts.front().first || u > pts.back().first) return std::abs(u);
    if (u == pts.back().first) return pts.back().second;
    auto it = std::upper_bound(pts.begin(), pts.end(), u,
                               [](double a, const std::pair<double, double>& p) { return a < p.first; });
    auto hi = *it, lo = *(it - 1);
    if (hi.first == lo.first) return std::max(hi.second, lo.second);
    return lo.second + (hi.second - lo.second) * (u - lo.first) / (hi.first - lo.first);
}

// Antiderivative of ln|x| taken twice.
double twice_integrated_log(double x)
{
    if (x == 0.0) return 0.0;
    return x * x * std::log(std::abs(x)) / 2 - 0.75 * x * x;
}

}  // namespace

RotatedPoint RotatedPoint::from_xy(double x, double y)
{
    return {(x - y) / kSqrt2, (x + y) / kSqrt2};
}

std::pair<double, double> RotatedPoint::to_xy() const
{
    return {(u + v) / kSqrt2, (v - u) / kSqrt2};
}

double entropy(double alpha)
{
    require_unit(alpha, "alpha");
    alpha = clamp_unit(alpha);
    auto term = [](double a) { return a > 0 ? -a * std::log(a) : 0.0; };
    return term(alpha) + term(1 - alpha);
}

double gluing_radius(double alpha)
{
    require_unit(alpha, "alpha");
    alpha = clamp_unit(alpha);
    return std::sqrt(2 * alpha * (1 - alpha));
}

double g_tilde(double alpha, double u)
{
    require_unit(alpha, "alpha");
    if (!(std::abs(u) <= kHalfDiagonal + kSlack)) fail(ErrorKind::OutOfRange, "u outside [-sqrt2/2, sqrt2/2]");
    alpha = clamp_unit(alpha);
    if (alpha == 0.0) return std::abs(u);
    if (alpha == 1.0) return kSqrt2 - std::abs(u);
    if (alpha == 0.5) return kHalfDiagonal;
    if (alpha > 0.5) return kSqrt2 - lower_curve(1 - alpha, u);
    return lower_curve(alpha, u);
}

double surface_L(double x, double y)
{
    if (!(x >= -kSlack && y <= 1 + kSlack && x <= y + kSlack))
        fail(ErrorKind::OutOfDomain, "need 0 <= x <= y <= 1");
    x = clamp_unit(x);
    y = clamp_unit(y);
    if (x > y) x = y;
    // x = 0 is the edge v = |u|, y = 1 the edge v = sqrt2 - |u|.
    double d = y - x;
    if (x <= 1e-15) return detach_low(d);
    if (1 - y <= 1e-15) return detach_high(d);
    auto [u, v] = RotatedPoint::from_xy(x, y);
    double lo = detach_low(d), hi = detach_high(d);
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = (lo + hi) / 2;
        if (g_tilde(mid, u) < v)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

double first_row_limit(double y)
{
    require_unit(y, "y");
    y = clamp_unit(y);
    return (1 - std::sqrt(1 - y * y)) / 2;
}

double limit_trajectory(double beta, double alpha)
{
    require_unit(beta, "beta");
    require_unit(alpha, "alpha");
    beta = clamp_unit(beta);
    alpha = clamp_unit(alpha);
    double start = (1 - std::sqrt(1 - beta * beta)) / 2;
    double finish = (1 + std::sqrt(2 * beta - beta * beta)) / 2;
    if (alpha <= start) return beta;
    if (alpha >= finish) return 1 - beta;
    // Walk along y = beta from x = 0 to the diagonal, then up x = beta.
    auto point = [beta](double s) { return s <= beta ? std::pair{s, beta} : std::pair{beta, s}; };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = (lo + hi) / 2;
        auto [x, y] = point(mid);
        if (surface_L(x, y) < alpha)
            lo = mid;
        else
            hi = mid;
    }
    double s = (lo + hi) / 2;
    return std::abs(s - beta);
}

double first_element_limit_trajectory(double alpha)
{
    require_unit(alpha, "alpha");
    alpha = clamp_unit(alpha);
    return alpha <= 0.5 ? 2 * std::sqrt(alpha - alpha * alpha) : 1.0;
}

double intermediate_limit_curve(double alpha, double y)
{
    require_unit(alpha, "alpha");
    require_unit(y, "y");
    y = clamp_unit(y);
    double u = -y / kSqrt2;
    return (g_tilde(alpha, std::max(u, -kHalfDiagonal)) + u) / kSqrt2;
}

double conjectured_adjacency_profile(double alpha)
{
    require_unit(alpha, "alpha");
    alpha = clamp_unit(alpha);
    return alpha <= 0.5 ? std::sqrt(alpha / 2) : 1 - std::sqrt((1 - alpha) / 2);
}

AdmissibleCurve AdmissibleCurve::sample(const std::function<double(double)>& f, int cells)
{
    if (cells < 2 || cells % 2 != 0) fail(ErrorKind::OutOfRange, "need an even number of cells");
    AdmissibleCurve c;
    c.u.resize(static_cast<std::size_t>(cells) + 1);
    c.value.resize(c.u.size());
    for (int i = 0; i <= cells; ++i) {
        double at = i == cells / 2 ? 0.0 : -kHalfDiagonal + kSqrt2 * i / cells;
        c.u[static_cast<std::size_t>(i)] = at;
        c.value[static_cast<std::size_t>(i)] = f(at);
    }
    return c;
}

AdmissibleCurve AdmissibleCurve::limit(double alpha, int cells)
{
    return sample([alpha](double at) { return g_tilde(alpha, at); }, cells);
}

double AdmissibleCurve::operator()(double at) const
{
    if (at <= u.front()) return value.front();
    if (at >= u.back()) return value.back();
    auto it = std::upper_bound(u.begin(), u.end(), at);
    auto i = static_cast<std::size_t>(it - u.begin());
    double t = (at - u[i - 1]) / (u[i] - u[i - 1]);
    return value[i - 1] + t * (value[i] - value[i - 1]);
}

double AdmissibleCurve::area() const
{
    double total = 0.0;
    for (std::size_t i = 1; i < u.size(); ++i) total += (u[i] - u[i - 1]) * (value[i] + value[i - 1]) / 2;
    // The grid straddles 0, so the integral of |u| is (a^2 + b^2) / 2.
    double a = u.front(), b = u.back();
    return total - (a * a + b * b) / 2;
}

double AdmissibleCurve::max_slope() const
{
    double m = 0.0;
    for (std::size_t i = 1; i < u.size(); ++i)
        m = std::max(m, std::abs((value[i] - value[i - 1]) / (u[i] - u[i - 1])));
    return m;
}

double energy_K(const AdmissibleCurve& g)
{
    std::size_t cells = g.u.size() - 1;
    if (g.u.size() < 2) fail(ErrorKind::OutOfRange, "curve needs at least one cell");
    double h = (g.u.back() - g.u.front()) / static_cast<double>(cells);
    std::vector<double> slope(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        slope[i] = (g.value[i + 1] - g.value[i]) / (g.u[i + 1] - g.u[i]);
        if (std::abs(slope[i]) > 1 + 1e-9)
            fail(ErrorKind::NotLipschitz, "slope " + std::to_string(slope[i]) + " on cell " + std::to_string(i));
    }
    // Cells at offset k share the same integral of ln|s - t|.
    double total = 0.0;
    for (std::size_t k = 0; k < cells; ++k) {
        double kh = static_cast<double>(k) * h;
        double cell = twice_integrated_log(kh + h) + twice_integrated_log(kh - h) - 2 * twice_integrated_log(kh);
        double corr = 0.0;
        for (std::size_t i = 0; i + k < cells; ++i) corr += slope[i] * slope[i + k];
        total += (k == 0 ? 1.0 : 2.0) * cell * corr;
    }
    return -total / 2;
}

DiagramProfile::DiagramProfile(Partition p, int n) : p_(std::move(p)), n_(n)
{
    if (n < 2 || p_.part(1) > n - 1) fail(ErrorKind::OutOfRange, "partition does not fit order " + std::to_string(n));
    double scale = kSqrt2 * (n - 1);
    auto rotate = [scale](int X, int Y) { return std::pair{(X - Y) / scale, (X + Y) / scale}; };
    auto push = [](std::vector<std::pair<double, double>>& out, std::pair<double, double> pt) {
        if (out.empty() || out.back() != pt) out.push_back(pt);
    };
    int rows = p_.length();
    push(g_vertices_, rotate(0, p_.part(1)));
    for (int i = 1; i <= rows; ++i) {
        push(g_vertices_, rotate(i, p_.part(i)));
        push(g_vertices_, rotate(i, p_.part(i + 1)));
    }
    if (p_.is_strict()) {
        push(shifted_vertices_, rotate(0, p_.part(1)));
        for (int i = 1; i <= rows; ++i) {
            push(shifted_vertices_, rotate(i, i - 1 + p_.part(i)));
            push(shifted_vertices_, rotate(i, i < rows ? i + p_.part(i + 1) : i));
        }
    }
}

double DiagramProfile::gamma(double x) const
{
    if (!(x > 0)) fail(ErrorKind::OutOfRange, "gamma is defined for x > 0");
    int row = static_cast<int>(std::ceil((n_ - 1) * x - 1e-12));
    return static_cast<double>(p_.part(std::max(row, 1))) / (n_ - 1);
}

double DiagramProfile::g(double u) const
{
    return interpolate(g_vertices_, u);
}

double DiagramProfile::shifted_g(double u) const
{
    if (!p_.is_strict()) fail(ErrorKind::ShiftedOfNonStrict, "no shifted diagram for " + p_.to_string());
    if (u > kSlack) fail(ErrorKind::OutOfRange, "shifted profile is defined for u <= 0");
    return interpolate(shifted_vertices_, std::min(u, 0.0));
}

double DiagramProfile::area() const
{
    double total = 0.0;
    for (std::size_t i = 1; i < g_vertices_.size(); ++i) {
        auto [a, fa] = g_vertices_[i - 1];
        auto [b, fb] = g_vertices_[i];
        total += (b - a) * (fa + fb) / 2;
    }
    double a = g_vertices_.front().first, b = g_vertices_.back().first;
    return total - (a * a + b * b) / 2;
}

AdmissibleCurve DiagramProfile::admissible(double alpha, int cells) const
{
    auto curve = AdmissibleCurve::sample([this](double at) { return g(at); }, cells);
    double excess = curve.area();
    if (excess > 0) {
        double factor = alpha / excess;
        for (std::size_t i = 0; i < curve.u.size(); ++i) {
            double base = std::abs(curve.u[i]);
            curve.value[i] = base + factor * (curve.value[i] - base);
        }
    }
    return curve;
}

}  // namespace staircase
