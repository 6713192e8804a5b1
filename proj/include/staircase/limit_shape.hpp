#ifndef STAIRCASE_LIMIT_SHAPE_HPP
#define STAIRCASE_LIMIT_SHAPE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "staircase/partition.hpp"

namespace staircase {

/// u = (x - y)/sqrt2, v = (x + y)/sqrt2.
struct RotatedPoint {
    double u = 0.0;
    double v = 0.0;

    static RotatedPoint from_xy(double x, double y);
    std::pair<double, double> to_xy() const;
};

/// -a ln a - (1-a) ln(1-a), zero at the endpoints.
double entropy(double alpha);

/// sqrt(2 alpha (1 - alpha)): where the level curve at time alpha leaves |u|.
double gluing_radius(double alpha);

/// Level curve of the limit surface at time alpha in rotated coordinates,
/// extended by |u| (alpha < 1/2) or sqrt2 - |u| (alpha > 1/2) outside the
/// gluing radius. Domain |u| <= sqrt2/2.
double g_tilde(double alpha, double u);

/// The limit surface on 0 <= x <= y <= 1: the alpha whose level curve passes
/// through (x, y). On the edges v = |u| and v = sqrt2 - |u|, where a whole
/// interval of curves meet, it is the time at which the curve detaches, so L
/// is continuous up to the boundary.
double surface_L(double x, double y);

/// L(0, y) = (1 - sqrt(1 - y^2)) / 2.
double first_row_limit(double y);

/// Scaled position at time alpha of the element starting at beta, read off
/// L along y = beta and then x = beta.
double limit_trajectory(double beta, double alpha);

/// The trajectory of the first element: 2 sqrt(alpha - alpha^2) up to 1/2,
/// then 1. Equals limit_trajectory(0, alpha).
double first_element_limit_trajectory(double alpha);

/// Boundary x(y) of the scaled Rothe diagram at time alpha.
double intermediate_limit_curve(double alpha, double y);

/// sqrt(alpha/2) below 1/2, 1 - sqrt((1 - alpha)/2) above.
double conjectured_adjacency_profile(double alpha);

/// Piecewise-linear function on an even, uniform grid over [-sqrt2/2, sqrt2/2].
struct AdmissibleCurve {
    std::vector<double> u;
    std::vector<double> value;

    static AdmissibleCurve sample(const std::function<double(double)>& f, int cells);
    static AdmissibleCurve limit(double alpha, int cells);

    double operator()(double at) const;
    /// Integral of value - |u|, exact for the interpolant.
    double area() const;
    double max_slope() const;
};

/// -1/2 double integral of g'(s) g'(t) ln|s - t|, computed cell pair by cell
/// pair from a closed antiderivative. Throws NotLipschitz.
double energy_K(const AdmissibleCurve& g);

/// Scaled boundaries of a diagram inside the order n staircase: gamma(x) is
/// the row length at x, g the ordinary diagram turned 45 degrees, G the
/// shifted diagram (domain u <= 0). Unit = 1/(n-1).
class DiagramProfile {
public:
    DiagramProfile(Partition p, int n);

    const Partition& partition() const { return p_; }
    int n() const { return n_; }

    double gamma(double x) const;
    double g(double u) const;
    double shifted_g(double u) const;

    /// Corner points (u, v) of g, left to right.
    const std::vector<std::pair<double, double>>& vertices() const { return g_vertices_; }
    const std::vector<std::pair<double, double>>& shifted_vertices() const { return shifted_vertices_; }

    /// Integral of g - |u|, exactly |p| / (n-1)^2.
    double area() const;

    /// g sampled on [-sqrt2/2, sqrt2/2] with its excess over |u| rescaled to
    /// area alpha.
    AdmissibleCurve admissible(double alpha, int cells) const;

private:
    Partition p_;
    int n_;
    std::vector<std::pair<double, double>> g_vertices_;
    std::vector<std::pair<double, double>> shifted_vertices_;
};

}  // namespace staircase

#endif  // STAIRCASE_LIMIT_SHAPE_HPP
