#include "symspec/gauss_jacobi.hpp"

#include <Eigen/Eigenvalues>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <stdexcept>

namespace symspec {

QuadratureRule gauss_jacobi_unit(int n, double p, double q)
{
    if (n < 1)
        throw std::invalid_argument("gauss_jacobi_unit: need at least one node");
    if (!(p > -1.0) || !(q > -1.0))
        throw std::invalid_argument("gauss_jacobi_unit: exponents must exceed -1");

    // Jacobi weight (1-y)^alpha (1+y)^beta on [-1,1], y = 2x - 1
    const double alpha = q;
    const double beta = p;
    const double ab = alpha + beta;

    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        if (k == 0)
            jacobi(0, 0) = (beta - alpha) / (ab + 2.0);
        else
            jacobi(k, k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
        if (k + 1 < n) {
            const double m = k + 1.0;
            const double t = 2.0 * m + ab;
            const double num = 4.0 * m * (m + alpha) * (m + beta) * (m + ab);
            const double den = t * t * (t + 1.0) * (t - 1.0);
            const double off = std::sqrt(num / den);
            jacobi(k, k + 1) = off;
            jacobi(k + 1, k) = off;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_unit: eigen decomposition failed");

    const double mass = boost::math::beta(p + 1.0, q + 1.0);
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (solver.eigenvalues()(i) + 1.0);
        rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
    }
    return rule;
}

}  // namespace symspec
