#ifndef SYMSPEC_GAUSS_JACOBI_HPP
#define SYMSPEC_GAUSS_JACOBI_HPP

#include <vector>

namespace symspec {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss rule for  int_0^1 x^p (1-x)^q f(x) dx,  p, q > -1.
/// Exact for polynomials f of degree <= 2n-1.  Nodes by Golub-Welsch.
QuadratureRule gauss_jacobi_unit(int n, double p, double q);

}  // namespace symspec

#endif
