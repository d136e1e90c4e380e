#ifndef RACELINE_GAUSS_LEGENDRE_HPP
#define RACELINE_GAUSS_LEGENDRE_HPP

#include <vector>

namespace raceline {

// Collocation basis for one interval, parameterized by tau in [0, 1].
// States are interpolated through tau = 0 plus the d interior Gauss-Legendre
// nodes; inputs live on the interior nodes alone.
struct CollocationBasis {
    int degree = 0;
    std::vector<double> nodes;    // d interior nodes in (0, 1)
    std::vector<double> weights;  // quadrature weights, sum to 1

    // state polynomial through {0, nodes...}: (d+1) coefficients per row
    std::vector<std::vector<double>> state_deriv;  // [k][j]: l_j'(tau_k), k = 1..d
    std::vector<double> state_at_end;              // l_j(1)

    // input polynomial through {nodes...}: d coefficients per row
    std::vector<std::vector<double>> input_deriv;  // [k][j]: m_j'(tau_k)

    // dense evaluation helpers
    std::vector<double> state_basis_at(double tau) const;  // size d+1
    std::vector<double> input_basis_at(double tau) const;  // size d
};

CollocationBasis make_collocation_basis(int degree);

// Nodes and weights of the n-point rule on (0, 1).
void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace raceline

#endif  // RACELINE_GAUSS_LEGENDRE_HPP
