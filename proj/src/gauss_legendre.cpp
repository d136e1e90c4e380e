#include "raceline/gauss_legendre.hpp"

#include <cmath>

#include "raceline/errors.hpp"

namespace raceline {

namespace {

// Legendre polynomial and derivative on [-1, 1] by recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? 1.0 : (n == 1 ? x : p1);
    dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

// Barycentric weights for a node set.
std::vector<double> bary_weights(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> w(n, 1.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) w[j] /= (x[j] - x[i]);
    return w;
}

// Derivative matrix D[k][j] = l_j'(x_k) for Lagrange basis on nodes x.
std::vector<std::vector<double>> deriv_matrix(const std::vector<double>& x) {
    const std::size_t n = x.size();
    const auto w = bary_weights(x);
    std::vector<std::vector<double>> D(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            D[k][j] = (w[j] / w[k]) / (x[k] - x[j]);
            diag -= D[k][j];
        }
        D[k][k] = diag;
    }
    return D;
}

std::vector<double> basis_at(const std::vector<double>& x, double tau) {
    const std::size_t n = x.size();
    const auto w = bary_weights(x);
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (tau == x[j]) {
            out[j] = 1.0;
            return out;
        }
    }
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) denom += w[j] / (tau - x[j]);
    for (std::size_t j = 0; j < n; ++j) out[j] = (w[j] / (tau - x[j])) / denom;
    return out;
}

}  // namespace

void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw ConfigError("quadrature needs at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton on P_n
        double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            const double dx = -p / dp;
            x += dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        nodes[i] = 0.5 * (x + 1.0);
        weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

CollocationBasis make_collocation_basis(int degree) {
    if (degree < 2 || degree > 9) throw ConfigError("collocation degree must lie in [2, 9]");
    CollocationBasis b;
    b.degree = degree;
    gauss_legendre_rule(degree, b.nodes, b.weights);

    std::vector<double> state_nodes;
    state_nodes.reserve(degree + 1);
    state_nodes.push_back(0.0);
    for (double t : b.nodes) state_nodes.push_back(t);

    const auto D = deriv_matrix(state_nodes);
    b.state_deriv.assign(degree, std::vector<double>(degree + 1, 0.0));
    for (int k = 1; k <= degree; ++k) b.state_deriv[k - 1] = D[k];
    b.state_at_end = basis_at(state_nodes, 1.0);

    b.input_deriv = deriv_matrix(b.nodes);
    return b;
}

std::vector<double> CollocationBasis::state_basis_at(double tau) const {
    std::vector<double> state_nodes;
    state_nodes.reserve(degree + 1);
    state_nodes.push_back(0.0);
    for (double t : nodes) state_nodes.push_back(t);
    return basis_at(state_nodes, tau);
}

std::vector<double> CollocationBasis::input_basis_at(double tau) const {
    return basis_at(nodes, tau);
}

}  // namespace raceline
