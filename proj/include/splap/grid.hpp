#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "splap/families.hpp"

// Uniform 1-D mesh on (0, length) with homogeneous Dirichlet boundary and
// the finite-volume operators built on it. Nodal unknowns live at interior
// nodes; gradients and fluxes live on the n_cells edges in between
// (boundary edges included, with ghost value 0 outside).

namespace splap {

struct Grid {
    double length = 1.0;
    int n_cells = 2;
    double spacing = 0.5;   // length / n_cells
    int n_interior = 1;     // n_cells - 1
};

Grid build_grid(double length, int n_cells);

// Interior nodal values of u at one time instant; boundary values are 0.
struct Field {
    std::vector<double> v;

    Field() = default;
    explicit Field(std::size_t n, double fill = 0.0) : v(n, fill) {}
    Field(std::initializer_list<double> init) : v(init) {}

    std::size_t size() const { return v.size(); }
    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const Field&) const = default;
};

// One value per edge, left to right; size n_cells.
struct EdgeField {
    std::vector<double> v;

    EdgeField() = default;
    explicit EdgeField(std::size_t n, double fill = 0.0) : v(n, fill) {}
    EdgeField(std::initializer_list<double> init) : v(init) {}

    std::size_t size() const { return v.size(); }
    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const EdgeField&) const = default;
};

// |x|^p with exact fast paths for p in {2,3,4}.
inline double abs_power(double x, double p) {
    if (p == 2.0) return x * x;
    if (p == 3.0) return std::fabs(x) * x * x;
    if (p == 4.0) return (x * x) * (x * x);
    return std::pow(std::fabs(x), p);
}

// |g|^{p-2} g; zero at g = 0 for every p >= 2.
inline double signed_power(double g, double p) {
    if (p == 2.0) return g;
    if (p == 3.0) return std::fabs(g) * g;
    if (p == 4.0) return (g * g) * g;
    return g == 0.0 ? 0.0 : std::pow(std::fabs(g), p - 2.0) * g;
}

// Forward difference of u across each edge, Dirichlet ghosts on both ends.
EdgeField gradient_edges(const Field& u, const Grid& g);

// Entrywise |g|^{p-2} g. Requires p >= 2.
EdgeField p_flux(const EdgeField& grad, double p);

// Interior divergence: node i gets (F_i - F_{i-1}) / spacing.
Field divergence(const EdgeField& flux, const Grid& g);

// f(u) averaged onto edges, boundary value f(0) = 0.
EdgeField edge_average_flux(const Field& u, const FluxFamily& f, const Grid& g);

// divergence(edge_average_flux(u)).
Field flux_divergence_f(const Field& u, const FluxFamily& f, const Grid& g);

struct Norms {
    double l1 = 0.0;
    double l2 = 0.0;
    double w1p = 0.0;  // seminorm (h sum_e |grad_e|^p)^{1/p}
};

Norms norms(const Field& u, const Grid& g, double p);

double l1_norm(const Field& u, const Grid& g);
double l2_norm(const Field& u, const Grid& g);
double w1p_seminorm(const Field& u, const Grid& g, double p);

double l2_distance(const Field& a, const Field& b, const Grid& g);
double l1_distance(const Field& a, const Field& b, const Grid& g);

// h * sum_i a_i b_i, the discrete L2 inner product.
double inner_product(const Field& a, const Field& b, const Grid& g);

}  // namespace splap
