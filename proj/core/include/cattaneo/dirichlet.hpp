#pragma once

#include "cattaneo/analytic.hpp"
#include "cattaneo/grid_function.hpp"
#include "cattaneo/laplace.hpp"

#include <string>

namespace cattaneo::dirichlet {

/// Boundary signal phi(t) at x = 0 with a known Laplace transform.
struct BoundarySignal {
    enum class Kind { zero, constant, exponential };
    Kind kind = Kind::constant;
    double rate = 1.0;  ///< a in e^{-a t}

    double value(double t) const;
    Complex laplace(Complex s) const;

    /// "zero", "one", "exp" (rate 1) or "exp:<a>". Throws DomainError otherwise.
    static BoundarySignal parse(const std::string& name);
    std::string name() const;
};

/// Laplace transform in t of the half-line solution:
/// phi~(s) e^{-lambda x} E_alpha(-(s^2 + 2ks + lambda^alpha) x^alpha).
///
/// Applying the shifted Caputo operator in x to this expression returns
/// -(s^2 + 2ks + lambda^alpha) times it.
Complex dirichlet_laplace(const CattaneoParams& p, double x, Complex s, Complex phi_laplace);

/// u(x,t) for k = lambda^{alpha/2} as the convolution
/// e^{-lambda x} int_0^t phi(t - z) e^{-k z} K(x, z) dz
/// with K = special_fn::dirichlet_kernel, by the trapezoidal rule on a step
/// no coarser than phi.dx. phi must cover [0, t]. At x = 0 the kernel
/// degenerates and the boundary value phi(t) is returned.
double dirichlet_special_case(const CattaneoParams& p, double x, double t, const GridFunction& phi);

struct InversionOptions {
    /// Used at x = 0, where the transform is phi~(s).
    transforms::LaplaceInverterConfig boundary{};
    /// Used for x > 0. The transform grows along vertical lines there, so
    /// only real-axis sampling applies.
    transforms::LaplaceInverterConfig interior = [] {
        transforms::LaplaceInverterConfig c;
        c.method = transforms::InversionMethod::stehfest;
        c.stehfest_order = 18;
        c.rtol = 1e-3;
        c.atol = 1e-10;
        return c;
    }();
};

/// u(x,t) by numerical inversion of dirichlet_laplace.
double dirichlet_solution(const CattaneoParams& p, double x, double t, const BoundarySignal& phi,
                          const InversionOptions& opts = {});

}  // namespace cattaneo::dirichlet
