#include "cattaneo/dirichlet.hpp"

#include "cattaneo/errors.hpp"
#include "cattaneo/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cattaneo::dirichlet {

namespace {

using cattaneo::detail::require;

void check(const CattaneoParams& p, double x) {
    require(p.alpha > 0.0 && p.alpha <= 1.0, "dirichlet: alpha must lie in (0,1]");
    require(p.lambda >= 0.0 && std::isfinite(p.lambda), "dirichlet: lambda must be >= 0");
    require(p.k >= 0.0 && std::isfinite(p.k), "dirichlet: k must be >= 0");
    require(x >= 0.0 && std::isfinite(x), "dirichlet: x must be >= 0");
}

}  // namespace

double BoundarySignal::value(double t) const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant: return 1.0;
        case Kind::exponential: return std::exp(-rate * t);
    }
    return 0.0;
}

Complex BoundarySignal::laplace(Complex s) const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant: return 1.0 / s;
        case Kind::exponential: return 1.0 / (s + rate);
    }
    return 0.0;
}

BoundarySignal BoundarySignal::parse(const std::string& name) {
    if (name == "zero") return {Kind::zero, 0.0};
    if (name == "one") return {Kind::constant, 0.0};
    if (name == "exp") return {Kind::exponential, 1.0};
    if (name.rfind("exp:", 0) == 0) {
        std::istringstream in(name.substr(4));
        double rate = 0.0;
        if (in >> rate && in.eof() && std::isfinite(rate) && rate >= 0.0) return {Kind::exponential, rate};
    }
    throw DomainError("unknown boundary signal '" + name + "' (expected zero, one, exp or exp:<rate>)");
}

std::string BoundarySignal::name() const {
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::constant: return "one";
        case Kind::exponential: {
            std::ostringstream out;
            out.precision(17);
            out << "exp:" << rate;
            return out.str();
        }
    }
    return "";
}

Complex dirichlet_laplace(const CattaneoParams& p, double x, Complex s, Complex phi_laplace) {
    check(p, x);
    if (x == 0.0) return phi_laplace;
    const Complex c = s * s + 2.0 * p.k * s + std::pow(p.lambda, p.alpha);
    const Complex e = special_fn::mittag_leffler({p.alpha, 1.0}, -c * std::pow(x, p.alpha));
    return phi_laplace * std::exp(-p.lambda * x) * e;
}

double dirichlet_special_case(const CattaneoParams& p, double x, double t, const GridFunction& phi) {
    check(p, x);
    require(p.alpha < 1.0, "dirichlet_special_case: alpha must lie in (0,1)");
    require(std::abs(p.k - std::pow(p.lambda, 0.5 * p.alpha)) <= 1e-12 * std::max(1.0, p.k),
            "dirichlet_special_case: requires k = lambda^{alpha/2}");
    require(t > 0.0 && std::isfinite(t), "dirichlet_special_case: t must be > 0");
    require(phi.size() >= 2 && phi.dx > 0.0, "dirichlet_special_case: phi needs at least two samples");
    if (x == 0.0) return phi.interpolate(t);

    const int steps = std::max(16, static_cast<int>(std::ceil(t / phi.dx - 1e-9)));
    const double h = t / steps;
    double sum = 0.0;
    // The kernel vanishes at z = 0, so the j = 0 end contributes nothing.
    for (int j = 1; j <= steps; ++j) {
        const double z = j * h;
        const double weight = j == steps ? 0.5 : 1.0;
        sum += weight * phi.interpolate(t - z) * std::exp(-p.k * z) * special_fn::dirichlet_kernel(p.alpha, x, z);
    }
    return std::exp(-p.lambda * x) * h * sum;
}

double dirichlet_solution(const CattaneoParams& p, double x, double t, const BoundarySignal& phi,
                          const InversionOptions& opts) {
    check(p, x);
    require(t > 0.0 && std::isfinite(t), "dirichlet_solution: t must be > 0");
    const auto f = [&](Complex s) { return dirichlet_laplace(p, x, s, phi.laplace(s)); };
    return transforms::laplace_invert(f, t, x == 0.0 ? opts.boundary : opts.interior);
}

}  // namespace cattaneo::dirichlet
