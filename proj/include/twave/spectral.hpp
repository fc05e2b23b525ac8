#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "twave/field.hpp"

namespace twave {

/// Half spectrum (N/2+1 coefficients, index m <-> k = m*pi/l) of a real field,
/// unnormalized: F_m = sum_j f_j exp(-i k_m (x_j + l)).
using Spectrum = std::vector<std::complex<double>>;

enum class ExecPolicy { Serial, Parallel };

Spectrum forward(const RealPeriodicField& f);
RealPeriodicField inverse(const Grid& grid, const Spectrum& spec);

/// Multiply mode m by symbol[m] (size N/2+1). The Nyquist coefficient is
/// multiplied by Re(symbol) only, so odd symbols such as ik zero it and the
/// result stays real.
RealPeriodicField apply_symbol(const RealPeriodicField& f, const Spectrum& symbol);
/// Same, with the symbol given as a function of the wavenumber k >= 0.
RealPeriodicField apply_symbol(const RealPeriodicField& f,
                               const std::function<std::complex<double>(double)>& symbol);

/// d^order f / dx^order. Throws ParameterError for order < 1.
RealPeriodicField derivative(const RealPeriodicField& f, int order = 1);

/// Q = (1 - d^2)^{-1}: symbol 1/(1+k^2)
RealPeriodicField apply_Q(const RealPeriodicField& f);
/// L = -d^2 Q: symbol k^2/(1+k^2)
RealPeriodicField apply_L(const RealPeriodicField& f);
/// N = d Q: symbol ik/(1+k^2)
RealPeriodicField apply_N(const RealPeriodicField& f);
/// J = 1 - d^2 = Q^{-1}: symbol 1+k^2
RealPeriodicField apply_J(const RealPeriodicField& f);

/// Q f as a periodic convolution with G(x) = cosh(l - |x|)/(2 sinh l).
/// The kernel has a corner at x = 0, so the trapezoidal sum is corrected by
/// the full Euler-Maclaurin endpoint series, with the even derivatives of f
/// taken from the dense differentiation matrix of its trigonometric
/// interpolant (no FFT). O(N^2) per retained term; the Parallel policy splits
/// the output nodes across OpenMP threads.
RealPeriodicField helmholtz_kernel(const RealPeriodicField& f,
                                   ExecPolicy policy = ExecPolicy::Parallel);

/// B_{2j}/(2j)! for j = 1..count: 1/12, -1/720, 1/30240, ...
std::vector<double> euler_maclaurin_weights(int count);

/// Pointwise product a*b; with dealias, both factors and the product are
/// truncated to |m| <= N/3 (2/3 rule).
RealPeriodicField product(const RealPeriodicField& a, const RealPeriodicField& b, bool dealias);

/// Zero every mode with |m| > N/3.
RealPeriodicField dealias(const RealPeriodicField& f);

/// [L, Nh]h = L((Nh) h) - (Nh)(Lh)
RealPeriodicField commutator_LN(const RealPeriodicField& h, bool dealias_products = false);

/// Samples of f(x - shift) by spectral phase rotation.
RealPeriodicField spectral_shift(const RealPeriodicField& f, double shift);

/// Discrete L^2 inner product with uniform weight 2l/N.
double inner_product(const RealPeriodicField& f, const RealPeriodicField& g);

/// Trigonometric interpolant of f (and its derivatives) at an arbitrary x.
/// Returns {f(x), f'(x), ..., f^(orders)(x)}.
std::vector<double> evaluate_interpolant(const RealPeriodicField& f, double x, int orders = 0);

}  // namespace twave
