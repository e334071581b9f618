#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ellgen/root_series.hpp"

namespace ellgen {

enum class ThetaKind { Theta, Theta1, Theta2 };

enum class GenusKind { AHat, LHat, Ell1, Ell2, Witten };

std::string_view to_string(GenusKind kind);
std::optional<GenusKind> parse_genus_kind(std::string_view name);

/// Default x-truncation for a 4n-manifold: enough to reach x^{2n}.
inline int default_xdeg(int n) { return 2 * n + 2; }

/// Per-root factor of a theta quotient, written in x = 2 pi sqrt(-1) v:
///
///   Theta:  (x/2)/sinh(x/2) * prod_m (1-q^m)^2 / ((1-q^m e^x)(1-q^m e^-x))
///   Theta1: cosh(x/2)       * prod_m (1+q^m e^x)(1+q^m e^-x) / (1+q^m)^2
///   Theta2:                   prod_m (1-q^(m-1/2) e^x)(1-q^(m-1/2) e^-x) / (1-q^(m-1/2))^2
///
/// The q^(1/8) and (1-q^j) prefactors cancel in the normalized ratio and are
/// never formed. Every factor is even in x and equals 1 at x = 0.
RootSeries theta_factor(ThetaKind kind, int xdeg, int uorder);

/// Per-root characteristic factor of each genus. Ell1 carries the factor 2
/// per root so that 2n roots reproduce the global 2^{2n}.
RootSeries genus_root_series(GenusKind kind, int xdeg, int uorder);

// Rational x-series building blocks (u-constant).
RootSeries cosh_series(const Rat& scale, int xdeg, int uorder);
RootSeries sinh_over_x_series(const Rat& scale, int xdeg, int uorder);  // sinh(s x)/(s x)
RootSeries ahat_root(int xdeg, int uorder);                              // (x/2)/sinh(x/2)
RootSeries lhat_root(int xdeg, int uorder);                              // x/tanh(x/2)

}  // namespace ellgen
