#pragma once

#include <array>
#include <string>
#include <vector>

#include "bubble/rootsys.hpp"

namespace bubble::k3 {

inline constexpr std::size_t kLatticeRank = 22;

/// Coordinate indices of the three hyperbolic planes, after the two E8 blocks.
inline constexpr std::size_t e_index(std::size_t block) { return 16 + 2 * block; }
inline constexpr std::size_t f_index(std::size_t block) { return 17 + 2 * block; }

/// L = E8(-1) + E8(-1) + U + U + U in that block order. E8 blocks use the
/// Bourbaki-labelled negated Cartan matrix; U blocks are ordered (e_i, f_i).
struct K3Lattice {
  IntMatrix gram;
  std::vector<std::string> labels;
};

K3Lattice build_k3_lattice();

/// lambda = e_1 + d f_1 and a saturated basis of its orthogonal complement.
struct PolarizedLattice {
  long d = 1;
  IntVector lambda;
  IntMatrix basis;   // 21 vectors in L coordinates
  IntMatrix gram21;  // induced form on the basis
};

PolarizedLattice polarize(long d);

enum class PeriodFailure { Isotropy, Positivity };

struct PeriodCheck {
  bool valid = false;
  GaussianRational square;        // <x, x>
  Rational hermitian_norm;        // <x, conj(x)>
  std::vector<PeriodFailure> failures;
};

std::string to_string(PeriodFailure f);

/// Checks <x,x> = 0 and <x, conj x> > 0 exactly.
PeriodCheck validate_period_point(const ScalarVector& x);

/// An ADE Cartan lattice realised inside lambda^perp by exceptional classes.
struct EmbeddedCartan {
  AdeType ade;
  IntMatrix classes;     // L coordinates, in the order supplied
  IntMatrix gram_check;  // induced Gram matrix on the classes
};

EmbeddedCartan embed_cartan(const IntMatrix& classes, const PolarizedLattice& pol);

/// Orthogonal projection of a period curve onto span(h), returned in the
/// basis of h's classes. Verifies that the residual is orthogonal to h.
PolyVector localize(const PolyVector& period, const EmbeddedCartan& h);

/// Re-expresses theta-coordinates as a vector in L.
PolyVector embed_curve(const PolyVector& theta_coords, const EmbeddedCartan& h);

/// Orthogonal projection onto span(h), as a vector in L.
PolyVector project(const PolyVector& period, const EmbeddedCartan& h);

}  // namespace bubble::k3
