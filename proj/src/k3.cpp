#include "bubble/k3.hpp"

namespace bubble::k3 {

K3Lattice build_k3_lattice() {
  K3Lattice l;
  l.gram.assign(kLatticeRank, IntVector(kLatticeRank, 0));
  const IntMatrix e8 = negated_cartan(AdeType::make(Family::E, 8));
  for (std::size_t block = 0; block < 2; ++block) {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) l.gram[8 * block + i][8 * block + j] = e8[i][j];
      l.labels.push_back("E8" + std::string(block == 0 ? "a" : "b") + "_" + std::to_string(i + 1));
    }
  }
  for (std::size_t block = 0; block < 3; ++block) {
    l.gram[e_index(block)][f_index(block)] = 1;
    l.gram[f_index(block)][e_index(block)] = 1;
    l.labels.push_back("e" + std::to_string(block + 1));
    l.labels.push_back("f" + std::to_string(block + 1));
  }
  return l;
}

PolarizedLattice polarize(long d) {
  if (d <= 0) throw Error(ErrorCode::InvalidPolarization, "polarization degree must be positive");
  const K3Lattice l = build_k3_lattice();
  PolarizedLattice p;
  p.d = d;
  p.lambda.assign(kLatticeRank, 0);
  p.lambda[e_index(0)] = 1;
  p.lambda[f_index(0)] = d;
  p.basis = linalg::integer_kernel({linalg::apply(l.gram, p.lambda)}, kLatticeRank);
  const std::size_t n = p.basis.size();
  p.gram21.assign(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.gram21[i][j] = pairing(p.basis[i], p.basis[j], l.gram);
  }
  return p;
}

std::string to_string(PeriodFailure f) {
  return f == PeriodFailure::Isotropy ? "isotropy" : "positivity";
}

PeriodCheck validate_period_point(const ScalarVector& x) {
  const K3Lattice l = build_k3_lattice();
  if (x.size() != kLatticeRank) throw Error(ErrorCode::DimensionMismatch, "period point must have 22 coordinates");
  ScalarVector xbar;
  xbar.reserve(x.size());
  for (const auto& c : x) xbar.push_back(c.conj());
  PeriodCheck check;
  check.square = pairing(x, x, l.gram);
  const GaussianRational h = pairing(x, xbar, l.gram);
  if (!h.is_real()) throw Error(ErrorCode::InternalInvariant, "hermitian pairing is not real");
  check.hermitian_norm = h.re();
  if (!check.square.is_zero()) check.failures.push_back(PeriodFailure::Isotropy);
  if (check.hermitian_norm.sign() <= 0) check.failures.push_back(PeriodFailure::Positivity);
  check.valid = check.failures.empty();
  return check;
}

EmbeddedCartan embed_cartan(const IntMatrix& classes, const PolarizedLattice& pol) {
  const K3Lattice l = build_k3_lattice();
  for (const auto& c : classes) {
    if (c.size() != kLatticeRank) throw Error(ErrorCode::DimensionMismatch, "class must have 22 coordinates");
    if (pairing(c, pol.lambda, l.gram) != 0) {
      throw Error(ErrorCode::NotInPolarization, "class " + bubble::to_string(c) + " is not in lambda^perp");
    }
  }
  EmbeddedCartan h;
  h.classes = classes;
  const std::size_t m = classes.size();
  h.gram_check.assign(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) h.gram_check[i][j] = pairing(classes[i], classes[j], l.gram);
  }
  // classify the classes as a simple system in their own coordinates
  std::vector<Root> unit;
  for (std::size_t i = 0; i < m; ++i) {
    Root r(m, 0);
    r[i] = 1;
    unit.push_back(std::move(r));
  }
  try {
    h.ade = classify_ade(unit, h.gram_check);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAdeCartan,
                std::string("Gram is not a negated ADE Cartan matrix: ") + e.what());
  }
  return h;
}

PolyVector localize(const PolyVector& period, const EmbeddedCartan& h) {
  const K3Lattice l = build_k3_lattice();
  if (period.size() != kLatticeRank) throw Error(ErrorCode::DimensionMismatch, "period must have 22 coordinates");
  const std::size_t m = h.classes.size();
  PolyVector rhs;
  rhs.reserve(m);
  for (const auto& c : h.classes) rhs.push_back(pairing(c, period, l.gram));
  const RationalMatrix inv = linalg::inverse(h.gram_check);
  PolyVector coords(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!inv[i][j].is_zero()) coords[i] += rhs[j] * inv[i][j];
    }
  }
  const PolyVector residual = [&] {
    PolyVector r = embed_curve(coords, h);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = period[i] - r[i];
    return r;
  }();
  for (const auto& c : h.classes) {
    if (!pairing(c, residual, l.gram).is_zero()) {
      throw Error(ErrorCode::InternalInvariant, "localization residual is not orthogonal to h");
    }
  }
  return coords;
}

PolyVector embed_curve(const PolyVector& theta_coords, const EmbeddedCartan& h) {
  if (theta_coords.size() != h.classes.size()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  PolyVector out(kLatticeRank);
  for (std::size_t j = 0; j < h.classes.size(); ++j) {
    for (std::size_t i = 0; i < kLatticeRank; ++i) {
      if (h.classes[j][i] != 0) out[i] += theta_coords[j] * Rational(h.classes[j][i]);
    }
  }
  return out;
}

PolyVector project(const PolyVector& period, const EmbeddedCartan& h) {
  return embed_curve(localize(period, h), h);
}

}  // namespace bubble::k3
