#include "bubble/random_families.hpp"

#include <algorithm>

namespace bubble {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

GaussianRational pool_value(std::mt19937_64& rng) {
  static const GaussianRational pool[] = {
      GaussianRational(0),
      GaussianRational(0),
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational(2),
      GaussianRational(-3),
      GaussianRational(Rational(1, 2)),
      GaussianRational(Rational(-1, 3)),
      GaussianRational(Rational(0), Rational(1)),
      GaussianRational(Rational(1), Rational(-2)),
  };
  return pool[uniform(rng, 0, std::size(pool) - 1)];
}

}  // namespace

ak::BranchConfig random_branch_config(std::mt19937_64& rng, const RandomBranchOptions& options) {
  for (;;) {
    const std::size_t k = uniform(rng, 1, options.max_k);
    const std::size_t deg = uniform(rng, 1, options.max_degree);
    std::vector<std::vector<GaussianRational>> coeffs;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<GaussianRational> c(deg + 1);
      std::size_t shared = 0;
      std::size_t parent = 0;
      if (j > 0) {
        parent = uniform(rng, 0, j - 1);
        shared = uniform(rng, 0, deg);
      }
      for (std::size_t e = 1; e <= deg; ++e) {
        c[e] = e <= shared ? coeffs[parent][e] : pool_value(rng);
      }
      coeffs.push_back(std::move(c));
    }
    std::vector<Poly> branches;
    Poly sum;
    for (auto& c : coeffs) {
      branches.emplace_back(c);
      sum += branches.back();
    }
    branches.push_back(-sum);
    try {
      return ak::BranchConfig::make(std::move(branches));
    } catch (const Error&) {
      // rejected; draw again
    }
  }
}

FamilyInput random_valid_family(std::mt19937_64& rng, const RootSystemPtr& system,
                                const RandomFamilyOptions& options) {
  const std::size_t n = system->rank();
  std::vector<Root> positive;
  for (const auto& r : system->roots()) {
    if (*std::find_if(r.begin(), r.end(), [](long x) { return x != 0; }) > 0) positive.push_back(r);
  }
  for (;;) {
    const std::size_t deg = uniform(rng, 1, options.max_degree);
    std::vector<Root> chosen;
    const std::size_t count = uniform(rng, 0, n);
    for (std::size_t i = 0; i < count; ++i) chosen.push_back(positive[uniform(rng, 0, positive.size() - 1)]);

    PolyVector zeta(n);
    const std::size_t first = uniform(rng, 1, 2);
    for (std::size_t e = first; e <= first + deg; ++e) {
      std::vector<Root> members;
      for (const auto& r : chosen) {
        members.push_back(r);
        Root neg = r;
        for (auto& x : neg) x = -x;
        members.push_back(std::move(neg));
      }
      const IntMatrix lattice = invariant_sublattice(RootSet::from(system, members), n);
      ScalarVector v(n);
      for (const auto& basis_vector : lattice) {
        const GaussianRational c = pool_value(rng);
        for (std::size_t a = 0; a < n; ++a) v[a] += c * Rational(basis_vector[a]);
      }
      for (std::size_t a = 0; a < n; ++a) zeta[a] += Poly::monomial(v[a], e);
      // shrink the perpendicular set so deeper terms resolve the singular points
      if (!chosen.empty()) chosen.resize(uniform(rng, 0, chosen.size() - 1));
    }
    try {
      return validate_family(FamilyInput{system, std::move(zeta)});
    } catch (const Error&) {
      // rejected; draw again
    }
  }
}

}  // namespace bubble
