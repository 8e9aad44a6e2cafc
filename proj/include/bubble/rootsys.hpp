#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bubble/linalg.hpp"

namespace bubble {

enum class Family { A, D, E };

/// Dynkin type of a simply-laced irreducible root system.
struct AdeType {
  Family family = Family::A;
  int rank = 1;

  /// Validates the rank constraints (A: >= 1, D: >= 4, E: 6..8).
  static AdeType make(Family family, int rank);
  /// Parses "A3", "D5", "E8".
  static AdeType parse(const std::string& text);

  std::string to_string() const;

  friend auto operator<=>(const AdeType&, const AdeType&) = default;
};

/// Root vectors are integer coordinates in the simple-root basis theta_1..theta_n.
using Root = IntVector;

/// Negated Cartan matrix in Bourbaki labeling: -2 on the diagonal, +1 on edges.
IntMatrix negated_cartan(const AdeType& ade);

/// Total order used for bases and component lists: descending lexicographic,
/// so theta_1 precedes theta_2.
bool canonical_root_less(const Root& a, const Root& b);

struct RootSystemOptions {
  int max_a_rank = 24;
};

/// A complete ADE root system with the negative-definite convention <theta,theta> = -2.
/// Immutable; share through `RootSystemPtr`.
class RootSystem {
 public:
  explicit RootSystem(AdeType ade, const RootSystemOptions& options = {});

  const AdeType& ade() const { return ade_; }
  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  /// All roots, ascending lexicographic order on coefficient vectors.
  const std::vector<Root>& roots() const { return roots_; }
  bool is_root(const Root& v) const;
  Root simple_root(std::size_t j) const;

 private:
  AdeType ade_;
  IntMatrix gram_;
  std::vector<Root> roots_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(AdeType ade, const RootSystemOptions& options = {});

/// Finite set of roots of an ambient system, closed under negation.
struct RootSet {
  RootSystemPtr ambient;
  std::vector<Root> members;  // ascending lexicographic

  static RootSet all(const RootSystemPtr& system);
  /// Sorts, deduplicates and checks membership and negation-closure.
  static RootSet from(const RootSystemPtr& system, std::vector<Root> members);

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(const Root& r) const;
};

/// Irreducible sub-root system: a connected simple base and the roots in its span.
struct SubRootSystem {
  RootSystemPtr ambient;
  std::vector<Root> simple_base;  // canonical_root_less order
  AdeType ade;
  std::vector<Root> members;  // ascending lexicographic

  /// The whole ambient system viewed as a sub-root system.
  static SubRootSystem whole(const RootSystemPtr& system);

  std::size_t rank() const { return simple_base.size(); }
  RootSet as_root_set() const { return RootSet{ambient, members}; }
  /// Gram matrix of the simple base under the ambient form.
  IntMatrix base_gram() const;
};

long pairing(const Root& u, const Root& v, const IntMatrix& gram);
GaussianRational pairing(const Root& u, const ScalarVector& v, const IntMatrix& gram);
Poly pairing(const Root& u, const PolyVector& v, const IntMatrix& gram);
GaussianRational pairing(const ScalarVector& u, const ScalarVector& v, const IntMatrix& gram);
Poly pairing(const PolyVector& u, const PolyVector& v, const IntMatrix& gram);

/// Roots of `source` orthogonal to v (exact test).
RootSet perp_roots(const RootSet& source, const ScalarVector& v);
RootSet perp_roots(const RootSystemPtr& source, const ScalarVector& v);

/// Indecomposable positive members, positivity meaning "first nonzero coordinate > 0".
std::vector<Root> simple_base(const RootSet& rs);

/// Recognizes the Dynkin type of a connected simply-laced simple system.
AdeType classify_ade(const std::vector<Root>& base, const IntMatrix& gram);

/// Connected components of the Dynkin graph of simple_base(rs), each classified.
std::vector<SubRootSystem> irreducible_components(const RootSet& rs);

/// Weyl reflection s_theta(v) = v + <v,theta> theta.
Root reflect(const Root& theta, const Root& v, const IntMatrix& gram);
ScalarVector reflect(const Root& theta, const ScalarVector& v, const IntMatrix& gram);
PolyVector reflect(const Root& theta, const PolyVector& v, const IntMatrix& gram);

/// Saturated Z-basis of {x in Z^n : <x, theta> = 0 for all theta in rs}.
IntMatrix invariant_sublattice(const RootSet& rs, std::size_t ambient_rank);

/// Dimension of the Q-span of the members.
std::size_t span_rank(const std::vector<Root>& roots);

std::string to_string(const Root& r);

}  // namespace bubble
