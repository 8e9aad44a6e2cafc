#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bubble/rootsys.hpp"

namespace bubble {

/// A localized period curve zeta(t) in the simple-root basis of `system`.
struct FamilyInput {
  RootSystemPtr system;
  PolyVector zeta;
};

/// Why a family was rejected. `roots` lists every positive root along which
/// the general fiber stays singular (empty for the degeneracy failure).
struct FamilyDiagnostic {
  ErrorCode code;
  std::string message;
  std::vector<Root> roots;
};

class FamilyError : public Error {
 public:
  explicit FamilyError(FamilyDiagnostic d) : Error(d.code, d.message), diagnostic_(std::move(d)) {}
  const FamilyDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  FamilyDiagnostic diagnostic_;
};

/// Checks that zeta(0) = 0 and that <theta, zeta> is not identically zero for
/// any root. Throws FamilyError; returns the input unchanged on success.
FamilyInput validate_family(FamilyInput f);

/// Leading exponent k and the coefficient vector of t^k.
struct LeadingData {
  std::size_t order = 0;
  ScalarVector coefficient;
};

LeadingData leading_data(const PolyVector& zeta_proj);

/// Orthogonal projection of zeta onto span(comp.simple_base), in ambient coordinates.
PolyVector project_to_component(const PolyVector& zeta, const SubRootSystem& comp);

/// Scales v so that its first nonzero coordinate is 1.
ScalarVector normalize_projective(const ScalarVector& v);

struct PBTNode {
  ScalarVector rep;              // ambient theta-coordinates, first nonzero entry 1
  ScalarVector leading;          // unnormalized coefficient of t^order
  std::size_t order = 0;         // k_v
  Rational cumulative_exponent;  // scale c(t) = |t|^(-cumulative_exponent)
  SubRootSystem subspace;
  std::vector<SubRootSystem> singularities;
  std::vector<PBTNode> children;  // one per singularity, same order

  bool is_leaf() const { return children.empty(); }
};

struct PBTree {
  FamilyInput family;
  PBTNode root;

  std::size_t node_count() const;
  std::size_t depth() const;
};

/// Builds the period bubbling tree. Each node's singular points are the
/// irreducible components of its roots perpendicular to the leading
/// direction; each child is the leading term of the original curve projected
/// onto that component.
PBTree build_pbt(const FamilyInput& f);

struct InstantonLabel {
  AdeType ambient;
  ScalarVector rep;
  std::vector<AdeType> singularities;
  bool smooth = true;
  Rational cumulative_exponent;
};

InstantonLabel node_label(const PBTNode& n);

/// ord(<theta, zeta>) / 2: decay rate of the vanishing cycle for theta.
Rational cycle_diameter_exponent(const Root& theta, const FamilyInput& f);

struct RescaleResult {
  std::size_t order = 0;
  PolyVector rescaled;  // zeta / t^order
  std::vector<AdeType> central_fiber;
};

/// Divides out the leading power of t and reads off the singularities of the
/// central fiber of the rescaled family.
RescaleResult odaka_rescale(const FamilyInput& f);

/// AHU-style canonical encoding of the ADE-labelled tree: equal strings iff
/// the trees are isomorphic with identical ambient types, singularity types,
/// orders and exponents. When `rep_map` is set, each node's rep is passed
/// through it, renormalized, and included in the label.
std::string canonical_signature(const PBTNode& root,
                                const std::function<ScalarVector(const ScalarVector&)>& rep_map = {});

std::string to_string(const ScalarVector& v);

}  // namespace bubble
