#include "bubble/pbt.hpp"

#include <algorithm>

namespace bubble {

std::string to_string(const ScalarVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + "]";
}

namespace {

bool is_positive(const Root& r) {
  const auto it = std::find_if(r.begin(), r.end(), [](long x) { return x != 0; });
  return it != r.end() && *it > 0;
}

PBTNode build_node(const PolyVector& zeta, const PolyVector& projected, SubRootSystem subspace,
                   const Rational& parent_exponent) {
  const bool vanishes = std::all_of(projected.begin(), projected.end(),
                                    [](const Poly& p) { return p.is_zero(); });
  if (vanishes) {
    throw Error(ErrorCode::ZeroProjection,
                "insufficient data: projection vanishes identically on component " +
                    subspace.ade.to_string());
  }
  const LeadingData lead = leading_data(projected);
  PBTNode node;
  node.order = lead.order;
  node.rep = normalize_projective(lead.coefficient);
  node.leading = lead.coefficient;
  node.cumulative_exponent =
      parent_exponent + Rational(BigInt(static_cast<long>(lead.order)), BigInt(2));
  const RootSet perp = perp_roots(subspace.as_root_set(), node.rep);
  node.subspace = std::move(subspace);
  node.singularities = irreducible_components(perp);
  node.children.reserve(node.singularities.size());
  for (const auto& comp : node.singularities) {
    node.children.push_back(
        build_node(zeta, project_to_component(zeta, comp), comp, node.cumulative_exponent));
  }
  return node;
}

std::size_t count_nodes(const PBTNode& n) {
  std::size_t c = 1;
  for (const auto& ch : n.children) c += count_nodes(ch);
  return c;
}

std::size_t node_depth(const PBTNode& n) {
  std::size_t d = 0;
  for (const auto& ch : n.children) d = std::max(d, node_depth(ch));
  return d + 1;
}

std::vector<AdeType> types_of(const std::vector<SubRootSystem>& comps) {
  std::vector<AdeType> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.ade);
  return out;
}

}  // namespace

FamilyInput validate_family(FamilyInput f) {
  if (!f.system) throw Error(ErrorCode::InvalidInput, "family has no root system");
  if (f.zeta.size() != f.system->rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                "zeta has " + std::to_string(f.zeta.size()) + " coordinates, expected " +
                    std::to_string(f.system->rank()));
  }
  for (const auto& p : f.zeta) {
    if (!p.coeff(0).is_zero()) {
      throw FamilyError({ErrorCode::NotDegenerate, "family does not degenerate at t=0", {}});
    }
  }
  std::vector<Root> bad;
  for (const auto& r : f.system->roots()) {
    if (is_positive(r) && pairing(r, f.zeta, f.system->gram()).is_zero()) bad.push_back(r);
  }
  if (!bad.empty()) {
    std::string msg = "general fiber singular along root";
    for (const auto& r : bad) msg += " " + to_string(r);
    throw FamilyError({ErrorCode::SingularGeneralFiber, msg, std::move(bad)});
  }
  return f;
}

LeadingData leading_data(const PolyVector& zeta_proj) {
  Order k = kInfiniteOrder;
  for (const auto& p : zeta_proj) k = std::min(k, p.ord());
  if (k == kInfiniteOrder) throw Error(ErrorCode::ZeroProjection, "projection vanishes identically");
  LeadingData d;
  d.order = k;
  d.coefficient.reserve(zeta_proj.size());
  for (const auto& p : zeta_proj) d.coefficient.push_back(p.coeff(k));
  return d;
}

PolyVector project_to_component(const PolyVector& zeta, const SubRootSystem& comp) {
  const IntMatrix& gram = comp.ambient->gram();
  const std::size_t m = comp.simple_base.size();
  PolyVector rhs;
  rhs.reserve(m);
  for (const auto& b : comp.simple_base) rhs.push_back(pairing(b, zeta, gram));
  const RationalMatrix inv = linalg::inverse(comp.base_gram());
  PolyVector out(zeta.size());
  for (std::size_t i = 0; i < m; ++i) {
    Poly c;
    for (std::size_t j = 0; j < m; ++j) {
      if (!inv[i][j].is_zero()) c += rhs[j] * inv[i][j];
    }
    if (c.is_zero()) continue;
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (comp.simple_base[i][a] != 0) out[a] += c * Rational(comp.simple_base[i][a]);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (pairing(comp.simple_base[i], out, gram) != rhs[i]) {
      throw Error(ErrorCode::InternalInvariant, "projection residual is not orthogonal to component");
    }
  }
  return out;
}

ScalarVector normalize_projective(const ScalarVector& v) {
  const auto it = std::find_if(v.begin(), v.end(), [](const GaussianRational& c) { return !c.is_zero(); });
  if (it == v.end()) throw Error(ErrorCode::InternalInvariant, "cannot normalize the zero vector");
  const GaussianRational inv = it->inverse();
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c * inv);
  return out;
}

std::size_t PBTree::node_count() const { return count_nodes(root); }
std::size_t PBTree::depth() const { return node_depth(root); }

PBTree build_pbt(const FamilyInput& f) {
  PBTree tree{f, {}};
  tree.root = build_node(f.zeta, f.zeta, SubRootSystem::whole(f.system), Rational(0));
  return tree;
}

InstantonLabel node_label(const PBTNode& n) {
  InstantonLabel l;
  l.ambient = n.subspace.ade;
  l.rep = n.rep;
  l.singularities = types_of(n.singularities);
  l.smooth = n.singularities.empty();
  l.cumulative_exponent = n.cumulative_exponent;
  return l;
}

Rational cycle_diameter_exponent(const Root& theta, const FamilyInput& f) {
  if (!f.system->is_root(theta)) {
    throw Error(ErrorCode::InvalidInput, to_string(theta) + " is not a root");
  }
  const Poly a = pairing(theta, f.zeta, f.system->gram());
  if (a.is_zero()) {
    throw Error(ErrorCode::SingularGeneralFiber,
                "general fiber singular along root " + to_string(theta));
  }
  return Rational(BigInt(static_cast<long>(a.ord())), BigInt(2));
}

RescaleResult odaka_rescale(const FamilyInput& f) {
  const FamilyInput valid = validate_family(f);
  const LeadingData lead = leading_data(valid.zeta);
  RescaleResult r;
  r.order = lead.order;
  r.rescaled.reserve(valid.zeta.size());
  for (const auto& p : valid.zeta) r.rescaled.push_back(p.divide_by_t_power(lead.order));
  r.central_fiber = types_of(irreducible_components(perp_roots(valid.system, lead.coefficient)));
  return r;
}

std::string canonical_signature(const PBTNode& root,
                                const std::function<ScalarVector(const ScalarVector&)>& rep_map) {
  std::vector<std::string> sings;
  for (const auto& s : root.singularities) sings.push_back(s.ade.to_string());
  std::sort(sings.begin(), sings.end());
  std::string label = root.subspace.ade.to_string() + "|k=" + std::to_string(root.order) +
                      "|e=" + root.cumulative_exponent.to_string() + "|s=";
  for (std::size_t i = 0; i < sings.size(); ++i) label += (i ? "," : "") + sings[i];
  label += "|r=" + to_string(normalize_projective(rep_map ? rep_map(root.rep) : root.rep));
  std::vector<std::string> kids;
  for (const auto& c : root.children) kids.push_back(canonical_signature(c, rep_map));
  std::sort(kids.begin(), kids.end());
  label += "(";
  for (const auto& k : kids) label += k;
  return label + ")";
}

}  // namespace bubble
