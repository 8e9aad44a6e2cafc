#include "bubble/ak.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bubble::ak {

BranchConfig BranchConfig::make(std::vector<Poly> branches, bool recenter) {
  if (branches.size() < 2) throw Error(ErrorCode::InvalidInput, "at least two branches are required");
  Poly sum;
  for (const auto& b : branches) sum += b;
  if (recenter && !sum.is_zero()) {
    const Rational n(static_cast<long>(branches.size()));
    const Poly mean = sum * n.inverse();
    for (auto& b : branches) b -= mean;
    sum = Poly();
  }
  if (!sum.is_zero()) {
    throw Error(ErrorCode::BranchSumNonzero, "branches do not sum to zero (sum = " + sum.to_string() + ")");
  }
  for (std::size_t j = 0; j < branches.size(); ++j) {
    if (!branches[j].coeff(0).is_zero()) {
      throw Error(ErrorCode::BranchNotVanishing, "branch " + std::to_string(j) + " does not vanish at t=0");
    }
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (branches[i] == branches[j]) {
        throw Error(ErrorCode::BranchesNotDistinct,
                    "branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  return BranchConfig(std::move(branches));
}

std::vector<Poly> branch_values(const PolyVector& zeta) {
  const std::size_t k = zeta.size();
  auto a = [&](std::size_t j) { return (j == 0 || j > k) ? Poly() : zeta[j - 1]; };
  std::vector<Poly> b;
  b.reserve(k + 1);
  for (std::size_t m = 0; m <= k; ++m) b.push_back(a(m + 1) - a(m));
  return b;
}

BranchConfig to_branches(const PolyVector& zeta, const RootSystem& system) {
  if (system.ade().family != Family::A) {
    throw Error(ErrorCode::NotTypeA, "branch translation needs an A-type system, got " + system.ade().to_string());
  }
  if (zeta.size() != system.rank()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  return BranchConfig::make(branch_values(zeta));
}

PolyVector from_branches(const std::vector<Poly>& branches) {
  Poly sum;
  for (const auto& b : branches) sum += b;
  if (!sum.is_zero()) throw Error(ErrorCode::BranchSumNonzero, "branches do not sum to zero");
  PolyVector a;
  Poly partial;
  for (std::size_t j = 0; j + 1 < branches.size(); ++j) {
    partial += branches[j];
    a.push_back(partial);
  }
  return a;
}

std::vector<Poly> symmetrize(const std::vector<Poly>& branches) {
  // desc[i] is the coefficient of z^(n - i)
  std::vector<Poly> desc{Poly(1)};
  for (const auto& b : branches) {
    std::vector<Poly> next(desc.size() + 1);
    for (std::size_t i = 0; i < desc.size(); ++i) {
      next[i] += desc[i];
      next[i + 1] -= b * desc[i];
    }
    desc = std::move(next);
  }
  return std::vector<Poly>(desc.begin() + 1, desc.end());
}

namespace {

DBSNode build_class(const std::vector<Poly>& b, std::vector<std::size_t> members) {
  Order level = kInfiniteOrder;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      level = std::min(level, (b[members[i]] - b[members[j]]).ord());
    }
  }
  if (level == kInfiniteOrder) throw Error(ErrorCode::InternalInvariant, "coincident branches in a class");
  // ~_{level+1} is an equivalence relation (ultrametric), so grouping by a representative is exact
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t m : members) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& blk) {
      return (b[m] - b[blk.front()]).ord() >= level + 1;
    });
    if (it == blocks.end()) {
      blocks.push_back({m});
    } else {
      it->push_back(m);
    }
  }
  DBSNode node;
  node.indices = std::move(members);
  node.level = level;
  for (auto& blk : blocks) {
    if (blk.size() >= 2) node.children.push_back(build_class(b, std::move(blk)));
  }
  return node;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void match(const PBTNode& p, const DBSNode& d, std::vector<std::size_t>& path, EquivalenceResult& out) {
  if (!out.mismatch.empty()) return;
  const std::vector<std::size_t> support = branch_support(p.subspace);
  if (support != d.indices) {
    out.mismatch = "PBT vertex over " + join(support) + " has no DBS counterpart " + join(d.indices);
    return;
  }
  if (p.order != d.level) {
    out.mismatch = "vertex " + join(support) + ": PBT order " + std::to_string(p.order) +
                   " != DBS level " + std::to_string(d.level);
    return;
  }
  if (p.children.size() != d.children.size()) {
    out.mismatch = "vertex " + join(support) + ": " + std::to_string(p.children.size()) +
                   " PBT children vs " + std::to_string(d.children.size()) + " DBS children";
    return;
  }
  out.bijection.push_back({path, d.indices});
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    const std::vector<std::size_t> child_support = branch_support(p.children[i].subspace);
    const auto it = std::find_if(d.children.begin(), d.children.end(),
                                 [&](const DBSNode& c) { return c.indices == child_support; });
    if (it == d.children.end()) {
      out.mismatch = "singularity over " + join(child_support) + " of vertex " + join(support) +
                     " has no matching collision class";
      return;
    }
    const AdeType expected = AdeType::make(Family::A, static_cast<int>(child_support.size()) - 1);
    if (p.singularities[i].ade != expected) {
      out.mismatch = "singularity over " + join(child_support) + " has type " +
                     p.singularities[i].ade.to_string() + ", expected " + expected.to_string();
      return;
    }
    path.push_back(i);
    match(p.children[i], *it, path, out);
    path.pop_back();
  }
}

}  // namespace

DBSNode build_dbs_tree(const BranchConfig& b) {
  std::vector<std::size_t> all(b.branches().size());
  std::iota(all.begin(), all.end(), 0);
  return build_class(b.branches(), std::move(all));
}

std::size_t node_count(const DBSNode& n) {
  std::size_t c = 1;
  for (const auto& ch : n.children) c += node_count(ch);
  return c;
}

std::vector<std::size_t> branch_support(const Root& theta) {
  const std::size_t k = theta.size();
  auto c = [&](std::size_t j) { return (j == 0 || j > k) ? 0L : theta[j - 1]; };
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= k; ++m) {
    if (c(m + 1) - c(m) != 0) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> branch_support(const SubRootSystem& s) {
  std::set<std::size_t> all;
  for (const auto& r : s.simple_base) {
    for (std::size_t m : branch_support(r)) all.insert(m);
  }
  return {all.begin(), all.end()};
}

EquivalenceResult check_equivalence(const PBTree& pbt, const DBSNode& dbs) {
  EquivalenceResult out;
  if (pbt.family.system->ade().family != Family::A) {
    out.mismatch = "PBT is not over an A-type system";
    return out;
  }
  std::vector<std::size_t> path;
  match(pbt.root, dbs, path, out);
  out.isomorphic = out.mismatch.empty();
  if (!out.isomorphic) out.bijection.clear();
  return out;
}

}  // namespace bubble::ak
