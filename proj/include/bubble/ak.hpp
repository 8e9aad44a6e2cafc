#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubble/pbt.hpp"

namespace bubble::ak {

/// Branch points b_0..b_k of xy = prod_j (z - b_j(t)). Construct through
/// `make`, which enforces sum b_j = 0, b_j(0) = 0 and pairwise distinctness.
class BranchConfig {
 public:
  static BranchConfig make(std::vector<Poly> branches, bool recenter = false);

  std::size_t k() const { return branches_.size() - 1; }
  const std::vector<Poly>& branches() const { return branches_; }

 private:
  explicit BranchConfig(std::vector<Poly> b) : branches_(std::move(b)) {}
  std::vector<Poly> branches_;
};

/// Branch values b_m = a_{m+1} - a_m (0-based m, a_0 = a_{k+1} = 0), unvalidated.
std::vector<Poly> branch_values(const PolyVector& zeta);

/// Translation sum a_j theta_j -> sum a_j (e_j - e_{j+1}), validated.
BranchConfig to_branches(const PolyVector& zeta, const RootSystem& system);

/// Partial sums a_j = b_0 + ... + b_{j-1}; requires sum b = 0.
PolyVector from_branches(const std::vector<Poly>& branches);
inline PolyVector from_branches(const BranchConfig& b) { return from_branches(b.branches()); }

/// alpha_1..alpha_{k+1} with prod_j (z - b_j) = z^{k+1} + alpha_1 z^k + ... + alpha_{k+1}.
std::vector<Poly> symmetrize(const std::vector<Poly>& branches);
inline std::vector<Poly> symmetrize(const BranchConfig& b) { return symmetrize(b.branches()); }

struct DBSNode {
  std::vector<std::size_t> indices;  // ascending, size >= 2
  std::size_t level = 0;             // finest n with all members pairwise ~_n
  std::vector<DBSNode> children;
};

/// Collision tree: classes under ord(b_i - b_j) >= n, singletons dropped,
/// one-child chains contracted to their deepest level.
DBSNode build_dbs_tree(const BranchConfig& b);

std::size_t node_count(const DBSNode& n);

/// e-index support of an A_k root given in theta-coordinates (0-based branches).
std::vector<std::size_t> branch_support(const Root& theta);

/// Branch index set covered by a sub-root system of A_k.
std::vector<std::size_t> branch_support(const SubRootSystem& s);

struct VertexMatch {
  std::vector<std::size_t> pbt_path;  // child indices from the root
  std::vector<std::size_t> indices;   // the DBS vertex
};

struct EquivalenceResult {
  bool isomorphic = false;
  std::vector<VertexMatch> bijection;
  std::string mismatch;  // first offending vertex, when not isomorphic
};

/// Matches PBT vertices to DBS vertices through their branch index sets and
/// checks shape, orders/levels and singularity types.
EquivalenceResult check_equivalence(const PBTree& pbt, const DBSNode& dbs);

}  // namespace bubble::ak
