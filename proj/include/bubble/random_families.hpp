#pragma once

#include <random>

#include "bubble/ak.hpp"
#include "bubble/pbt.hpp"

namespace bubble {

struct RandomBranchOptions {
  std::size_t max_k = 8;
  std::size_t max_degree = 6;
};

/// Rejection-sampled valid branch configuration. Branches are grown by copying
/// a random prefix of an earlier branch so that collision classes nest.
ak::BranchConfig random_branch_config(std::mt19937_64& rng, const RandomBranchOptions& options = {});

struct RandomFamilyOptions {
  std::size_t max_degree = 4;
};

/// Random valid family over `system` whose leading terms are chosen
/// perpendicular to nested random root subsets, so trees have depth.
FamilyInput random_valid_family(std::mt19937_64& rng, const RootSystemPtr& system,
                                const RandomFamilyOptions& options = {});

}  // namespace bubble
