// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "bubble/ak.hpp"
#include "bubble/k3.hpp"
#include "bubble/linalg.hpp"
#include "bubble/pbt.hpp"
#include "bubble/random_families.hpp"
#include "oracles.hpp"

using namespace bubble;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

PolyVector worked_zeta() {
  return {parse_poly("t^2 + 1/2*t"), parse_poly("t^2 + t"), parse_poly("t^2 + 1/2*t")};
}

RootSystemPtr system_of(Family f, int n) { return build_root_system(AdeType::make(f, n)); }

std::vector<ak::BranchConfig> branch_suite() {
  std::mt19937_64 rng(42);
  std::vector<ak::BranchConfig> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_branch_config(rng, {8, 6}));
  return out;
}

Outcome worked_example() {
  Outcome o;
  const auto a3 = system_of(Family::A, 3);
  const PolyVector zeta = worked_zeta();
  const char* expected[] = {"-t^2", "-t", "-t^2"};
  for (std::size_t j = 0; j < 3; ++j) {
    o.require(pairing(a3->simple_root(j), zeta, a3->gram()) == parse_poly(expected[j]),
              "pairing with theta_" + std::to_string(j + 1));
  }
  const LeadingData lead = leading_data(zeta);
  o.require(lead.order == 1, "leading order");
  o.require(lead.coefficient == ScalarVector{Rational(1, 2), 1, Rational(1, 2)}, "zeta_0");
  const PBTree tree = build_pbt(validate_family({a3, zeta}));
  const auto& sings = tree.root.singularities;
  o.require(sings.size() == 2, "two root singularities");
  if (sings.size() == 2) {
    const AdeType a1 = AdeType::make(Family::A, 1);
    o.require(sings[0].ade == a1 && sings[0].simple_base == std::vector<Root>{{1, 0, 0}}, "A1 at theta_1");
    o.require(sings[1].ade == a1 && sings[1].simple_base == std::vector<Root>{{0, 0, 1}}, "A1 at theta_3");
  }
  return o;
}

Outcome worked_tree() {
  Outcome o;
  const PBTree tree = build_pbt(validate_family({system_of(Family::A, 3), worked_zeta()}));
  o.require(tree.node_count() == 3, "node count");
  o.require(tree.root.order == 1 && tree.root.cumulative_exponent == Rational(1, 2), "root k and exponent");
  o.require(tree.root.children.size() == 2, "two leaves");
  for (const auto& leaf : tree.root.children) {
    o.require(leaf.is_leaf() && leaf.singularities.empty(), "leaf is smooth");
    o.require(leaf.subspace.ade == AdeType::make(Family::A, 1), "leaf ambient A1");
    o.require(leaf.order == 2 && leaf.cumulative_exponent == Rational(3, 2), "leaf k and exponent");
  }
  return o;
}

Outcome equivalence() {
  Outcome o;
  std::size_t good = 0;
  const auto suite = branch_suite();
  for (const auto& b : suite) {
    const auto family = validate_family({system_of(Family::A, static_cast<int>(b.k())), ak::from_branches(b)});
    const auto r = ak::check_equivalence(build_pbt(family), ak::build_dbs_tree(b));
    if (r.isomorphic) ++good;
    o.require(r.isomorphic, r.mismatch);
  }
  o.detail = std::to_string(good) + "/" + std::to_string(suite.size()) + " isomorphic" +
             (o.ok ? "" : "; first mismatch: " + o.detail);
  return o;
}

Outcome odaka_agreement() {
  Outcome o;
  std::size_t good = 0;
  const auto suite = branch_suite();
  for (const auto& b : suite) {
    const FamilyInput family =
        validate_family({system_of(Family::A, static_cast<int>(b.k())), ak::from_branches(b)});
    std::vector<AdeType> root_types;
    for (const auto& s : build_pbt(family).root.singularities) root_types.push_back(s.ade);
    const bool same = odaka_rescale(family).central_fiber == root_types;
    if (same) ++good;
    o.require(same, "central fiber differs from root singularities");
  }
  o.detail = std::to_string(good) + "/" + std::to_string(suite.size()) + " agree";
  return o;
}

Outcome root_counts() {
  Outcome o;
  std::vector<AdeType> types;
  for (int n = 1; n <= 8; ++n) types.push_back(AdeType::make(Family::A, n));
  for (int n = 4; n <= 8; ++n) types.push_back(AdeType::make(Family::D, n));
  for (int n = 6; n <= 8; ++n) types.push_back(AdeType::make(Family::E, n));
  for (const auto& t : types) {
    const auto sys = build_root_system(t);
    auto brute = oracle::brute_force_roots(sys->gram(), oracle::highest_root(t));
    std::sort(brute.begin(), brute.end());
    const std::string name = t.to_string();
    o.require(sys->roots().size() == oracle::closed_form_count(t), name + " count");
    o.require(sys->roots() == brute, name + " differs from brute force");
    for (const auto& r : sys->roots()) o.require(pairing(r, r, sys->gram()) == -2, name + " root square");
  }
  o.detail = std::to_string(types.size()) + " types";
  return o;
}

Outcome k3_lattice() {
  Outcome o;
  const k3::K3Lattice l = k3::build_k3_lattice();
  o.require(linalg::determinant(l.gram) == -1, "det L");
  for (long d = 1; d <= 50; ++d) {
    const k3::PolarizedLattice p = k3::polarize(d);
    o.require(pairing(p.lambda, p.lambda, l.gram) == 2 * d, "lambda^2 at d=" + std::to_string(d));
    o.require(abs(linalg::determinant(p.gram21)) == 2 * d, "|det L_2d| at d=" + std::to_string(d));
  }

  IntMatrix d5;
  for (std::size_t node : {8, 9, 10, 11, 12}) {
    IntVector v(k3::kLatticeRank, 0);
    v[node] = 1;
    d5.push_back(v);
  }
  const k3::EmbeddedCartan h = k3::embed_cartan(d5, k3::polarize(3));
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto random_vector = [&] {
    PolyVector v(k3::kLatticeRank);
    for (auto& x : v) x = Poly(GaussianRational(Rational(num(rng), den(rng))));
    return v;
  };
  for (int i = 0; i < 100; ++i) {
    const PolyVector u = random_vector();
    const PolyVector v = random_vector();
    const PolyVector pu = k3::project(u, h);
    o.require(k3::project(pu, h) == pu, "projection not idempotent");
    o.require(pairing(pu, v, l.gram) == pairing(u, k3::project(v, h), l.gram), "projection not self-adjoint");
  }
  return o;
}

Outcome invariance() {
  Outcome o;
  std::vector<RootSystemPtr> systems;
  for (int n = 1; n <= 6; ++n) systems.push_back(system_of(Family::A, n));
  for (int n = 4; n <= 6; ++n) systems.push_back(system_of(Family::D, n));

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, systems.size() - 1);
  std::uniform_int_distribution<long> num(1, 7), den(1, 4);
  std::bernoulli_distribution coin;
  auto scalar = [&] {
    const Rational re(coin(rng) ? num(rng) : -num(rng), den(rng));
    return coin(rng) ? GaussianRational(re) : GaussianRational(re, Rational(num(rng)));
  };

  std::size_t checks = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& sys = systems[pick(rng)];
    const FamilyInput f = random_valid_family(rng, sys);
    const std::string base = canonical_signature(build_pbt(f).root);

    PolyVector scaled = f.zeta;
    const GaussianRational c = scalar();
    for (auto& p : scaled) p *= c;
    o.require(canonical_signature(build_pbt(validate_family({sys, scaled})).root) == base, "projective scaling");

    PolyVector reparam = f.zeta;
    const GaussianRational s = scalar();
    for (auto& p : reparam) p = p.rescale_variable(s);
    o.require(canonical_signature(build_pbt(validate_family({sys, reparam})).root) == base, "reparametrization");

    std::uniform_int_distribution<std::size_t> root_pick(0, sys->roots().size() - 1);
    const Root w = sys->roots()[root_pick(rng)];
    const PBTree moved = build_pbt(validate_family({sys, reflect(w, f.zeta, sys->gram())}));
    const auto transport = [&](const ScalarVector& v) { return reflect(w, v, sys->gram()); };
    o.require(canonical_signature(build_pbt(f).root, transport) == canonical_signature(moved.root),
              "Weyl reflection in " + to_string(w));
    checks += 3;
  }
  o.detail = std::to_string(checks) + " comparisons" + (o.ok ? "" : "; first failure: " + o.detail);
  return o;
}

Outcome parser_round_trip() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  std::uniform_int_distribution<int> degree(0, 9);
  std::bernoulli_distribution sparse(0.4), imaginary(0.3);
  for (int i = 0; i < 1000; ++i) {
    Poly p;
    const int top = degree(rng);
    for (int e = 0; e <= top; ++e) {
      if (sparse(rng)) continue;
      const Rational re(num(rng), den(rng));
      const Rational im = imaginary(rng) ? Rational(num(rng), den(rng)) : Rational(0);
      p += Poly::monomial(GaussianRational(re, im), static_cast<std::size_t>(e));
    }
    const std::string text = p.to_string();
    o.require(parse_poly(text) == p, "round trip of " + text);
  }
  const PolyVector zeta = worked_zeta();
  const Rational half(1, 2);
  o.require(zeta[0].coeff(1) == GaussianRational(half) && zeta[0].coeff(2) == GaussianRational(1) &&
                zeta[0].degree() == 2,
            "t^2 + 1/2*t");
  o.require(zeta[1].coeff(1) == GaussianRational(1) && zeta[1].coeff(2) == GaussianRational(1) &&
                zeta[1].degree() == 2 && zeta[1].coeff(0).is_zero(),
            "t^2 + t");
  o.require(zeta[2] == zeta[0], "theta_3 literal");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "worked A3 example: pairings, zeta_0, root singularities", 1.0, worked_example},
      {"AC2", "worked A3 example: full three-node tree", 1.0, worked_tree},
      {"AC3", "PBT/DBS equivalence on 200 random branch configurations", 30.0, equivalence},
      {"AC4", "Odaka central fiber equals PBT root singularities", 30.0, odaka_agreement},
      {"AC5", "root counts A1..A8, D4..D8, E6..E8 against brute force", 10.0, root_counts},
      {"AC6", "K3 lattice, polarizations d=1..50, projection", 5.0, k3_lattice},
      {"AC7", "scaling, reparametrization and Weyl invariance", 60.0, invariance},
      {"AC8", "parser round trip on 1000 polynomials", 2.0, parser_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, o.detail.empty() ? "" : " - ", o.detail.c_str());
    if (!in_time) std::printf("       time limit exceeded\n");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
