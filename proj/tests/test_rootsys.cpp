#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bubble/rootsys.hpp"
#include "oracles.hpp"

using namespace bubble;

namespace {

RootSystemPtr sys(Family f, int n) { return build_root_system(AdeType::make(f, n)); }

Root neg(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

ScalarVector scalars(const std::vector<long>& v) {
  ScalarVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<AdeType> constructible() {
  std::vector<AdeType> out;
  for (int n = 1; n <= 8; ++n) out.push_back(AdeType::make(Family::A, n));
  for (int n = 4; n <= 8; ++n) out.push_back(AdeType::make(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(AdeType::make(Family::E, n));
  return out;
}

}  // namespace

TEST_CASE("ADE type validation") {
  CHECK_THROWS_AS(AdeType::make(Family::A, 0), Error);
  CHECK_THROWS_AS(AdeType::make(Family::D, 3), Error);
  CHECK_THROWS_AS(AdeType::make(Family::E, 9), Error);
  CHECK(AdeType::parse("E7") == AdeType::make(Family::E, 7));
  CHECK_THROWS_AS(AdeType::parse("B3"), Error);
  CHECK_THROWS_AS(build_root_system(AdeType::make(Family::A, 30)), Error);
  CHECK(build_root_system(AdeType::make(Family::A, 30), RootSystemOptions{30})->roots().size() == 930);
}

TEST_CASE("Bourbaki E8 labeling") {
  const IntMatrix g = negated_cartan(AdeType::make(Family::E, 8));
  CHECK(g[0][2] == 1);  // 1-3
  CHECK(g[1][3] == 1);  // 2-4
  CHECK(g[2][3] == 1);  // 3-4
  CHECK(g[6][7] == 1);  // 7-8
  CHECK(g[0][1] == 0);
  CHECK(g[1][2] == 0);
}

TEST_CASE("root enumeration agrees with the brute-force oracle") {
  for (const auto& t : constructible()) {
    CAPTURE(t.to_string());
    const auto rs = build_root_system(t);
    CHECK(rs->roots().size() == oracle::closed_form_count(t));
    auto brute = oracle::brute_force_roots(rs->gram(), oracle::highest_root(t));
    std::sort(brute.begin(), brute.end());
    CHECK(brute == rs->roots());
    for (const auto& r : rs->roots()) {
      CHECK(pairing(r, r, rs->gram()) == -2);
      CHECK(rs->is_root(neg(r)));
    }
    CHECK(std::is_sorted(rs->roots().begin(), rs->roots().end()));
  }
  CHECK(sys(Family::A, 1)->roots() == std::vector<Root>{{-1}, {1}});
}

TEST_CASE("pairing") {
  const auto a3 = sys(Family::A, 3);
  const PolyVector zeta{parse_poly("t^2 + 1/2*t"), parse_poly("t^2 + t"), parse_poly("t^2 + 1/2*t")};
  CHECK(pairing(Root{1, 0, 0}, zeta, a3->gram()) == parse_poly("-t^2"));
  CHECK(pairing(Root{0, 1, 0}, zeta, a3->gram()) == parse_poly("-t"));
  CHECK(pairing(Root{0, 0, 1}, zeta, a3->gram()) == parse_poly("-t^2"));
  CHECK(pairing(Root{1, 0, 0}, Root{1, 0, 0}, a3->gram()) == -2);
  CHECK_THROWS_AS(pairing(Root{1, 0}, zeta, a3->gram()), Error);
  // bilinear, not sesquilinear
  const ScalarVector u{GaussianRational::i(), 0, 0};
  CHECK(pairing(u, u, a3->gram()) == GaussianRational(2));
}

TEST_CASE("perp_roots") {
  const auto a3 = sys(Family::A, 3);
  const ScalarVector zeta0{Rational(1, 2), 1, Rational(1, 2)};
  CHECK(perp_roots(a3, zeta0).members == std::vector<Root>{{-1, 0, 0}, {0, 0, -1}, {0, 0, 1}, {1, 0, 0}});
  CHECK(perp_roots(sys(Family::A, 1), scalars({1})).empty());
  CHECK(perp_roots(sys(Family::A, 2), scalars({1, 2})).members == std::vector<Root>{{-1, 0}, {1, 0}});
}

TEST_CASE("simple_base") {
  const auto a3 = sys(Family::A, 3);
  const RootSet two = RootSet::from(a3, {{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(simple_base(two) == std::vector<Root>{{1, 0, 0}, {0, 0, 1}});
  CHECK(simple_base(RootSet::all(sys(Family::A, 2))) == std::vector<Root>{{1, 0}, {0, 1}});
  CHECK(simple_base(RootSet{a3, {}}).empty());
  CHECK_THROWS_AS(RootSet::from(a3, {{1, 0, 0}}), Error);
  CHECK_THROWS_AS(RootSet::from(a3, {{1, 0, 1}, {-1, 0, -1}}), Error);
}

TEST_CASE("irreducible_components") {
  const auto a3 = sys(Family::A, 3);
  const auto comps = irreducible_components(perp_roots(a3, ScalarVector{Rational(1, 2), 1, Rational(1, 2)}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].ade == AdeType::make(Family::A, 1));
  CHECK(comps[0].simple_base == std::vector<Root>{{1, 0, 0}});
  CHECK(comps[1].simple_base == std::vector<Root>{{0, 0, 1}});

  const auto d4 = irreducible_components(RootSet::all(sys(Family::D, 4)));
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].ade == AdeType::make(Family::D, 4));
  CHECK(d4[0].members.size() == 24);

  // theta1 - theta3 has e-coordinates (1,-1,-1,1): two orthogonal A1's,
  // theta2 and theta1+theta2+theta3.
  const auto pair = irreducible_components(perp_roots(a3, scalars({1, 0, -1})));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].simple_base == std::vector<Root>{{1, 1, 1}});
  CHECK(pair[1].simple_base == std::vector<Root>{{0, 1, 0}});

  // e-coordinates (3,1,1,-5): only theta2 is perpendicular
  const auto single = irreducible_components(perp_roots(a3, scalars({3, 4, 5})));
  REQUIRE(single.size() == 1);
  CHECK(single[0].ade == AdeType::make(Family::A, 1));
  CHECK(single[0].simple_base == std::vector<Root>{{0, 1, 0}});
}

TEST_CASE("classify_ade shapes and diagnostics") {
  const auto d4 = sys(Family::D, 4);
  CHECK(classify_ade({{1, 0, 0, 0}}, d4->gram()) == AdeType::make(Family::A, 1));
  CHECK(classify_ade(simple_base(RootSet::all(d4)), d4->gram()) == AdeType::make(Family::D, 4));
  const auto a7 = sys(Family::A, 7);
  CHECK(classify_ade(simple_base(RootSet::all(a7)), a7->gram()) == AdeType::make(Family::A, 7));

  auto code_of = [](const std::vector<Root>& base, const IntMatrix& g) {
    try {
      classify_ade(base, g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInvariant;
  };
  auto unit_basis = [](std::size_t n) {
    std::vector<Root> b;
    for (std::size_t i = 0; i < n; ++i) {
      Root r(n, 0);
      r[i] = 1;
      b.push_back(r);
    }
    return b;
  };
  auto graph = [](std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix g(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
    for (auto [a, b] : edges) g[a][b] = g[b][a] = 1;
    return g;
  };
  CHECK(code_of(unit_basis(2), graph(2, {})) == ErrorCode::Disconnected);
  CHECK(code_of(unit_basis(5), graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == ErrorCode::DegreeTooHigh);
  CHECK(code_of(unit_basis(3), graph(3, {{0, 1}, {1, 2}, {2, 0}})) == ErrorCode::Cycle);
  CHECK(code_of(unit_basis(6), graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}})) ==
        ErrorCode::MultipleBranchPoints);
  // arms (2,2,2): affine E6
  CHECK(code_of(unit_basis(7), graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})) ==
        ErrorCode::NonAdeArms);
  IntMatrix bad = graph(2, {{0, 1}});
  bad[0][1] = bad[1][0] = -1;
  CHECK(code_of(unit_basis(2), bad) == ErrorCode::NotSimplyLaced);
}

TEST_CASE("classify_ade round-trips every constructible type") {
  for (const auto& t : constructible()) {
    const auto rs = build_root_system(t);
    CHECK(classify_ade(simple_base(RootSet::all(rs)), rs->gram()) == t);
  }
}

TEST_CASE("reflect") {
  const auto a2 = sys(Family::A, 2);
  CHECK(reflect(Root{1, 0}, Root{1, 0}, a2->gram()) == Root{-1, 0});
  CHECK(reflect(Root{1, 0}, Root{0, 1}, a2->gram()) == Root{1, 1});
  std::mt19937_64 rng(5);
  const auto e8 = sys(Family::E, 8);
  std::uniform_int_distribution<long> coord(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, e8->roots().size() - 1);
  for (int i = 0; i < 100; ++i) {
    Root v(8);
    for (auto& x : v) x = coord(rng);
    const Root& theta = e8->roots()[pick(rng)];
    CHECK(reflect(theta, reflect(theta, v, e8->gram()), e8->gram()) == v);
    // isometry
    CHECK(pairing(reflect(theta, v, e8->gram()), reflect(theta, v, e8->gram()), e8->gram()) ==
          pairing(v, v, e8->gram()));
  }
}

TEST_CASE("perp_roots commutes with reflections") {
  std::mt19937_64 rng(17);
  for (const auto& t : {AdeType::make(Family::A, 4), AdeType::make(Family::D, 5), AdeType::make(Family::E, 6)}) {
    const auto rs = build_root_system(t);
    std::uniform_int_distribution<std::size_t> pick(0, rs->roots().size() - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int i = 0; i < 40; ++i) {
      // sums of a few roots hit nontrivial perpendicular sets
      Root v(rs->rank(), 0);
      for (int j = 0; j < 1 + coin(rng); ++j) {
        const Root& r = rs->roots()[pick(rng)];
        for (std::size_t a = 0; a < v.size(); ++a) v[a] += r[a];
      }
      const Root& theta = rs->roots()[pick(rng)];
      const ScalarVector sv = scalars(v);
      const ScalarVector rv = scalars(reflect(theta, v, rs->gram()));
      std::vector<Root> mapped;
      for (const auto& r : perp_roots(rs, sv).members) mapped.push_back(reflect(theta, r, rs->gram()));
      std::sort(mapped.begin(), mapped.end());
      CHECK(perp_roots(rs, rv).members == mapped);
    }
  }
}

TEST_CASE("components partition the root set and are pairwise orthogonal") {
  std::mt19937_64 rng(23);
  for (const auto& t : {AdeType::make(Family::A, 6), AdeType::make(Family::D, 6), AdeType::make(Family::E, 7)}) {
    const auto rs = build_root_system(t);
    const IntMatrix basis = invariant_sublattice(RootSet::all(rs), rs->rank());
    CHECK(basis.empty());
    std::uniform_int_distribution<std::size_t> pick(0, rs->roots().size() - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int i = 0; i < 30; ++i) {
      std::vector<Root> chosen;
      for (int j = 0; j < 2; ++j) {
        chosen.push_back(rs->roots()[pick(rng)]);
        chosen.push_back(neg(chosen.back()));
      }
      const IntMatrix perp = invariant_sublattice(RootSet::from(rs, chosen), rs->rank());
      Root v(rs->rank(), 0);
      for (const auto& b : perp) {
        const long c = coef(rng);
        for (std::size_t a = 0; a < v.size(); ++a) v[a] += c * b[a];
      }
      const RootSet ps = perp_roots(rs, scalars(v));
      const auto comps = irreducible_components(ps);
      std::vector<Root> all;
      for (std::size_t x = 0; x < comps.size(); ++x) {
        all.insert(all.end(), comps[x].members.begin(), comps[x].members.end());
        for (std::size_t y = x + 1; y < comps.size(); ++y) {
          for (const auto& r : comps[x].members) {
            for (const auto& s : comps[y].members) CHECK(pairing(r, s, rs->gram()) == 0);
          }
        }
      }
      std::sort(all.begin(), all.end());
      CHECK(all == ps.members);
    }
  }
}

TEST_CASE("invariant_sublattice") {
  const auto a2 = sys(Family::A, 2);
  CHECK(invariant_sublattice(RootSet{a2, {}}, 2) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(invariant_sublattice(RootSet::from(a2, {{1, 0}, {-1, 0}}), 2) == IntMatrix{{1, 2}});
  CHECK(invariant_sublattice(RootSet::all(a2), 2).empty());

  std::mt19937_64 rng(3);
  const auto d6 = sys(Family::D, 6);
  std::uniform_int_distribution<std::size_t> pick(0, d6->roots().size() - 1);
  for (int i = 0; i < 50; ++i) {
    std::vector<Root> chosen;
    for (int j = 0; j < 3; ++j) {
      chosen.push_back(d6->roots()[pick(rng)]);
      chosen.push_back(neg(chosen.back()));
    }
    const RootSet rs = RootSet::from(d6, chosen);
    const IntMatrix basis = invariant_sublattice(rs, 6);
    for (const auto& b : basis) {
      for (const auto& r : rs.members) CHECK(pairing(b, r, d6->gram()) == 0);
    }
    CHECK(basis.size() + span_rank(rs.members) == 6);
  }
}
