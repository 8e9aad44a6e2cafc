#include "bubble/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace bubble {

AdeType AdeType::make(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  AdeType t{family, rank};
  if (!ok) throw Error(ErrorCode::InvalidAdeType, "invalid ADE type " + t.to_string());
  return t;
}

AdeType AdeType::parse(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorCode::InvalidAdeType, "invalid ADE type '" + text + "'");
  Family family{};
  switch (text[0]) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw Error(ErrorCode::InvalidAdeType, "invalid ADE family in '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw Error(ErrorCode::InvalidAdeType, "invalid ADE rank in '" + text + "'");
  }
  return make(family, std::stoi(digits));
}

std::string AdeType::to_string() const {
  const char f = family == Family::A ? 'A' : (family == Family::D ? 'D' : 'E');
  return f + std::to_string(rank);
}

IntMatrix negated_cartan(const AdeType& ade) {
  const auto n = static_cast<std::size_t>(ade.rank);
  IntMatrix g(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
  auto edge = [&](std::size_t a, std::size_t b) { g[a][b] = g[b][a] = 1; };
  switch (ade.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::D:
      // path 1..n-1, node n attached to n-2 (1-based)
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      // path 1-3-4-...-n, node 2 attached to 4 (1-based)
      edge(0, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
  }
  return g;
}

bool canonical_root_less(const Root& a, const Root& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>{});
}

RootSystem::RootSystem(AdeType ade, const RootSystemOptions& options)
    : ade_(AdeType::make(ade.family, ade.rank)), gram_(negated_cartan(ade_)) {
  if (ade_.family == Family::A && ade_.rank > options.max_a_rank) {
    throw Error(ErrorCode::RankCapExceeded,
                ade_.to_string() + " exceeds the rank cap " + std::to_string(options.max_a_rank));
  }
  if (ade_.family == Family::D && ade_.rank > 8) {
    throw Error(ErrorCode::RankCapExceeded, "D-type systems are supported up to rank 8");
  }
  // closure of the simple roots under simple reflections
  const std::size_t n = rank();
  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t j = 0; j < n; ++j) {
    Root r = simple_root(j);
    seen.insert(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    const Root r = std::move(queue.front());
    queue.pop_front();
    const IntVector gr = linalg::apply(gram_, r);
    for (std::size_t j = 0; j < n; ++j) {
      if (gr[j] == 0) continue;
      Root s = r;
      s[j] += gr[j];
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  roots_.assign(seen.begin(), seen.end());
}

bool RootSystem::is_root(const Root& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

Root RootSystem::simple_root(std::size_t j) const {
  Root r(rank(), 0);
  r.at(j) = 1;
  return r;
}

RootSystemPtr build_root_system(AdeType ade, const RootSystemOptions& options) {
  return std::make_shared<const RootSystem>(ade, options);
}

RootSet RootSet::all(const RootSystemPtr& system) { return RootSet{system, system->roots()}; }

RootSet RootSet::from(const RootSystemPtr& system, std::vector<Root> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& r : members) {
    if (!system->is_root(r)) {
      throw Error(ErrorCode::InvalidInput, to_string(r) + " is not a root of " +
                                               system->ade().to_string());
    }
    Root neg = r;
    for (auto& x : neg) x = -x;
    if (!std::binary_search(members.begin(), members.end(), neg)) {
      throw Error(ErrorCode::InvalidInput, "root set is not closed under negation");
    }
  }
  return RootSet{system, std::move(members)};
}

bool RootSet::contains(const Root& r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

SubRootSystem SubRootSystem::whole(const RootSystemPtr& system) {
  SubRootSystem s;
  s.ambient = system;
  for (std::size_t j = 0; j < system->rank(); ++j) s.simple_base.push_back(system->simple_root(j));
  s.ade = system->ade();
  s.members = system->roots();
  return s;
}

IntMatrix SubRootSystem::base_gram() const {
  const std::size_t m = simple_base.size();
  IntMatrix g(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      g[i][j] = pairing(simple_base[i], simple_base[j], ambient->gram());
    }
  }
  return g;
}

namespace {

template <class T>
T pair_root_with(const Root& u, const std::vector<T>& v, const IntMatrix& gram) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
  const IntVector gu = linalg::apply(gram, u);
  T acc{};
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (gu[j] != 0) acc += v[j] * Rational(gu[j]);
  }
  return acc;
}

template <class T>
std::vector<T> reflect_impl(const Root& theta, std::vector<T> v, const IntMatrix& gram) {
  const T c = pair_root_with(theta, v, gram);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (theta[j] != 0) v[j] += c * Rational(theta[j]);
  }
  return v;
}

bool is_positive(const Root& r) {
  for (long x : r) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

long pairing(const Root& u, const Root& v, const IntMatrix& gram) {
  return linalg::bilinear<long>(u, v, gram);
}

GaussianRational pairing(const Root& u, const ScalarVector& v, const IntMatrix& gram) {
  return pair_root_with(u, v, gram);
}

Poly pairing(const Root& u, const PolyVector& v, const IntMatrix& gram) {
  return pair_root_with(u, v, gram);
}

GaussianRational pairing(const ScalarVector& u, const ScalarVector& v, const IntMatrix& gram) {
  return linalg::bilinear<GaussianRational>(u, v, gram);
}

Poly pairing(const PolyVector& u, const PolyVector& v, const IntMatrix& gram) {
  return linalg::bilinear<Poly>(u, v, gram);
}

RootSet perp_roots(const RootSet& source, const ScalarVector& v) {
  RootSet out{source.ambient, {}};
  for (const auto& r : source.members) {
    if (pairing(r, v, source.ambient->gram()).is_zero()) out.members.push_back(r);
  }
  return out;
}

RootSet perp_roots(const RootSystemPtr& source, const ScalarVector& v) {
  return perp_roots(RootSet::all(source), v);
}

std::vector<Root> simple_base(const RootSet& rs) {
  std::vector<Root> positive;
  for (const auto& r : rs.members) {
    if (is_positive(r)) positive.push_back(r);
  }
  const std::set<Root> lookup(positive.begin(), positive.end());
  std::vector<Root> base;
  for (const auto& p : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      Root rest = p;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= a[j];
      if (lookup.count(rest) != 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(p);
  }
  std::sort(base.begin(), base.end(), canonical_root_less);
  return base;
}

AdeType classify_ade(const std::vector<Root>& base, const IntMatrix& gram) {
  const std::size_t n = base.size();
  if (n == 0) throw Error(ErrorCode::Disconnected, "empty simple system");
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing(base[i], base[i], gram) != -2) {
      throw Error(ErrorCode::NotSimplyLaced, "base element " + to_string(base[i]) + " has square != -2");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const long p = pairing(base[i], base[j], gram);
      if (p == 0) continue;
      if (p != 1) {
        throw Error(ErrorCode::NotSimplyLaced,
                    "pairing " + std::to_string(p) + " between base elements is not 0 or 1");
      }
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  }
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> stack{0};
  visited[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!visited[w]) {
        visited[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "Dynkin graph is disconnected");

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() >= 4) throw Error(ErrorCode::DegreeTooHigh, "Dynkin vertex of degree >= 4");
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (edges != n - 1) throw Error(ErrorCode::Cycle, "Dynkin graph contains a cycle");
  if (branch.size() > 1) throw Error(ErrorCode::MultipleBranchPoints, "more than one branch vertex");
  const int rank = static_cast<int>(n);
  if (branch.empty()) return AdeType::make(Family::A, rank);

  std::vector<int> arms;
  const std::size_t center = branch.front();
  for (std::size_t start : adj[center]) {
    int length = 1;
    std::size_t prev = center;
    std::size_t cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return AdeType::make(Family::D, rank);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return AdeType::make(Family::E, rank);
  }
  throw Error(ErrorCode::NonAdeArms, "arm lengths (" + std::to_string(arms[0]) + "," +
                                         std::to_string(arms[1]) + "," +
                                         std::to_string(arms[2]) + ") are not of ADE type");
}

std::vector<SubRootSystem> irreducible_components(const RootSet& rs) {
  const IntMatrix& gram = rs.ambient->gram();
  const std::vector<Root> base = simple_base(rs);
  const std::size_t n = base.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pairing(base[i], base[j], gram) != 0) parent[find(j)] = find(i);
    }
  }
  // base is canonically sorted, so components come out ordered by their smallest root
  std::vector<SubRootSystem> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = comps.size();
      comps.push_back(SubRootSystem{rs.ambient, {}, AdeType{}, {}});
    }
    comps[slot[r]].simple_base.push_back(base[i]);
  }
  for (auto& c : comps) {
    try {
      c.ade = classify_ade(c.simple_base, gram);
    } catch (const Error& e) {
      throw Error(ErrorCode::InternalInvariant,
                  std::string("root subset failed classification: ") + e.what());
    }
  }
  for (const auto& r : rs.members) {
    bool placed = false;
    for (auto& c : comps) {
      for (const auto& b : c.simple_base) {
        if (pairing(r, b, gram) != 0) {
          c.members.push_back(r);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) throw Error(ErrorCode::InternalInvariant, "root orthogonal to every component");
  }
  return comps;
}

Root reflect(const Root& theta, const Root& v, const IntMatrix& gram) {
  const long c = pairing(v, theta, gram);
  Root out = v;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * theta[j];
  return out;
}

ScalarVector reflect(const Root& theta, const ScalarVector& v, const IntMatrix& gram) {
  return reflect_impl(theta, v, gram);
}

PolyVector reflect(const Root& theta, const PolyVector& v, const IntMatrix& gram) {
  return reflect_impl(theta, v, gram);
}

IntMatrix invariant_sublattice(const RootSet& rs, std::size_t ambient_rank) {
  IntMatrix rows;
  rows.reserve(rs.members.size());
  for (const auto& r : rs.members) {
    if (r.size() != ambient_rank) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch");
    if (is_positive(r)) rows.push_back(linalg::apply(rs.ambient->gram(), r));
  }
  return linalg::integer_kernel(rows, ambient_rank);
}

std::size_t span_rank(const std::vector<Root>& roots) { return linalg::rank(roots); }

std::string to_string(const Root& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "]";
}

}  // namespace bubble
