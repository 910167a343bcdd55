#pragma once

// Exhaustive G(F_q)-orbit census of V(F_q)^ss for the split matrix
// presentation: union-find closure under a generating set of
// GL_n(F_q) x GL_n(F_q) x GL_2(F_q) (transvections plus one primitive-root
// diagonal per factor). Yields exact orbit sizes, representatives,
// stabilizer orders |G|/|orbit| and the etale type of every member, which
// must be constant per orbit and distinct across orbits.

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "etale.hpp"
#include "pvs.hpp"

namespace pairalg {

struct CensusOrbit {
  unsigned long long size = 0;
  unsigned long long stabilizer_order = 0;
  std::string etale_type;
  std::string representative;  // "x1coords|x2coords", semicolon-separated values
};

struct CensusResult {
  int n = 0;
  long long q = 0;
  unsigned long long ss_count = 0;
  unsigned long long group_order = 0;
  std::vector<CensusOrbit> orbits;
  bool types_constant = true;
  bool types_distinct = true;
  bool stabilizers_integral = true;
};

namespace detail {

inline unsigned long long gl_order(int n, long long q) {
  unsigned long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<unsigned long long>(q);
  unsigned long long out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= static_cast<unsigned long long>(q);
  }
  return out;
}

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(size_t n) : parent(n, -1) {}
  int32_t find(int32_t a) {
    while (parent[static_cast<size_t>(a)] >= 0) {
      int32_t p = parent[static_cast<size_t>(a)];
      int32_t gp = parent[static_cast<size_t>(p)] >= 0 ? parent[static_cast<size_t>(p)] : p;
      parent[static_cast<size_t>(a)] = gp;
      a = gp;
    }
    return a;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

}  // namespace detail

inline CensusResult ff_orbit_census(int n, long long q, unsigned long long budget = 5'000'000) {
  if (n != 2 && n != 3) throw std::domain_error("ff_orbit_census: n must be 2 or 3");
  if (!is_prime_ll(q)) throw std::domain_error("ff_orbit_census: q must be prime");
  const int m = n * n, dim = 2 * m;
  double total_d = 1;
  for (int i = 0; i < dim; ++i) total_d *= static_cast<double>(q);
  if (total_d > 1e18) throw budget_error("ff_orbit_census: state space overflows the index type");
  const unsigned long long total = static_cast<unsigned long long>(total_d);

  const Fp one(1, q);
  auto d = make_split_matrix(n, one);

  // generators: per GL_n factor, transvections I + E_ij and diag(w,1,...)
  // with w a primitive root (omitted for q = 2); same for GL_2
  auto gl_gens = [&](int k) {
    std::vector<Matrix<Fp>> gens;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        auto g = mat_identity(static_cast<size_t>(k), one);
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] = one;
        gens.push_back(g);
      }
    if (q > 2) {
      auto g = mat_identity(static_cast<size_t>(k), one);
      g[0][0] = Fp(primitive_root_mod(q), q);
      gens.push_back(g);
    }
    return gens;
  };

  std::vector<GroupElement<Fp>> gens;
  for (auto& gm : gl_gens(n)) {
    gens.push_back(GroupElement<Fp>{{detail::from_matrix(d, gm), identity(d)}, mat_identity(2, one)});
    gens.push_back(GroupElement<Fp>{{identity(d), detail::from_matrix(d, gm)}, mat_identity(2, one)});
  }
  for (auto& gm : gl_gens(2)) gens.push_back(GroupElement<Fp>{{identity(d), identity(d)}, gm});

  if (total > budget / gens.size())
    throw budget_error("ff_orbit_census: q^(2m) * generators exceeds the work budget (" +
                       std::to_string(total) + " states)");

  auto decode = [&](unsigned long long idx) {
    std::vector<Fp> c1(static_cast<size_t>(m)), c2(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      c1[static_cast<size_t>(i)] = Fp(static_cast<long long>(idx % static_cast<unsigned long long>(q)), q);
      idx /= static_cast<unsigned long long>(q);
    }
    for (int i = 0; i < m; ++i) {
      c2[static_cast<size_t>(i)] = Fp(static_cast<long long>(idx % static_cast<unsigned long long>(q)), q);
      idx /= static_cast<unsigned long long>(q);
    }
    return PairPoint<Fp>(AlgebraElement<Fp>(d, std::move(c1)), AlgebraElement<Fp>(d, std::move(c2)));
  };
  auto encode = [&](const PairPoint<Fp>& x) {
    unsigned long long idx = 0, mult = 1;
    for (int i = 0; i < m; ++i) {
      idx += static_cast<unsigned long long>(x.x1.c[static_cast<size_t>(i)].x) * mult;
      mult *= static_cast<unsigned long long>(q);
    }
    for (int i = 0; i < m; ++i) {
      idx += static_cast<unsigned long long>(x.x2.c[static_cast<size_t>(i)].x) * mult;
      mult *= static_cast<unsigned long long>(q);
    }
    return idx;
  };

  // semistability and etale type per point
  std::vector<int8_t> type_of(total, -1);
  unsigned long long ss_count = 0;
  auto type_index = [&](const EtaleClass& c) -> int8_t {
    if (n == 2) return c.split_type == std::vector<int>{1, 1} ? 0 : 1;
    if (c.split_type == std::vector<int>{1, 1, 1}) return 0;
    if (c.split_type == std::vector<int>{1, 2}) return 1;
    return 2;
  };
  for (unsigned long long i = 0; i < total; ++i) {
    auto x = decode(i);
    if (!is_semistable(x)) continue;
    type_of[i] = type_index(etale_class(x));
    ++ss_count;
  }

  detail::UnionFind uf(total);
  for (unsigned long long i = 0; i < total; ++i) {
    if (type_of[i] < 0) continue;
    auto x = decode(i);
    for (auto& g : gens) {
      unsigned long long j = encode(act(g, x));
      if (type_of[j] < 0) throw std::logic_error("ff_orbit_census: orbit left the semistable locus");
      uf.unite(static_cast<int32_t>(i), static_cast<int32_t>(j));
    }
  }

  // collect orbits
  std::vector<unsigned long long> root_size(total, 0);
  std::vector<unsigned long long> root_rep(total, 0);
  std::vector<int8_t> root_type(total, -1);
  CensusResult out;
  out.n = n;
  out.q = q;
  out.ss_count = ss_count;
  out.group_order = detail::gl_order(n, q) * detail::gl_order(n, q) * detail::gl_order(2, q);
  for (unsigned long long i = 0; i < total; ++i) {
    if (type_of[i] < 0) continue;
    auto r = static_cast<unsigned long long>(uf.find(static_cast<int32_t>(i)));
    if (root_size[r] == 0) {
      root_rep[r] = i;
      root_type[r] = type_of[i];
    }
    ++root_size[r];
    if (root_type[r] != type_of[i]) out.types_constant = false;
  }
  std::vector<int8_t> seen_types;
  for (unsigned long long r = 0; r < total; ++r) {
    if (root_size[r] == 0) continue;
    CensusOrbit orb;
    orb.size = root_size[r];
    orb.stabilizer_order = out.group_order / root_size[r];
    if (orb.stabilizer_order * root_size[r] != out.group_order) out.stabilizers_integral = false;
    auto x = decode(root_rep[r]);
    orb.etale_type = etale_class(x).to_string();
    std::string rep;
    for (int i = 0; i < m; ++i) {
      if (i) rep += ";";
      rep += x.x1.c[static_cast<size_t>(i)].to_string();
    }
    rep += "|";
    for (int i = 0; i < m; ++i) {
      if (i) rep += ";";
      rep += x.x2.c[static_cast<size_t>(i)].to_string();
    }
    orb.representative = rep;
    for (int8_t t : seen_types)
      if (t == root_type[r]) out.types_distinct = false;
    seen_types.push_back(root_type[r]);
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

// identity-component order of the stabilizer over F_q, by etale type
inline unsigned long long stabilizer_identity_component_order(int n, long long q, const std::string& type) {
  auto u = [&](long long v) { return static_cast<unsigned long long>(v); };
  if (n == 2) {
    if (type == "qxq") return u(q - 1) * u(q - 1) * u(q - 1) * u(q - 1);
    return u(q * q - 1) * u(q * q - 1);
  }
  if (type == "qxqxq") return u(q - 1) * u(q - 1) * u(q - 1) * u(q - 1);
  if (type == "qxq2") return u(q - 1) * u(q * q - 1) * u(q - 1);
  return u(q * q * q - 1) * u(q - 1);
}

}  // namespace pairalg
