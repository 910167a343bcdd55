// pairalg: exact computations in the space of pairs of simple algebras.
//
// Subcommands: pvs (forms/invariants), orbits (classification, equivalence,
// finite-field census), lg (Hilbert symbols and local embeddability), zeta
// (constants, lattice counts, density accumulator), selftest, experiment.
//
// Exit codes: 0 success, 1 domain error, 2 inconclusive, 3 budget exceeded,
// 64 usage.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pairalg/census.hpp"
#include "pairalg/etale.hpp"
#include "pairalg/io.hpp"
#include "pairalg/localglobal.hpp"
#include "pairalg/orbits.hpp"
#include "pairalg/pvs.hpp"
#include "pairalg/zeta.hpp"

using namespace pairalg;
using nlohmann::json;

namespace {

struct Config {
  std::string descriptor;
  int height_bound = 10;
  unsigned long long census_budget = 5'000'000ULL;
  int padic_prec = 40;
  long long lseries_terms = 1'000'000;
  std::string out_path;
  unsigned long long seed = 1;
  bool json_out = false;
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::optional<PlaceSet> declared_places(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return io::parse_place_set(s);
}

// ---------------------------------------------------------------------------

int cmd_pvs_eval(const Config& cfg, const std::string& pointfile) {
  auto x = io::read_point_file(pointfile);
  auto F = form_of(x);
  Rational P = invariant_P(x);
  bool ss = !P.is_zero();
  if (cfg.json_out) {
    json j{{"F_x", F.to_string()}, {"P", P.to_string()}, {"semistable", ss}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "F_x = " << F.to_string() << "\n";
    std::cout << "P(x) = " << P.to_string() << "\n";
    std::cout << "semistable = " << (ss ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_orbits_classify(const Config& cfg, const std::string& pointfile) {
  auto x = io::read_point_file(pointfile);
  auto cls = etale_class(x);
  if (cfg.json_out) {
    json j{{"degree", cls.degree},
           {"split_type", cls.split_type},
           {"etale_class", cls.to_string()}};
    if (cls.degree == 2 || cls.split_type == std::vector<int>{1, 2}) j["d"] = cls.d.get_str();
    if (cls.is_field() && cls.degree == 3) j["cubic"] = cls.cubic.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "etale_class = " << cls.to_string() << "\n";
  }
  return 0;
}

int cmd_orbits_equiv(const Config& cfg, const std::string& pf1, const std::string& pf2) {
  auto x = io::read_point_file(pf1), y = io::read_point_file(pf2);
  auto r = orbit_equivalent(x, y, cfg.height_bound);
  std::string status = r.status == EquivStatus::Equivalent ? "equivalent"
                       : r.status == EquivStatus::Distinct ? "distinct"
                                                           : "inconclusive";
  if (cfg.json_out) {
    json j{{"status", status}, {"note", r.note}};
    if (r.witness) {
      j["witness"] = {{"g11", io::element_to_string(r.witness->g.g1.g11)},
                      {"g12", io::element_to_string(r.witness->g.g1.g12)},
                      {"g2", {r.witness->g.g2[0][0].to_string(), r.witness->g.g2[0][1].to_string(),
                              r.witness->g.g2[1][0].to_string(), r.witness->g.g2[1][1].to_string()}}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << status << "\n";
    if (r.witness) {
      std::cout << "g11 = " << io::element_to_string(r.witness->g.g1.g11) << "\n";
      std::cout << "g12 = " << io::element_to_string(r.witness->g.g1.g12) << "\n";
      std::cout << "g2 = [[" << r.witness->g.g2[0][0].to_string() << ","
                << r.witness->g.g2[0][1].to_string() << "],[" << r.witness->g.g2[1][0].to_string()
                << "," << r.witness->g.g2[1][1].to_string() << "]]\n";
    }
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return r.status == EquivStatus::Inconclusive ? 2 : 0;
}

void print_census(const Config& cfg, const CensusResult& res, std::ostream& os) {
  if (cfg.json_out) {
    json orbs = json::array();
    for (auto& orb : res.orbits)
      orbs.push_back({{"size", orb.size},
                      {"stabilizer_order", orb.stabilizer_order},
                      {"etale_type", orb.etale_type},
                      {"representative", orb.representative}});
    json j{{"n", res.n},           {"q", res.q},
           {"ss_count", res.ss_count}, {"group_order", res.group_order},
           {"orbits", orbs},       {"types_constant", res.types_constant},
           {"types_distinct", res.types_distinct}};
    os << j.dump(2) << "\n";
    return;
  }
  os << "# census n=" << res.n << " q=" << res.q << " |V^ss|=" << res.ss_count
     << " |G|=" << res.group_order << " orbits=" << res.orbits.size() << "\n";
  os << "# size;stabilizer_order;etale_type;representative\n";
  for (auto& orb : res.orbits)
    os << orb.size << ";" << orb.stabilizer_order << ";" << orb.etale_type << ";"
       << orb.representative << "\n";
}

int cmd_orbits_census(const Config& cfg, int n, long long q) {
  auto res = ff_orbit_census(n, q, cfg.census_budget);
  print_census(cfg, res, std::cout);
  if (!res.types_constant || !res.types_distinct || !res.stabilizers_integral) {
    std::cerr << "census invariant check failed\n";
    return 1;
  }
  return 0;
}

int cmd_lg_ramified(const Config& cfg, const std::string& desc_str, const std::string& declared) {
  auto d = io::parse_descriptor(desc_str);
  auto md = ramified_set(d, declared_places(declared));
  if (cfg.json_out) {
    json places = json::array();
    for (auto& v : md.places) places.push_back(v.to_string());
    std::cout << json{{"M_D", places}}.dump(2) << "\n";
  } else {
    if (d->kind == AlgKind::Quaternion)
      for (const Place& v : hilbert_support(d->qa, d->qb))
        std::cout << "v=" << v.to_string() << ";symbol=" << hilbert_symbol(d->qa, d->qb, v) << "\n";
    std::cout << "M_D = " << md.to_string() << "\n";
  }
  return 0;
}

int cmd_lg_embed2(const Config& cfg, long long dval, const std::string& desc_str,
                  const std::string& declared) {
  auto d = io::parse_descriptor(desc_str);
  auto md = ramified_set(d, declared_places(declared));
  bool ok = quadratic_embeddable(mpz_class(static_cast<long>(dval)), md);
  if (cfg.json_out) {
    std::cout << json{{"d", dval}, {"embeddable", ok}}.dump(2) << "\n";
  } else {
    for (const Place& v : md.places)
      std::cout << "v=" << v.to_string() << ";nonsquare="
                << (nonsquare_locally(mpz_class(static_cast<long>(dval)), v) ? 1 : 0) << "\n";
    std::cout << (ok ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_lg_embed3(const Config& cfg, const std::string& fstr, const std::string& desc_str,
                  const std::string& declared) {
  auto d = io::parse_descriptor(desc_str);
  auto f = io::parse_poly(fstr);
  auto md = ramified_set(d, d->kind == AlgKind::CyclicCubic ? declared_places(declared) : std::nullopt);
  bool ok = true;
  std::vector<std::string> trace;
  for (const Place& v : md.places) {
    auto deg = cubic_local_degree(f, v, cfg.padic_prec);
    std::string ds = "{";
    for (size_t i = 0; i < deg.size(); ++i) ds += (i ? "," : "") + std::to_string(deg[i]);
    ds += "}";
    trace.push_back("v=" + v.to_string() + ";degrees=" + ds);
    if (deg != std::vector<int>{3}) ok = false;
  }
  if (cfg.json_out) {
    std::cout << json{{"f", fstr}, {"embeddable", ok}, {"trace", trace}}.dump(2) << "\n";
  } else {
    for (auto& t : trace) std::cout << t << "\n";
    std::cout << (ok ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_zeta_constants(const Config& cfg) {
  auto z = zeta_constants();
  if (cfg.json_out) {
    std::cout << json{{"c_Q", z.c_k}, {"varrho", z.varrho}, {"V2", z.V2}}.dump(2) << "\n";
  } else {
    std::cout << "c_Q = " << fmt12(z.c_k) << "\n";
    std::cout << "varrho = " << fmt12(z.varrho) << "\n";
    std::cout << "V2 = " << fmt12(z.V2) << "\n";
  }
  return 0;
}

int cmd_zeta_zw(const Config& cfg, const std::string& order, long long X) {
  auto ord = order == "hurwitz" ? QuaternionOrder::Hurwitz : QuaternionOrder::Lipschitz;
  auto zw = zw_partial_count(ord, X);
  if (cfg.json_out) {
    json cps = json::array();
    for (auto& rec : zw.checkpoints)
      cps.push_back({{"X", rec.bound},
                     {"N", rec.count},
                     {"fitted_exponent", rec.fitted_exponent},
                     {"pointwise_ratio", rec.pointwise_ratio}});
    std::cout << json{{"order", order}, {"checkpoints", cps}}.dump(2) << "\n";
  } else {
    for (auto& rec : zw.checkpoints)
      std::cout << "X=" << rec.bound << ";N=" << rec.count
                << ";fitted_exponent=" << fmt12(rec.fitted_exponent)
                << ";logN_logX=" << fmt12(rec.pointwise_ratio) << "\n";
  }
  return 0;
}

int cmd_zeta_density(const Config& cfg, const std::string& desc_str, long long xmax,
                     const std::string& declared) {
  auto d = io::parse_descriptor(desc_str);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw std::domain_error("cannot open output file: " + cfg.out_path);
    os = &file;
  }
  *os << "Delta,L1,hR,embeddable,running_sum\n";
  auto sink = [&](const DensityRecord& rec) {
    *os << rec.Delta << "," << fmt12(rec.L1) << "," << fmt12(rec.hR_value) << ","
        << (rec.embeddable ? 1 : 0) << "," << fmt12(rec.running_sum) << "\n";
  };
  auto res = density_sum(d, xmax, cfg.lseries_terms, sink, declared_places(declared));
  std::ostream& sum = cfg.out_path.empty() ? std::cerr : std::cout;
  if (cfg.json_out)
    sum << json{{"filtered_sum", res.filtered_sum},
                {"slope", res.slope},
                {"included", res.included},
                {"excluded", res.excluded}}
               .dump(2)
        << "\n";
  else
    sum << "filtered_sum=" << fmt12(res.filtered_sum) << " slope=" << fmt12(res.slope)
        << " included=" << res.included << " excluded=" << res.excluded << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// selftest: a compact seeded sweep of the library invariants

int cmd_selftest(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  auto rnd_q = [&]() {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 5);
    return Rational(mpz_class(num), mpz_class(den));
  };

  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      Rational a = rnd_q(), b = rnd_q();
      if (b.is_zero()) continue;
      ok = ((a / b) * b == a);
    }
    report("rational field laws", ok);
  }

  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Rational(1)),
                                          make_split_matrix(3, Rational(1)), hamilton_quaternions(),
                                          default_cyclic_division()};
  auto rnd_elem = [&](const DescPtr<Rational>& d) {
    std::vector<Rational> c;
    for (int i = 0; i < d->m; ++i) c.push_back(rnd_q());
    return AlgebraElement<Rational>(d, std::move(c));
  };
  auto rnd_invertible = [&](const DescPtr<Rational>& d) {
    while (true) {
      auto x = rnd_elem(d);
      if (is_invertible(x)) return x;
    }
  };
  auto rnd_group = [&](const DescPtr<Rational>& d) {
    while (true) {
      Matrix<Rational> g2{{rnd_q(), rnd_q()}, {rnd_q(), rnd_q()}};
      if (det_small(g2).is_zero()) continue;
      return GroupElement<Rational>{{rnd_invertible(d), rnd_invertible(d)}, g2};
    }
  };

  {
    bool ok = true;
    for (auto& d : descs)
      for (int i = 0; i < 50 && ok; ++i) {
        auto x = rnd_elem(d), y = rnd_elem(d);
        ok = (reduced_norm(mul(x, y)) == reduced_norm(x) * reduced_norm(y)) &&
             (reduced_trace(mul(x, y)) == reduced_trace(mul(y, x)));
      }
    report("reduced norm/trace laws", ok);
  }

  {
    bool ok = true;
    for (auto& d : descs)
      for (int i = 0; i < 50 && ok; ++i) {
        auto g = rnd_group(d);
        PairPoint<Rational> x(rnd_elem(d), rnd_elem(d));
        ok = (invariant_P(act(g, x)) == characters(g).chi * invariant_P(x));
      }
    report("relative invariance P(gx) = chi(g) P(x)", ok);
  }

  {
    bool ok = true;
    for (auto& d : descs)
      for (int i = 0; i < 30 && ok; ++i) {
        auto g = rnd_group(d);
        PairPoint<Rational> x(rnd_elem(d), rnd_elem(d)), y(rnd_elem(d), rnd_elem(d));
        auto gii = involution(involution(g));
        ok = (gii.g1.g11 == g.g1.g11) && (gii.g2 == g.g2) &&
             (pairing(act(g, x), act(involution(g), y)) == pairing(x, y));
      }
    report("involution and pairing invariance", ok);
  }

  {
    bool ok = true;
    for (int i = 0; i < 300 && ok; ++i) {
      long a = static_cast<long>(rng() % 199) - 99;
      long b = static_cast<long>(rng() % 199) - 99;
      if (!a || !b) continue;
      int prod = 1;
      for (auto& v : hilbert_support(Rational(a), Rational(b)))
        prod *= hilbert_symbol(Rational(a), Rational(b), v);
      ok = (prod == 1);
    }
    auto md = ramified_set(hamilton_quaternions());
    ok = ok && md.size() == 2 && md.contains(Place::at(2)) && md.contains(Place::infinite());
    report("hilbert product formula and M_D(-1,-1)", ok);
  }

  {
    bool ok = true;
    for (long long q : {2LL, 3LL}) {
      auto res = ff_orbit_census(2, q, cfg.census_budget);
      ok = ok && res.orbits.size() == 2 && res.types_constant && res.types_distinct;
    }
    report("finite-field census (n=2, q=2,3)", ok);
  }

  {
    bool ok = true;
    auto H = hamilton_quaternions();
    int done = 0;
    while (done < 50 && ok) {
      auto x1 = rnd_elem(H);
      Rational c = rnd_q();
      PairPoint<Rational> x(x1, scale(c, x1));
      if (x.is_zero() || x1.is_zero() || is_semistable(x)) continue;
      auto r = destabilize(x);
      ok = r.y.x1.is_zero() && !r.y.x2.is_zero() && (act(r.g, x) == r.y);
      ++done;
    }
    report("destabilization into Y1^ss", ok);
  }

  {
    auto zw = zw_partial_count(QuaternionOrder::Lipschitz, 200);
    bool ok = true;
    for (long long n = 1; n <= 200 && ok; ++n) {
      unsigned long long s = 0;
      for (long long dd = 1; dd <= n; ++dd)
        if (n % dd == 0 && dd % 4 != 0) s += static_cast<unsigned long long>(dd);
      ok = (zw.per_norm[static_cast<size_t>(n)] == 8 * s);
    }
    report("four-square counts vs divisor sums", ok);
  }

  {
    auto z = zeta_constants();
    bool ok = std::abs(z.V2 - 0.5235987755982988) < 1e-10;
    auto l = L1_chi(-4, 50'000);
    ok = ok && std::abs(l.value - M_PI / 4) < 1e-3;
    report("constants and L(1,chi_{-4})", ok);
  }

  std::cout << (failures ? "selftest: FAILURES\n" : "selftest: all checks passed\n");
  return failures ? 1 : 0;
}

// ---------------------------------------------------------------------------
// experiment driver: regenerates the golden files deterministically

int cmd_experiment(const Config& cfg, const std::string& name) {
  std::string dir = cfg.out_path.empty() ? "golden" : cfg.out_path;
  auto open = [&](const std::string& fname) {
    std::ofstream f(dir + "/" + fname);
    if (!f) throw std::domain_error("cannot open " + dir + "/" + fname + " (create the directory first)");
    return f;
  };
  if (name == "census-all") {
    for (auto [n, q] : {std::pair<int, long long>{2, 2}, {2, 3}, {3, 2}}) {
      auto res = ff_orbit_census(n, q, cfg.census_budget);
      auto f = open("census_n" + std::to_string(n) + "_q" + std::to_string(q) + ".csv");
      Config plain = cfg;
      plain.json_out = false;
      print_census(plain, res, f);
    }
    return 0;
  }
  if (name == "jacobi") {
    auto zw = zw_partial_count(QuaternionOrder::Lipschitz, 10'000);
    auto f = open("jacobi.csv");
    f << "n,r4\n";
    for (long long n = 1; n <= 200; ++n) f << n << "," << zw.per_norm[static_cast<size_t>(n)] << "\n";
    auto g = open("jacobi_fit.txt");
    for (auto& rec : zw.checkpoints)
      g << "X=" << rec.bound << ";N=" << rec.count << ";fitted_exponent=" << fmt12(rec.fitted_exponent)
        << ";logN_logX=" << fmt12(rec.pointwise_ratio) << "\n";
    return 0;
  }
  if (name == "density-hamilton") {
    auto f = open("density_hamilton.csv");
    f << "Delta,L1,hR,embeddable,running_sum\n";
    const long long T = 100'000;  // documented truncation for the golden file
    auto sink = [&](const DensityRecord& rec) {
      f << rec.Delta << "," << fmt12(rec.L1) << "," << fmt12(rec.hR_value) << ","
        << (rec.embeddable ? 1 : 0) << "," << fmt12(rec.running_sum) << "\n";
    };
    auto res = density_sum(hamilton_quaternions(), 10'000, T, sink);
    auto g = open("density_hamilton_summary.txt");
    g << "terms=" << T << "\nfiltered_sum=" << fmt12(res.filtered_sum) << "\nslope=" << fmt12(res.slope)
      << "\nincluded=" << res.included << "\nexcluded=" << res.excluded << "\n";
    return 0;
  }
  if (name == "constants") {
    auto z = zeta_constants();
    auto f = open("constants.txt");
    f << "c_Q = " << fmt12(z.c_k) << "\n";
    f << "varrho = " << fmt12(z.varrho) << "\n";
    f << "V2 = " << fmt12(z.V2) << "\n";
    f << "Z(2) = " << fmt12(Zk(2)) << "\n";
    f << "Z(4) = " << fmt12(Zk(4)) << "\n";
    return 0;
  }
  throw std::domain_error("unknown experiment: " + name +
                          " (expected census-all, jacobi, density-hamilton or constants)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the space of pairs of simple algebras"};
  app.require_subcommand(1);

  Config cfg;
  app.add_flag("--json", cfg.json_out, "structured output");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--height-bound", cfg.height_bound, "search height bound")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.census_budget, "work budget (census nodes, lattice states)")
      ->check(CLI::PositiveNumber);
  app.add_option("--prec", cfg.padic_prec, "p-adic refinement depth")->check(CLI::PositiveNumber);
  app.add_option("--terms", cfg.lseries_terms, "L-series truncation")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "output file or directory");

  // pvs
  auto* pvs = app.add_subcommand("pvs", "forms and invariants of pair points");
  std::string pointfile;
  auto* pvs_eval = pvs->add_subcommand("eval", "print F_x, P(x) and semistability");
  pvs_eval->add_option("pointfile", pointfile, "point file: 'desc | x1 | x2'")->required();

  // orbits
  auto* orbits = app.add_subcommand("orbits", "rational and finite-field orbits");
  std::string pf1, pf2;
  auto* ocls = orbits->add_subcommand("classify", "etale class of a semistable point");
  ocls->add_option("pointfile", pf1, "point file")->required();
  auto* oeq = orbits->add_subcommand("equiv", "decide orbit equivalence of two points");
  oeq->add_option("pointfile1", pf1, "first point file")->required();
  oeq->add_option("pointfile2", pf2, "second point file")->required();
  oeq->add_option("--height", cfg.height_bound, "height bound for the conjugator search");
  int census_n = 2;
  long long census_q = 2;
  auto* ocen = orbits->add_subcommand("census", "exhaustive orbit census over F_q");
  ocen->add_option("--n", census_n, "degree (2 or 3)")->required();
  ocen->add_option("--q", census_q, "field size (prime)")->required();

  // lg
  auto* lg = app.add_subcommand("lg", "local-global embeddability");
  std::string desc_str, declared, fstr;
  long long dval = 0;
  auto* lram = lg->add_subcommand("ramified", "ramified places M_D");
  lram->add_option("descriptor", desc_str, "algebra descriptor")->required();
  lram->add_option("--ramified", declared, "declared set for cyclic descriptors, e.g. 2,7");
  auto* lem2 = lg->add_subcommand("embed2", "does Q(sqrt d) embed into D");
  lem2->add_option("--d", dval, "squarefree integer")->required();
  lem2->add_option("descriptor", desc_str, "algebra descriptor")->required();
  lem2->add_option("--ramified", declared, "declared set for cyclic descriptors");
  auto* lem3 = lg->add_subcommand("embed3", "does Q[v]/(f) embed into D");
  lem3->add_option("--f", fstr, "monic integer cubic, coefficients low-to-high")->required();
  lem3->add_option("descriptor", desc_str, "algebra descriptor")->required();
  lem3->add_option("--ramified", declared, "declared set for cyclic descriptors");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "constants, counts, densities");
  zeta->add_subcommand("constants", "c_Q, varrho, V2");
  std::string order = "lipschitz";
  long long xbound = 10'000, xmax = 10'000;
  auto* zzw = zeta->add_subcommand("zw", "norm-count growth in a quaternion order");
  zzw->add_option("--order", order, "lipschitz or hurwitz")
      ->check(CLI::IsMember({"lipschitz", "hurwitz"}));
  zzw->add_option("--x", xbound, "count norms up to X");
  auto* zden = zeta->add_subcommand("density", "filtered h^2 R^2 accumulator");
  zden->add_option("--desc", desc_str, "descriptor (quat:a,b or mat:2)")->required();
  zden->add_option("--xmax", xmax, "largest |Delta|");
  zden->add_option("--ramified", declared, "declared set for cyclic descriptors");

  // selftest / experiment
  app.add_subcommand("selftest", "run the seeded invariant sweep");
  std::string expname;
  auto* exp = app.add_subcommand("experiment", "regenerate a golden data set");
  exp->add_option("name", expname, "census-all | jacobi | density-hamilton | constants")->required();

  // let global options (--json, --terms, ...) appear after subcommand names
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  try {
    if (pvs_eval->parsed()) return cmd_pvs_eval(cfg, pointfile);
    if (ocls->parsed()) return cmd_orbits_classify(cfg, pf1);
    if (oeq->parsed()) return cmd_orbits_equiv(cfg, pf1, pf2);
    if (ocen->parsed()) return cmd_orbits_census(cfg, census_n, census_q);
    if (lram->parsed()) return cmd_lg_ramified(cfg, desc_str, declared);
    if (lem2->parsed()) return cmd_lg_embed2(cfg, dval, desc_str, declared);
    if (lem3->parsed()) return cmd_lg_embed3(cfg, fstr, desc_str, declared);
    if (zeta->get_subcommand("constants")->parsed()) return cmd_zeta_constants(cfg);
    if (zzw->parsed()) return cmd_zeta_zw(cfg, order, xbound);
    if (zden->parsed()) return cmd_zeta_density(cfg, desc_str, xmax, declared);
    if (app.get_subcommand("selftest")->parsed()) return cmd_selftest(cfg);
    if (exp->parsed()) return cmd_experiment(cfg, expname);
    std::cerr << app.help() << "\n";
    return 64;
  } catch (const inconclusive_error& e) {
    std::cout << "inconclusive\n";
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
