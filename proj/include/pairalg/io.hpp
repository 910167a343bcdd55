#pragma once

// Text formats:
//   descriptors   "mat:n" | "quat:a,b" | "cyclic:f=c0,c1,c2,c3;sigma=s0,s1,s2;gamma=g"
//   scalars       "p/q" in lowest terms ("p" when q = 1)
//   polynomials   comma-separated coefficients, low-to-high
//   elements      semicolon-separated coordinate list
//   pair points   "desc | x1-coords | x2-coords"
//   place sets    comma-separated primes plus optional "inf"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "localglobal.hpp"
#include "pvs.hpp"

namespace pairalg {

namespace io {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

inline Poly<Rational> parse_poly(const std::string& s) {
  std::vector<Rational> c;
  for (auto& t : split(s, ',')) {
    if (t.empty()) throw std::domain_error("parse_poly: empty coefficient");
    c.push_back(Rational::parse(t));
  }
  return Poly<Rational>(c);
}

inline DescPtr<Rational> parse_descriptor(const std::string& in) {
  std::string s = trim(in);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::domain_error("descriptor: expected kind:params");
  std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  if (kind == "mat") {
    int n = std::stoi(rest);
    return make_split_matrix(n, Rational(1));
  }
  if (kind == "quat") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw std::domain_error("descriptor: quat needs a,b");
    return make_quaternion(Rational::parse(parts[0]), Rational::parse(parts[1]));
  }
  if (kind == "cyclic") {
    Poly<Rational> f, sigma;
    Rational gamma;
    bool have_f = false, have_s = false, have_g = false;
    for (auto& part : split(rest, ';')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw std::domain_error("descriptor: cyclic parts need key=value");
      std::string key = trim(part.substr(0, eq)), val = trim(part.substr(eq + 1));
      if (key == "f") { f = parse_poly(val); have_f = true; }
      else if (key == "sigma") { sigma = parse_poly(val); have_s = true; }
      else if (key == "gamma") { gamma = Rational::parse(val); have_g = true; }
      else throw std::domain_error("descriptor: unknown cyclic key '" + key + "'");
    }
    if (!have_f || !have_s || !have_g)
      throw std::domain_error("descriptor: cyclic needs f=, sigma= and gamma=");
    return make_cyclic_cubic(f, sigma, gamma);
  }
  throw std::domain_error("descriptor: unknown kind '" + kind + "'");
}

inline std::string descriptor_to_string(const DescPtr<Rational>& d) {
  switch (d->kind) {
    case AlgKind::SplitMatrix:
      return "mat:" + std::to_string(d->n);
    case AlgKind::Quaternion:
      return "quat:" + d->qa.to_string() + "," + d->qb.to_string();
    case AlgKind::CyclicCubic:
      return "cyclic:f=" + d->L->modulus.to_string() + ";sigma=" + d->sigma_image.rep.to_string() +
             ";gamma=" + d->gamma.to_string();
  }
  return "?";
}

inline std::string element_to_string(const AlgebraElement<Rational>& x) {
  std::string s;
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (i) s += ";";
    s += x.c[i].to_string();
  }
  return s;
}

inline AlgebraElement<Rational> parse_element(const DescPtr<Rational>& d, const std::string& s) {
  std::vector<Rational> c;
  for (auto& t : split(s, ';')) c.push_back(Rational::parse(t));
  return AlgebraElement<Rational>(d, std::move(c));
}

inline std::string point_to_string(const PairPoint<Rational>& x) {
  return descriptor_to_string(x.desc()) + " | " + element_to_string(x.x1) + " | " +
         element_to_string(x.x2);
}

inline PairPoint<Rational> parse_point(const std::string& line) {
  auto parts = split(line, '|');
  if (parts.size() != 3) throw std::domain_error("point: expected 'desc | x1 | x2'");
  auto d = parse_descriptor(parts[0]);
  return PairPoint<Rational>(parse_element(d, parts[1]), parse_element(d, parts[2]));
}

// first non-empty, non-comment line of the file
inline PairPoint<Rational> read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open point file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    return parse_point(t);
  }
  throw std::domain_error("point file has no point line: " + path);
}

inline PlaceSet parse_place_set(const std::string& s) {
  PlaceSet out;
  for (auto& t : split(s, ',')) {
    if (t.empty()) continue;
    if (t == "inf") out.add(Place::infinite());
    else out.add(Place::at(std::stoll(t)));
  }
  return out;
}

}  // namespace io

}  // namespace pairalg
