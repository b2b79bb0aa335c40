// Copyright 2026 the pisotbeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The regular Pisot-number families in (1, 2).
//
// The Pisot numbers in (1, 2) accumulate at the limit points phi_r
// (root of x^{r+1} - 2x^r + x - 1), psi_r (root of x^{r+1} - x^r -
// ... - x - 1) and chi (root of x^4 - x^3 - 2x^2 + 1, between phi_2
// and psi_2).  The regular Pisot numbers approaching them are roots of
// the limit polynomial times x^n plus or minus a fixed perturbation:
//
//   PhiA+-(r,n) = Phi_r x^n +- (x^r - x^{r-1} + 1)
//   PhiB+-(r,n) = Phi_r x^n +- (x^r - x + 1)
//   PhiC+-(r,n) = Phi_r x^n +- (x^r + 1)(x - 1)
//   PsiA+-(r,n) = Psi_r x^n +- (x^{r+1} - 1)
//   PsiB+-(r,n) = Psi_r x^n +- (x^{r-1} + ... + x + 1)
//   ChiA+-(n)   = Chi  x^n +- (x^3 + x^2 - x - 1)
//   ChiB+-(n)   = Chi  x^n +- (x^4 - x^2 + 1)
//
// These polynomials are generally reducible; the family member is the
// unique root in (1, 2) when there is one.  classify_root() decides
// exactly which of the three cases holds (root in (1, 2), no root
// above 1 at all, or roots above 1 but none in the open interval),
// and pisot_root_of() additionally certifies the Pisot property of
// the non-cyclotomic core.
//
// Parameters r and n start at 1.  (Some published parameter tables
// nominally admit n = 0, but every such instance degenerates — e.g.
// PhiA+(r,0) collapses to x times a lower family member — so the id
// domain here excludes it.)

#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisot/cyclotomic.hpp"
#include "pisot/pisot_check.hpp"
#include "pisot/polynomial.hpp"
#include "pisot/real_algebraic.hpp"

namespace pisot {

enum class FamilyKind { PhiR, PsiR, Chi, PhiA, PhiB, PhiC, PsiA, PsiB, ChiA, ChiB };

constexpr bool family_has_sign(FamilyKind k) {
  return k != FamilyKind::PhiR && k != FamilyKind::PsiR && k != FamilyKind::Chi;
}
constexpr bool family_has_r(FamilyKind k) {
  return k == FamilyKind::PhiR || k == FamilyKind::PsiR || k == FamilyKind::PhiA ||
         k == FamilyKind::PhiB || k == FamilyKind::PhiC || k == FamilyKind::PsiA ||
         k == FamilyKind::PsiB;
}
constexpr bool family_has_n(FamilyKind k) { return family_has_sign(k); }

// Upper bound on r and n; keeps defining-polynomial degrees comfortably
// inside the range the cyclotomic screen is sized for.
constexpr int kMaxFamilyParam = 512;

struct FamilyId {
  FamilyKind kind = FamilyKind::Chi;
  int sign = 0;  // +1 or -1 for perturbation families, 0 for limit families
  int r = 0;     // 0 when the kind has no r parameter
  int n = 0;     // 0 when the kind has no n parameter

  friend bool operator==(const FamilyId& a, const FamilyId& b) {
    return a.kind == b.kind && a.sign == b.sign && a.r == b.r && a.n == b.n;
  }
  friend bool operator!=(const FamilyId& a, const FamilyId& b) { return !(a == b); }
};

inline void validate_family(const FamilyId& id) {
  if (family_has_sign(id.kind)) {
    if (id.sign != 1 && id.sign != -1)
      throw std::invalid_argument("family id: sign must be + or -");
  } else if (id.sign != 0) {
    throw std::invalid_argument("family id: limit family takes no sign");
  }
  if (family_has_r(id.kind)) {
    if (id.r < 1 || id.r > kMaxFamilyParam)
      throw std::invalid_argument("family id: r out of range");
  } else if (id.r != 0) {
    throw std::invalid_argument("family id: kind takes no r parameter");
  }
  if (family_has_n(id.kind)) {
    if (id.n < 1 || id.n > kMaxFamilyParam)
      throw std::invalid_argument("family id: n out of range");
  } else if (id.n != 0) {
    throw std::invalid_argument("family id: kind takes no n parameter");
  }
}

inline IntPolynomial phi_limit_poly(int r) {
  // x^{r+1} - 2x^r + x - 1
  IntPolynomial p = IntPolynomial::monomial(r + 1) - BigInt(2) * IntPolynomial::monomial(r);
  return p + IntPolynomial::monomial(1) - IntPolynomial::constant(1);
}

inline IntPolynomial psi_limit_poly(int r) {
  // x^{r+1} - (x^r + ... + x + 1)
  return IntPolynomial::monomial(r + 1) - geometric_sum(r + 1);
}

inline IntPolynomial chi_limit_poly() { return IntPolynomial({1, 0, -2, -1, 1}); }

namespace detail {

inline IntPolynomial family_perturbation(FamilyKind k, int r) {
  switch (k) {
    case FamilyKind::PhiA:
      return IntPolynomial::monomial(r) - IntPolynomial::monomial(r - 1) +
             IntPolynomial::constant(1);
    case FamilyKind::PhiB:
      return IntPolynomial::monomial(r) - IntPolynomial::monomial(1) + IntPolynomial::constant(1);
    case FamilyKind::PhiC:
      return (IntPolynomial::monomial(r) + IntPolynomial::constant(1)) *
             (IntPolynomial::monomial(1) - IntPolynomial::constant(1));
    case FamilyKind::PsiA:
      return x_pow_minus_one(r + 1);
    case FamilyKind::PsiB:
      return geometric_sum(r);
    case FamilyKind::ChiA:
      return IntPolynomial({-1, -1, 1, 1});
    case FamilyKind::ChiB:
      return IntPolynomial({1, 0, -1, 0, 1});
    default:
      throw std::logic_error("family_perturbation: limit family");
  }
}

inline IntPolynomial family_limit(FamilyKind k, int r) {
  switch (k) {
    case FamilyKind::PhiA:
    case FamilyKind::PhiB:
    case FamilyKind::PhiC:
      return phi_limit_poly(r);
    case FamilyKind::PsiA:
    case FamilyKind::PsiB:
      return psi_limit_poly(r);
    case FamilyKind::ChiA:
    case FamilyKind::ChiB:
      return chi_limit_poly();
    default:
      throw std::logic_error("family_limit: limit family");
  }
}

}  // namespace detail

inline IntPolynomial defining_poly(const FamilyId& id) {
  validate_family(id);
  switch (id.kind) {
    case FamilyKind::PhiR:
      return phi_limit_poly(id.r);
    case FamilyKind::PsiR:
      return psi_limit_poly(id.r);
    case FamilyKind::Chi:
      return chi_limit_poly();
    default: {
      IntPolynomial p = detail::family_limit(id.kind, id.r).shifted(id.n);
      IntPolynomial q = detail::family_perturbation(id.kind, id.r);
      return id.sign > 0 ? p + q : p - q;
    }
  }
}

// Two reindexing identities fold duplicate parameterizations onto a single
// representative: PhiA+(r,n) = PhiA+(n+1, r-1) for 1 <= n <= r-2, and
// PhiC+(r,n) = PhiC+(n,r).  Normalizing guarantees the expansion-word
// branch tables below never see the degenerate side.
inline FamilyId normalize_family(FamilyId id) {
  validate_family(id);
  if (id.kind == FamilyKind::PhiA && id.sign > 0 && id.n >= 1 && id.n <= id.r - 2) {
    int r = id.n + 1, n = id.r - 1;
    id.r = r;
    id.n = n;
  } else if (id.kind == FamilyKind::PhiC && id.sign > 0 && id.n < id.r) {
    std::swap(id.r, id.n);
  }
  return id;
}

inline std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::PhiR: return "PhiR";
    case FamilyKind::PsiR: return "PsiR";
    case FamilyKind::Chi:  return "Chi";
    case FamilyKind::PhiA: return "PhiA";
    case FamilyKind::PhiB: return "PhiB";
    case FamilyKind::PhiC: return "PhiC";
    case FamilyKind::PsiA: return "PsiA";
    case FamilyKind::PsiB: return "PsiB";
    case FamilyKind::ChiA: return "ChiA";
    case FamilyKind::ChiB: return "ChiB";
  }
  throw std::logic_error("family_kind_name: bad kind");
}

inline std::string format_family(const FamilyId& id) {
  validate_family(id);
  std::string out = family_kind_name(id.kind);
  if (family_has_sign(id.kind)) out += id.sign > 0 ? '+' : '-';
  if (family_has_r(id.kind) && family_has_n(id.kind))
    out += "(" + std::to_string(id.r) + "," + std::to_string(id.n) + ")";
  else if (family_has_r(id.kind))
    out += "(" + std::to_string(id.r) + ")";
  else if (family_has_n(id.kind))
    out += "(" + std::to_string(id.n) + ")";
  return out;
}

// Raw parse result: family name, optional sign, whatever argument list was
// supplied.  parse_family() validates full arity; the render front end
// accepts the n-argument omitted.
struct ParsedFamily {
  FamilyKind kind = FamilyKind::Chi;
  int sign = 0;
  std::vector<int> args;
};

inline ParsedFamily parse_family_parts(const std::string& text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  std::string name;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) name += text[i++];
  ParsedFamily out;
  if (name == "PhiR") out.kind = FamilyKind::PhiR;
  else if (name == "PsiR") out.kind = FamilyKind::PsiR;
  else if (name == "Chi") out.kind = FamilyKind::Chi;
  else if (name == "PhiA") out.kind = FamilyKind::PhiA;
  else if (name == "PhiB") out.kind = FamilyKind::PhiB;
  else if (name == "PhiC") out.kind = FamilyKind::PhiC;
  else if (name == "PsiA") out.kind = FamilyKind::PsiA;
  else if (name == "PsiB") out.kind = FamilyKind::PsiB;
  else if (name == "ChiA") out.kind = FamilyKind::ChiA;
  else if (name == "ChiB") out.kind = FamilyKind::ChiB;
  else throw std::invalid_argument("unknown family name '" + name + "'");
  skip_ws();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    out.sign = text[i] == '+' ? 1 : -1;
    ++i;
  }
  skip_ws();
  if (i < text.size() && text[i] == '(') {
    ++i;
    for (;;) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("family text: expected integer parameter");
      long v = std::stol(text.substr(start, i - start));
      if (v < -kMaxFamilyParam || v > kMaxFamilyParam)
        throw std::invalid_argument("family text: parameter out of range");
      out.args.push_back(static_cast<int>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("family text: expected ',' or ')'");
    }
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("family text: trailing characters");
  return out;
}

inline FamilyId family_from_parts(const ParsedFamily& p) {
  FamilyId id;
  id.kind = p.kind;
  id.sign = p.sign;
  std::size_t want = (family_has_r(p.kind) ? 1u : 0u) + (family_has_n(p.kind) ? 1u : 0u);
  if (p.args.size() != want)
    throw std::invalid_argument("family text: expected " + std::to_string(want) +
                                " parameter(s) for " + family_kind_name(p.kind));
  std::size_t at = 0;
  if (family_has_r(p.kind)) id.r = p.args[at++];
  if (family_has_n(p.kind)) id.n = p.args[at++];
  validate_family(id);
  return id;
}

inline FamilyId parse_family(const std::string& text) {
  return family_from_parts(parse_family_parts(text));
}

enum class InstanceStatus { OK, NO_ROOT, ROOT_NOT_IN_1_2 };

inline const char* instance_status_name(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::OK: return "OK";
    case InstanceStatus::NO_ROOT: return "NO_ROOT";
    case InstanceStatus::ROOT_NOT_IN_1_2: return "ROOT_NOT_IN_1_2";
  }
  throw std::logic_error("instance_status_name: bad status");
}

struct RootClassification {
  InstanceStatus status = InstanceStatus::NO_ROOT;
  std::optional<RealAlgebraic> root;  // present iff status == OK, isolated within (1, 2)
};

// Exact trichotomy: unique root in (1,2) / nothing above 1 / above 1 but
// not inside (1,2).  A hypothetical instance with two roots inside (1,2)
// would throw; no family instance does.
inline RootClassification classify_root(const FamilyId& id) {
  IntPolynomial p = defining_poly(normalize_family(id));
  if (p.is_zero()) return {InstanceStatus::NO_ROOT, std::nullopt};
  if (p.leading() < 0) p = -p;
  IntPolynomial f = poly_squarefree_part(p);
  const IntPolynomial x_minus_1({-1, 1});
  while (!f.is_constant() && poly_eval(f, BigInt(1)) == 0) f = poly_div_rem(f, x_minus_1).first;
  if (f.is_constant()) return {InstanceStatus::NO_ROOT, std::nullopt};

  BigInt maxc = 0;
  for (int i = 0; i <= f.degree(); ++i) {
    BigInt a = abs(f.coeff(i));
    if (a > maxc) maxc = a;
  }
  const RationalInterval above_1(BigRat(1), BigRat(maxc + 2));
  if (sturm_count(f, above_1) == 0) return {InstanceStatus::NO_ROOT, std::nullopt};

  IntPolynomial g = f;
  if (poly_eval(g, BigInt(2)) == 0) g = poly_div_rem(g, IntPolynomial({-2, 1})).first;
  const RationalInterval unit_2(BigRat(1), BigRat(2));
  const int in12 = g.is_constant() ? 0 : sturm_count(g, unit_2);
  if (in12 == 0) return {InstanceStatus::ROOT_NOT_IN_1_2, std::nullopt};
  if (in12 > 1) throw std::domain_error("classify_root: several roots in (1,2)");
  RealAlgebraic a = make_real_algebraic(g, RationalInterval(BigRat(1), BigRat(2)));
  return {InstanceStatus::OK, std::move(a)};
}

// The certified Pisot root of the instance, represented over the
// cyclotomic-free core of the defining polynomial (the minimal-polynomial
// candidate).  nullopt when there is no root in (1,2) or the core fails
// the Pisot test.
inline std::optional<RealAlgebraic> pisot_root_of(const FamilyId& id) {
  RootClassification c = classify_root(id);
  if (c.status != InstanceStatus::OK) return std::nullopt;
  IntPolynomial p = defining_poly(normalize_family(id));
  if (p.leading() < 0) p = -p;
  CyclotomicSplit split = strip_cyclotomic_factors(poly_squarefree_part(p));
  if (split.core.is_constant()) return std::nullopt;
  if (!pisot_verify(split.core)) return std::nullopt;
  return make_real_algebraic(split.core, c.root->isol);
}

}  // namespace pisot
