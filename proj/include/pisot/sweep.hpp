/*
   Copyright 2026 the pisotbeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <pisot/catalog.hpp>
#include <pisot/companion.hpp>
#include <pisot/family.hpp>
#include <pisot/greedy.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pisot {

/* Which per-instance property suites a verification sweep evaluates. */
struct CheckSet {
  bool expansion = true;   // catalog word == word from the exact greedy engine
  bool cofactor = true;    // pseudo co-factor == published formula, where one is given
  bool parry = true;       // word satisfies the greedy admissibility criterion
  bool boyd = true;        // cyclotomicity pattern of the true co-factor
  bool frg = true;         // finite-reversibly-greedy classification
  bool identities = true;  // cross-family defining-polynomial identities
};

inline CheckSet parse_checks(const std::string& text) {
  CheckSet off{false, false, false, false, false, false};
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string name = text.substr(i, j - i);
    if (name == "expansion") off.expansion = true;
    else if (name == "cofactor") off.cofactor = true;
    else if (name == "parry") off.parry = true;
    else if (name == "boyd") off.boyd = true;
    else if (name == "frg") off.frg = true;
    else if (name == "identities") off.identities = true;
    else if (name == "all") off = CheckSet{};
    else throw std::invalid_argument("unknown check '" + name + "'");
    i = j + 1;
  }
  return off;
}

/* Everything the sweep learned about one (family, r, n) instance.  Optional
   fields stay empty when the instance has no root in (1,2).  `id` is the
   instance as requested; reindexing duplicates are not folded here. */
struct InstanceRecord {
  FamilyId id;
  InstanceStatus status = InstanceStatus::NO_ROOT;
  std::optional<ExpansionWord> word;       // canonical expansion of 1
  std::optional<IntPolynomial> companion;  // from the catalog word as printed
  std::optional<RationalFunction> pseudo;  // companion / defining polynomial
  std::optional<CofactorAnalysis> true_q;  // companion / non-cyclotomic core
  std::optional<bool> parry;
  std::optional<bool> frg;
  std::optional<bool> engine_match;
  long long ms = 0;  // kept zero in reports so identical runs stay byte-identical
  std::vector<std::string> failures;  // violated checks
  std::vector<std::string> notes;     // observed-vs-published deviations, not failures
};

namespace detail {

/* The reindexing identities relating different Table 1 parameterizations.
   Checked on the defining polynomials as constructed, without the folding
   normalize_family() performs (that folding is what these justify). */
inline void append_identity_failures(const FamilyId& id, std::vector<std::string>* out) {
  if (id.sign <= 0) return;
  const auto defp = [](FamilyKind k, int r, int n) {
    FamilyId q;
    q.kind = k;
    q.sign = 1;
    q.r = r;
    q.n = n;
    return defining_poly(q);
  };
  const auto fail = [&](const std::string& what) {
    out->push_back("identities: " + format_family(id) + " " + what);
  };
  switch (id.kind) {
    case FamilyKind::PhiA:
      if (id.r >= 2 && id.n + 1 <= kMaxFamilyParam &&
          defp(FamilyKind::PhiA, id.r, id.n) != defp(FamilyKind::PhiA, id.n + 1, id.r - 1))
        fail("!= PhiA+(" + std::to_string(id.n + 1) + "," + std::to_string(id.r - 1) + ")");
      break;
    case FamilyKind::PhiC:
      if (defp(FamilyKind::PhiC, id.r, id.n) != defp(FamilyKind::PhiC, id.n, id.r))
        fail("!= PhiC+(" + std::to_string(id.n) + "," + std::to_string(id.r) + ")");
      break;
    case FamilyKind::PsiA:
      if (id.r + 1 <= kMaxFamilyParam &&
          defp(FamilyKind::PsiA, id.r, id.n) * x_pow_minus_one(1) !=
              defp(FamilyKind::PhiB, id.n, id.r + 1))
        fail("* (x-1) != PhiB+(" + std::to_string(id.n) + "," + std::to_string(id.r + 1) + ")");
      break;
    case FamilyKind::PsiB:
      if (defp(FamilyKind::PsiB, id.r, id.n) != defp(FamilyKind::PsiB, id.n, id.r))
        fail("!= PsiB+(" + std::to_string(id.n) + "," + std::to_string(id.r) + ")");
      break;
    default:
      break;
  }
}

}  // namespace detail

/* Runs the selected checks on one instance.  The exact greedy engine is only
   invoked when the expansion check is on; everything else derives from the
   catalog word and the defining polynomial. */
inline InstanceRecord run_instance(const FamilyId& id, const CheckSet& checks,
                                   std::size_t max_steps = kDefaultMaxSteps) {
  InstanceRecord rec;
  rec.id = id;
  const std::string tag = format_family(id);

  if (checks.identities) detail::append_identity_failures(id, &rec.failures);

  CatalogEntry ent = catalog_expansion(id);
  rec.status = ent.status;
  if (rec.status != InstanceStatus::OK) return rec;

  const ExpansionWord& raw = *ent.word;  // verbatim catalog formula output
  ExpansionWord canon = canonicalize(raw);
  const IntPolynomial defining = defining_poly(normalize_family(id));

  rec.companion = companion_poly(raw);
  rec.pseudo = pseudo_cofactor(*rec.companion, defining);
  CyclotomicSplit split = strip_cyclotomic_factors(poly_squarefree_part(defining));
  rec.true_q = cofactor_analysis(RationalFunction(*rec.companion, split.core));

  if (checks.expansion) {
    // run the engine on the certified minimal polynomial, not the raw
    // defining polynomial: periodic remainders only recur over the core
    std::optional<RealAlgebraic> root = pisot_root_of(id);
    if (!root) {
      rec.failures.push_back("expansion: " + tag + " has no certified Pisot root");
      rec.word = canon;
    } else {
      ExpansionWord engine = greedy_expand(*root, max_steps);
      rec.engine_match = canon == engine;
      if (!*rec.engine_match)
        rec.failures.push_back("expansion: " + tag + " catalog word " + format_word(canon) +
                               " != engine word " + format_word(engine));
      rec.word = std::move(engine);
    }
  } else {
    rec.word = canon;
  }

  rec.parry = parry_valid(canon);
  if (checks.parry && !*rec.parry)
    rec.failures.push_back("parry: " + tag + " word " + format_word(canon) +
                           " fails the admissibility criterion");

  if (checks.cofactor) {
    if (auto cell = catalog_cofactor(id); cell && *rec.pseudo != *cell)
      rec.failures.push_back("cofactor: " + tag + " pseudo co-factor " +
                             format_rational_function(*rec.pseudo) + " != published " +
                             format_rational_function(*cell));
  }

  if (checks.boyd) {
    // Non-cyclotomic true co-factors occur for ChiB-(odd n >= 7) and
    // ChiB+(even n >= 4).  The published boundary for ChiB- is n >= 5, but the
    // n = 5 co-factor is x^7+x^5+x^2+1 = Phi_2 Phi_4 Phi_10 -- the published
    // table's own cell, a cyclotomic product.  n = 5 is the special-cased row
    // whose word breaks the general odd-n pattern; we note the discrepancy.
    const bool want_noncyclotomic =
        id.kind == FamilyKind::ChiB && ((id.sign < 0 && id.n >= 7 && id.n % 2 == 1) ||
                                        (id.sign > 0 && id.n >= 4 && id.n % 2 == 0));
    if (!rec.true_q->is_polynomial)
      rec.failures.push_back("boyd: " + tag + " core does not divide the companion polynomial");
    else if (rec.true_q->cyclotomic_product == want_noncyclotomic)
      rec.failures.push_back("boyd: " + tag + " true co-factor is " +
                             (want_noncyclotomic ? "a cyclotomic product (expected not)"
                                                 : "not a cyclotomic product"));
    else if (want_noncyclotomic && rec.true_q->reciprocal)
      rec.failures.push_back("boyd: " + tag + " non-cyclotomic core is reciprocal");
    if (id.kind == FamilyKind::ChiB && id.sign < 0 && id.n == 5)
      rec.notes.push_back("boyd: " + tag + " true co-factor x^7+x^5+x^2+1 is cyclotomic "
                          "(Phi_2 Phi_4 Phi_10) although the published rule starts the "
                          "non-cyclotomic range at odd n >= 5");
  }

  rec.frg = frg_check(canon);
  if (checks.frg) {
    const FrgClass measured = !canon.finite() ? FrgClass::NOT_FINITE
                              : *rec.frg      ? FrgClass::FRG
                                              : FrgClass::FINITE_NOT_FRG;
    const FrgClass expected = frg_expected(id, rec.status);
    if (measured != expected)
      rec.failures.push_back(std::string("frg: ") + tag + " is " + frg_class_name(measured) +
                             ", classifier says " + frg_class_name(expected));
    const FrgClass published = frg_published(id, rec.status);
    if (published != expected)
      rec.notes.push_back(std::string("frg: ") + tag + " is " + frg_class_name(expected) +
                          " although the published rule lists " + frg_class_name(published));
    if (frg_bullet_conflict(id))
      rec.notes.push_back("frg: " + tag + " falls in the published n = r+1, r even case whose "
                          "two rules disagree");
  }

  return rec;
}

// ---------------------------------------------------------------------------
// Sweep enumeration: deterministic (family, r, n) order.

/* One family column of the sweep: a kind plus a perturbation sign
   (0 for the limit families, which take none). */
struct FamilySelector {
  FamilyKind kind = FamilyKind::Chi;
  int sign = 0;

  friend bool operator==(const FamilySelector& a, const FamilySelector& b) {
    return a.kind == b.kind && a.sign == b.sign;
  }
};

/* Canonical column order: the published table order, + before - within a
   kind.  Sweeps always emit records in this order regardless of how the
   selection was written. */
inline const std::vector<FamilySelector>& all_family_selectors() {
  static const std::vector<FamilySelector> all = {
      {FamilyKind::PhiR, 0}, {FamilyKind::PsiR, 0}, {FamilyKind::Chi, 0},
      {FamilyKind::PhiA, 1}, {FamilyKind::PhiA, -1}, {FamilyKind::PhiB, 1},
      {FamilyKind::PhiB, -1}, {FamilyKind::PhiC, 1}, {FamilyKind::PhiC, -1},
      {FamilyKind::PsiA, 1}, {FamilyKind::PsiA, -1}, {FamilyKind::PsiB, 1},
      {FamilyKind::PsiB, -1}, {FamilyKind::ChiA, 1}, {FamilyKind::ChiA, -1},
      {FamilyKind::ChiB, 1}, {FamilyKind::ChiB, -1}};
  return all;
}

/* "all", or a comma list of family names; an omitted sign on a perturbation
   family selects both branches.  Parameter lists are rejected here — ranges
   come from rRange/nRange. */
inline std::vector<FamilySelector> parse_family_selection(const std::string& text) {
  std::vector<bool> wanted(all_family_selectors().size(), false);
  const auto mark = [&](FamilyKind k, int sign) {
    const auto& all = all_family_selectors();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == FamilySelector{k, sign}) wanted[i] = true;
  };
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    const std::string item = text.substr(i, j - i);
    if (item == "all") {
      std::fill(wanted.begin(), wanted.end(), true);
    } else {
      ParsedFamily p = parse_family_parts(item);
      if (!p.args.empty())
        throw std::invalid_argument("family selection '" + item + "' must not fix parameters");
      if (!family_has_sign(p.kind)) {
        mark(p.kind, 0);
      } else if (p.sign != 0) {
        mark(p.kind, p.sign);
      } else {
        mark(p.kind, 1);
        mark(p.kind, -1);
      }
    }
    i = j + 1;
  }
  std::vector<FamilySelector> out;
  for (std::size_t k = 0; k < wanted.size(); ++k)
    if (wanted[k]) out.push_back(all_family_selectors()[k]);
  if (out.empty()) throw std::invalid_argument("empty family selection");
  return out;
}

/* Expands selectors over inclusive parameter ranges; r outer, n inner.
   PhiR/PsiR only consume the r range, ChiA/ChiB only the n range, and Chi
   is a single instance. */
inline std::vector<FamilyId> sweep_instances(const std::vector<FamilySelector>& selection,
                                             int r_lo, int r_hi, int n_lo, int n_hi) {
  if (r_lo < 1 || r_hi > kMaxFamilyParam || r_lo > r_hi)
    throw std::invalid_argument("sweep: bad r range");
  if (n_lo < 1 || n_hi > kMaxFamilyParam || n_lo > n_hi)
    throw std::invalid_argument("sweep: bad n range");
  std::vector<FamilyId> out;
  for (const FamilySelector& sel : all_family_selectors()) {
    if (std::find(selection.begin(), selection.end(), sel) == selection.end()) continue;
    FamilyId id;
    id.kind = sel.kind;
    id.sign = sel.sign;
    if (sel.kind == FamilyKind::Chi) {
      out.push_back(id);
    } else if (!family_has_n(sel.kind)) {
      for (int r = r_lo; r <= r_hi; ++r) {
        id.r = r;
        out.push_back(id);
      }
    } else if (!family_has_r(sel.kind)) {
      for (int n = n_lo; n <= n_hi; ++n) {
        id.n = n;
        out.push_back(id);
      }
    } else {
      for (int r = r_lo; r <= r_hi; ++r)
        for (int n = n_lo; n <= n_hi; ++n) {
          id.r = r;
          id.n = n;
          out.push_back(id);
        }
    }
  }
  return out;
}

struct SweepReport {
  std::vector<InstanceRecord> records;
  std::size_t failure_count = 0;
};

inline SweepReport run_sweep(const std::vector<FamilyId>& ids, const CheckSet& checks,
                             std::size_t max_steps = kDefaultMaxSteps) {
  SweepReport rep;
  rep.records.reserve(ids.size());
  for (const FamilyId& id : ids) {
    rep.records.push_back(run_instance(id, checks, max_steps));
    rep.failure_count += rep.records.back().failures.size();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSONL report lines.

inline std::string family_field(const FamilyId& id) {
  std::string s = family_kind_name(id.kind);
  if (id.sign > 0) s += '+';
  if (id.sign < 0) s += '-';
  return s;
}

/* One report line.  Key order is part of the format; every value is plain
   ASCII from our own formatters, so no JSON escaping is needed. */
inline std::string jsonl_record(const InstanceRecord& rec) {
  std::ostringstream os;
  const auto put_bool = [&](const std::optional<bool>& b) {
    if (b) os << (*b ? "true" : "false");
    else os << "null";
  };
  os << "{\"family\":\"" << family_field(rec.id) << "\",\"r\":";
  if (family_has_r(rec.id.kind)) os << rec.id.r;
  else os << "null";
  os << ",\"n\":";
  if (family_has_n(rec.id.kind)) os << rec.id.n;
  else os << "null";
  os << ",\"status\":\"" << instance_status_name(rec.status) << "\",\"word\":";
  if (rec.word) os << '"' << format_word(*rec.word) << '"';
  else os << "null";
  os << ",\"companion\":";
  if (rec.companion) os << '"' << format_polynomial(*rec.companion) << '"';
  else os << "null";
  os << ",\"pseudo_cofactor\":";
  if (rec.pseudo) os << '"' << format_rational_function(*rec.pseudo) << '"';
  else os << "null";
  os << ",\"true_cofactor_cyclotomic\":";
  put_bool(rec.true_q ? std::optional<bool>(rec.true_q->cyclotomic_product) : std::nullopt);
  os << ",\"true_cofactor_reciprocal\":";
  put_bool(rec.true_q ? std::optional<bool>(rec.true_q->reciprocal) : std::nullopt);
  os << ",\"parry\":";
  put_bool(rec.parry);
  os << ",\"frg\":";
  put_bool(rec.frg);
  os << ",\"engine_match\":";
  put_bool(rec.engine_match);
  os << ",\"ms\":" << rec.ms << "}";
  return os.str();
}

}  // namespace pisot
