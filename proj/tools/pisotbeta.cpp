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

/* pisotbeta: greedy beta expansions of 1 for algebraic bases in (1,2),
   family catalogs, verification sweeps, and raster renderings.

   Exit codes: 0 success / all checks pass, 1 verification mismatch,
   2 usage or input error. */

#include <pisot/pisot.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pisot;

struct Range {
  int lo = 1;
  int hi = 1;
};

/* "a..b" (inclusive) or a bare "a". */
Range parse_range(const std::string& text) {
  try {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (want a..b)");
  }
}

void print_cofactor_report(std::ostream& os, const IntPolynomial& companion,
                           const RationalFunction& pseudo, const CofactorAnalysis& true_q) {
  os << "companion: " << format_polynomial(companion) << "\n";
  os << "pseudo co-factor: " << format_rational_function(pseudo) << "\n";
  if (true_q.is_polynomial) {
    os << "true co-factor: cyclotomic product " << (true_q.cyclotomic_product ? "yes" : "no");
    if (!true_q.cyclotomic_product)
      os << ", core " << format_polynomial(true_q.core) << " ("
         << (true_q.reciprocal ? "reciprocal" : "non-reciprocal") << ")";
    os << "\n";
  } else {
    os << "true co-factor: core does not divide the companion polynomial\n";
  }
}

int run_expand_poly(const std::string& text, std::size_t max_steps) {
  IntPolynomial p = parse_polynomial(text);
  if (p.degree() < 1 || !p.is_monic()) {
    std::cerr << "expand: polynomial must be monic of degree >= 1\n";
    return 2;
  }
  IntPolynomial sf = poly_squarefree_part(p);
  // roots exactly at the endpoints are outside the open interval
  if (poly_sign_at(sf, BigRat(1)) == 0) sf = *poly_exact_div(sf, IntPolynomial({-1, 1}));
  if (poly_sign_at(sf, BigRat(2)) == 0) sf = *poly_exact_div(sf, IntPolynomial({-2, 1}));
  const RationalInterval unit{BigRat(1), BigRat(2)};
  if (sf.degree() < 1 || sturm_count(sf, unit) != 1) {
    std::cerr << "expand: polynomial does not have a unique root in (1,2)\n";
    return 2;
  }
  // cyclotomic roots sit on the unit circle, so stripping them cannot lose
  // the base; the engine wants the smallest defining polynomial we can get
  CyclotomicSplit split = strip_cyclotomic_factors(sf);
  RealAlgebraic beta = make_real_algebraic(split.core, unit);
  ExpansionWord word = greedy_expand(beta, max_steps);

  IntPolynomial companion = companion_poly(word);
  RationalFunction pseudo = pseudo_cofactor(companion, p);
  CofactorAnalysis true_q = cofactor_analysis(RationalFunction(companion, split.core));

  std::cout << "word: " << format_word(word) << "\n";
  std::cout << "defining: " << format_polynomial(p) << "\n";
  print_cofactor_report(std::cout, companion, pseudo, true_q);
  std::cout << "parry: " << (parry_valid(word) ? "yes" : "no") << "\n";
  std::cout << "frg: " << (frg_check(word) ? "yes" : (word.finite() ? "no" : "no (not finite)"))
            << "\n";
  return 0;
}

int run_expand_family(const std::string& text, std::size_t max_steps) {
  const FamilyId id = parse_family(text);
  InstanceRecord rec = run_instance(id, CheckSet{}, max_steps);
  if (rec.status != InstanceStatus::OK) {
    std::cerr << "expand: " << format_family(id) << ": "
              << (rec.status == InstanceStatus::NO_ROOT ? "no root above 1"
                                                        : "root not inside (1,2)")
              << "\n";
    return 2;
  }
  std::cout << "word: " << format_word(*rec.word) << "\n";
  std::cout << "defining: " << format_polynomial(defining_poly(normalize_family(id))) << "\n";
  print_cofactor_report(std::cout, *rec.companion, *rec.pseudo, *rec.true_q);
  std::cout << "parry: " << (*rec.parry ? "yes" : "no") << "\n";
  std::cout << "frg: " << (*rec.frg ? "yes" : (rec.word->finite() ? "no" : "no (not finite)"))
            << "\n";
  for (const std::string& f : rec.failures) std::cerr << "warning: " << f << "\n";
  for (const std::string& s : rec.notes) std::cerr << "note: " << s << "\n";
  return 0;
}

int run_verify(const std::string& families, const Range& r, const Range& n,
               const std::string& checks_text, const std::string& jsonl_path,
               std::size_t max_steps) {
  const CheckSet checks = parse_checks(checks_text);
  const auto ids = sweep_instances(parse_family_selection(families), r.lo, r.hi, n.lo, n.hi);

  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep = run_sweep(ids, checks, max_steps);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

  std::ofstream file;
  if (!jsonl_path.empty()) {
    file.open(jsonl_path, std::ios::binary);
    if (!file) {
      std::cerr << "verify: cannot write " << jsonl_path << "\n";
      return 2;
    }
  }
  std::ostream& out = jsonl_path.empty() ? std::cout : file;
  std::size_t note_count = 0;
  for (const InstanceRecord& rec : rep.records) {
    out << jsonl_record(rec) << "\n";
    for (const std::string& f : rec.failures) std::cerr << "FAIL " << f << "\n";
    for (const std::string& s : rec.notes) {
      std::cerr << "note " << s << "\n";
      ++note_count;
    }
  }
  if (!jsonl_path.empty() && !file.good()) {
    std::cerr << "verify: error writing " << jsonl_path << "\n";
    return 2;
  }

  std::cerr << rep.records.size() << " instances, " << rep.failure_count << " failures, "
            << note_count << " notes, " << elapsed.count() << " ms\n";
  return rep.failure_count == 0 ? 0 : 1;
}

int run_render(const std::string& family, const Range& n, int width, const std::string& out_path) {
  const ParsedFamily fam = parse_family_parts(family);
  RasterImage img = render_family(fam, n.lo, n.hi, width);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "render: cannot write " << out_path << "\n";
    return 2;
  }
  write_ppm(file, img);
  file.flush();
  if (!file.good()) {
    std::cerr << "render: error writing " << out_path << "\n";
    return 2;
  }
  return 0;
}

int run_families() {
  std::cout <<
      "Regular Pisot families (words cover bases in (1,2); ranges are 1..512):\n"
      "\n"
      "  PhiR(r)      x^(r+1) - 2x^r + x - 1; word 1^r 0^(r-1) 1 for every r\n"
      "  PsiR(r)      x^(r+1) - x^r - ... - x - 1; word 1^(r+1) for every r\n"
      "  Chi          x^4 - x^3 - 2x^2 + 1; word 11(10)^w\n"
      "\n"
      "Perturbation families: defining = limit * x^n +- perturbation, sign in the\n"
      "name picks the branch (e.g. PhiA+(r,n), PhiA-(r,n)).\n"
      "\n"
      "  PhiA(r,n)    limit PhiR(r), perturbation x^r - x^(r-1) + 1\n"
      "               +: root for r+n >= 4 (PhiA+(r,n) = PhiA+(n+1,r-1) when n <= r-2);\n"
      "                  word branches on j = n mod 2r: j <= r-2 / j = r-1 / j >= r\n"
      "               -: root for n >= r (n = 2r-1, r = 1 excepted);\n"
      "                  word branches: r <= n <= 2r-2 / n = 2r-1 / n >= 2r\n"
      "  PhiB(r,n)    limit PhiR(r), perturbation x^r - x + 1\n"
      "               +: root for n >= 2 (n = 1 has none);\n"
      "                  word branches on j = n mod 2r as for PhiA+\n"
      "               -: root for every r,n; word branches: n <= r-1 / n = r /\n"
      "                  n >= r+1 via a = ceil(r/(n-r)) - 1 even or odd\n"
      "  PhiC(r,n)    limit PhiR(r), perturbation (x^r + 1)(x - 1)\n"
      "               +: symmetric in (r,n); word branches on n - r:\n"
      "                  0 / 1..r-1 / r / > r (special cases (1,1) and (2,2))\n"
      "               -: root for n >= r; word branches: n = r / r+1 <= n <= 2r-1 /\n"
      "                  n = 2r / n >= 2r+1 (periodic from n = r+1 on; r = 1: n >= 2)\n"
      "  PsiA(r,n)    limit PsiR(r), perturbation x^(r+1) - 1\n"
      "               +: same base and word as PhiB+(n,r+1)\n"
      "               -: root for n >= r+1; periodic word 1^(r+1)(0^(n-r-1) 1^r 0)^w\n"
      "  PsiB(r,n)    limit PsiR(r), perturbation 1 + x + ... + x^(r-1)\n"
      "               +: symmetric in (r,n); root except (1,1); word indexed by\n"
      "                  non-multiples of r+1 and n+1 up to lcm(r+1,n+1)\n"
      "               -: root for n >= r; word 1^(r+1) 0^(n-r) 1^r\n"
      "\n"
      "Quartic perturbation families (parameter n only):\n"
      "\n"
      "  ChiA(n)      limit Chi, perturbation x^3 + x^2 - x - 1\n"
      "               +: root for every n; word branches n = 1 / 2 / 4 / odd / even\n"
      "               -: root for n >= 4; periodic words, branches n even / odd\n"
      "  ChiB(n)      limit Chi, perturbation x^4 - x^2 + 1\n"
      "               +: root for every n; word branches n = 1 / 2 / 4 / odd / even\n"
      "                  (n even: periodic)\n"
      "               -: root for n >= 4; word branches n = 4 / 5 / even / odd\n"
      "                  (n odd >= 7: periodic)\n"
      "\n"
      "Render accepts a family with n left free (PhiB-(20), ChiA+, PsiR) and maps\n"
      "rows to n (to r for PhiR/PsiR).\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pisotbeta: exact greedy beta expansions for regular Pisot families"};
  app.require_subcommand(1);

  std::string poly_text, family_text;
  std::size_t max_steps = kDefaultMaxSteps;
  CLI::App* expand = app.add_subcommand("expand", "expansion of 1 for one base");
  auto* poly_opt = expand->add_option("--poly", poly_text, "monic integer polynomial text");
  auto* family_opt = expand->add_option("--family", family_text, "family instance, e.g. PhiA+(2,3)");
  poly_opt->excludes(family_opt);
  expand->add_option("--max-steps", max_steps, "greedy expansion step cap");

  std::string families = "all", checks = "all", jsonl_path;
  std::string r_text = "1..6", n_text = "1..40";
  CLI::App* verify = app.add_subcommand("verify", "sweep the catalog against the exact engine");
  verify->add_option("--families", families, "all, or comma list (PhiA+, ChiB-, ...)");
  verify->add_option("--r", r_text, "r range a..b");
  verify->add_option("--n", n_text, "n range a..b");
  verify->add_option("--checks", checks, "comma subset of expansion,cofactor,parry,boyd,frg,identities");
  verify->add_option("--jsonl", jsonl_path, "write the report here instead of stdout");
  verify->add_option("--max-steps", max_steps, "greedy expansion step cap");

  std::string render_family_text, render_out = "out.ppm";
  std::string render_n = "1..100";
  int width = kDefaultRenderWidth;
  CLI::App* render = app.add_subcommand("render", "raster image of a family's expansions");
  render->add_option("--family", render_family_text, "family with n left free, e.g. PhiB-(20)")
      ->required();
  render->add_option("--n", render_n, "row range a..b");
  render->add_option("--width", width, "digits per row");
  render->add_option("--out", render_out, "output PPM path");

  CLI::App* list = app.add_subcommand("families", "list family syntaxes and word branches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (expand->parsed()) {
      if (poly_text.empty() == family_text.empty()) {
        std::cerr << "expand: need exactly one of --poly or --family\n";
        return 2;
      }
      return poly_text.empty() ? run_expand_family(family_text, max_steps)
                               : run_expand_poly(poly_text, max_steps);
    }
    if (verify->parsed())
      return run_verify(families, parse_range(r_text), parse_range(n_text), checks, jsonl_path,
                        max_steps);
    if (render->parsed())
      return run_render(render_family_text, parse_range(render_n), width, render_out);
    if (list->parsed()) return run_families();
  } catch (const StepLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
