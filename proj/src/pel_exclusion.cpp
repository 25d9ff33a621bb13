#include "covers/pel_exclusion.hpp"

#include <string>

#include "covers/errors.hpp"
#include "covers/modular.hpp"

namespace covers {

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

void check_genus(std::int64_t g) {
  if (g < 2)
    throw ValidationError(ValidationError::Code::BadGenus,
                          "g = " + num(g) + ", need g >= 2");
}

}  // namespace

ExclusionReport exclude_type_I(std::int64_t g) {
  check_genus(g);
  ExclusionReport rep;
  rep.g = g;
  rep.albert_type = AlbertType::I;

  // For g <= 3 the Torelli locus is all of A_g, so no special subvariety
  // can be excluded from it; the rules below only make sense from g = 4 on.
  const bool torelli_is_everything = (g <= 3);
  if (torelli_is_everything)
    rep.notes.push_back("T_g = A_g for g <= 3; every special subvariety of "
                        "A_g lies in the Torelli locus");

  for (std::int64_t e : divisors(g)) {
    ExclusionCase c;
    c.e = e;
    c.h = g / e;
    c.dim_s = e * c.h * (c.h + 1) / 2;  // = g(g+e)/2e
    c.rule_trace.push_back("dim S = e*h(h+1)/2 = " + num(c.dim_s) +
                           " with e = " + num(e) + ", h = " + num(c.h));
    if (torelli_is_everything) {
      c.verdict = CaseVerdict::NotExcludedByTheseArguments;
      c.rule_trace.push_back("T_g = A_g: nothing to exclude");
      rep.cases.push_back(std::move(c));
      continue;
    }

    const std::int64_t moduli_bound = 2 * g - 2;
    if (c.dim_s > moduli_bound) {
      c.verdict = CaseVerdict::Excluded;
      c.rule_trace.push_back(
          "R1: dim S = " + num(c.dim_s) + " > 2g-2 = " + num(moduli_bound) +
          " (a subvariety with extra endomorphisms has dim <= 2g-2)");
    } else {
      c.rule_trace.push_back("R1: dim S = " + num(c.dim_s) +
                             " <= 2g-2 = " + num(moduli_bound) +
                             ", not applicable");
      if (e == g) {
        // g >= 4 here
        c.verdict = CaseVerdict::Excluded;
        c.rule_trace.push_back(
            "R2: e = g (Hilbert modular case): excluded for g >= 4");
      } else if (g % 2 == 0 && e == g / 2 && g > 4) {
        c.verdict = CaseVerdict::Excluded;
        c.rule_trace.push_back(
            "R3: e = g/2, dim S = 3g/2 = " + num(c.dim_s) +
            "; the hyperelliptic intersection would be a divisor of "
            "dimension " +
            num(c.dim_s - 1) + " > g = " + num(g));
      } else {
        c.verdict = CaseVerdict::NotExcludedByTheseArguments;
        c.rule_trace.push_back("no rule applies");
      }
    }
    if (c.verdict != CaseVerdict::Excluded && g > 4) {
      c.check_failed = true;
      c.rule_trace.push_back("CHECK-FAILED: g = " + num(g) +
                             " > 4 but this case was not excluded");
    }
    rep.cases.push_back(std::move(c));
  }

  rep.all_excluded = !rep.cases.empty();
  for (const auto& c : rep.cases)
    if (c.verdict != CaseVerdict::Excluded) rep.all_excluded = false;
  return rep;
}

ExclusionReport exclude_type_II(std::int64_t g) {
  check_genus(g);
  ExclusionReport rep;
  rep.g = g;
  rep.albert_type = AlbertType::II;

  if (g % 2 != 0) {
    rep.notes.push_back("vacuous: 2e | g has no solutions for odd g");
    rep.all_excluded = true;
    return rep;
  }

  for (std::int64_t e : divisors(g / 2)) {
    ExclusionCase c;
    c.e = e;
    c.h = g / (2 * e);
    c.dim_s = e * c.h * (c.h + 1) / 2;
    c.rule_trace.push_back("dim S = e*h(h+1)/2 = " + num(c.dim_s) +
                           " with e = " + num(e) + ", h = " + num(c.h));

    const bool boundary_ok = g / 2 > 2;
    c.rule_trace.push_back(
        "boundary codimension g/2 = " + num(g / 2) +
        (boundary_ok ? " > 2" : " <= 2, argument unavailable"));

    // Decomposable locus, first family: abelian varieties isogenous to
    // X_1 x X_2 with both factors carrying the quaternion action. Each
    // factor has dimension a positive multiple of 2e, so the family is
    // empty for h = 1; otherwise its codimension is at least e(h-1).
    bool product_ok;
    if (c.h == 1) {
      product_ok = true;
      c.rule_trace.push_back("product family: empty for h = 1");
    } else {
      std::int64_t codim = c.e * (c.h - 1);
      product_ok = codim > 2;
      c.rule_trace.push_back("product family: codimension >= e(h-1) = " +
                             num(codim) + (product_ok ? " > 2" : " <= 2"));
    }

    // Second family: the quaternion algebra is induced from a proper
    // subfield of degree e'; codimension (e-e')h(h+1)/2. Empty for e = 1.
    bool subfield_ok;
    if (c.e == 1) {
      subfield_ok = true;
      c.rule_trace.push_back("subfield family: empty for e = 1");
    } else {
      std::int64_t min_codim = -1, min_ep = 0;
      for (std::int64_t ep : divisors(c.e)) {
        if (ep == c.e) continue;
        std::int64_t codim = (c.e - ep) * c.h * (c.h + 1) / 2;
        if (min_codim < 0 || codim < min_codim) {
          min_codim = codim;
          min_ep = ep;
        }
      }
      subfield_ok = min_codim > 2;
      c.rule_trace.push_back(
          "subfield family: min codimension (e-e')h(h+1)/2 = " +
          num(min_codim) + " at e' = " + num(min_ep) +
          (subfield_ok ? " > 2" : " <= 2"));
    }

    if (boundary_ok && product_ok && subfield_ok) {
      c.verdict = CaseVerdict::Excluded;
      c.rule_trace.push_back(
          "excluded: boundary and both decomposable families have "
          "codimension > 2");
    } else {
      c.verdict = CaseVerdict::NotExcludedByTheseArguments;
      if (g > 8) {
        c.check_failed = true;
        c.rule_trace.push_back("CHECK-FAILED: g = " + num(g) +
                               " > 8 but this case was not excluded");
      }
    }
    rep.cases.push_back(std::move(c));
  }

  rep.all_excluded = !rep.cases.empty();
  for (const auto& c : rep.cases)
    if (c.verdict != CaseVerdict::Excluded) rep.all_excluded = false;
  return rep;
}

}  // namespace covers
