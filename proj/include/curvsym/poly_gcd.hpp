#pragma once

#include <optional>
#include <vector>

#include "curvsym/polynomial.hpp"

namespace curvsym {

// Single-divisor division in the canonical monomial order. Returns the exact
// quotient when divisor | dividend, nullopt otherwise.
inline std::optional<Polynomial> try_divide_exact(const Polynomial& dividend,
                                                  const Polynomial& divisor) {
  if (divisor.is_zero())
    throw Error(errc::zero_denominator, "division by zero polynomial");
  if (dividend.is_zero()) return dividend;
  if (divisor.is_constant()) {
    return dividend.scaled(Rational(1) / divisor.constant_value());
  }
  Polynomial quotient = Polynomial::zero(dividend.vars());
  Polynomial rest = dividend;
  const Term& dlead = divisor.leading_term();
  while (!rest.is_zero()) {
    const Term& rlead = rest.leading_term();
    if (!dlead.mono.divides(rlead.mono)) return std::nullopt;
    Monomial m{std::vector<std::uint32_t>(rlead.mono.exps.size())};
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      m.exps[i] = rlead.mono.exps[i] - dlead.mono.exps[i];
    Polynomial t = Polynomial::monomial(rest.vars(), std::move(m),
                                        rlead.coeff / dlead.coeff);
    quotient = quotient + t;
    rest = rest - t * divisor;
  }
  return quotient;
}

inline Polynomial divide_exact(const Polynomial& dividend,
                               const Polynomial& divisor) {
  auto q = try_divide_exact(dividend, divisor);
  if (!q)
    throw Error(errc::bad_spec, "inexact polynomial division");
  return *q;
}

namespace detail {

// Coefficients of p viewed as a univariate polynomial in variable `var`;
// result[k] does not mention `var`.
inline std::vector<Polynomial> coeffs_in_var(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(p.degree_in(var) + 1, Polynomial::zero(p.vars()));
  for (const Term& t : p.terms()) {
    Term stripped = t;
    std::uint32_t e = stripped.mono.exps[var];
    stripped.mono.exps[var] = 0;
    out[e] = out[e] + Polynomial::monomial(p.vars(), std::move(stripped.mono),
                                           stripped.coeff);
  }
  return out;
}

inline Polynomial var_power(const VarList& vars, std::size_t var, std::uint32_t e) {
  Monomial m{std::vector<std::uint32_t>(vars->size(), 0)};
  m.exps[var] = e;
  return Polynomial::monomial(vars, std::move(m), Rational(1));
}

} // namespace detail

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial content_in_var(const Polynomial& p, std::size_t var) {
  Polynomial c = Polynomial::zero(p.vars());
  for (const Polynomial& coeff : coeffs_in_var(p, var))
    if (!coeff.is_zero()) c = poly_gcd(c, coeff);
  return c;
}

// Pseudo-remainder of a by b with respect to `var` (deg_var(b) >= 1). The
// result differs from the true remainder by a factor of lc(b)^k, which the
// primitive PRS discards anyway.
inline Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lb = coeffs_in_var(b, var)[db];
  while (!a.is_zero()) {
    const unsigned da = a.degree_in(var);
    if (da < db) break;
    const Polynomial la = coeffs_in_var(a, var)[da];
    a = lb * a - la * b * var_power(a.vars(), var, da - db);
  }
  return a;
}

} // namespace detail

// GCD over Q[x1..xk] via the primitive pseudo-remainder sequence, returned in
// integer-primitive form with positive leading coefficient (1 for coprime
// inputs; nonzero constants are units).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.vars() ? a.vars() : b.vars(), Rational(1));

  // Main variable: present in both, smallest combined degree.
  std::size_t var = Polynomial::drop_var;
  unsigned best = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (!a.mentions(i) || !b.mentions(i)) continue;
    unsigned score = a.degree_in(i) + b.degree_in(i);
    if (var == Polynomial::drop_var || score < best) {
      var = i;
      best = score;
    }
  }
  if (var == Polynomial::drop_var)
    return Polynomial::constant(a.vars(), Rational(1));

  const Polynomial cont_a = detail::content_in_var(a, var);
  const Polynomial cont_b = detail::content_in_var(b, var);
  Polynomial p = divide_exact(a, cont_a);
  Polynomial q = divide_exact(b, cont_b);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);

  Polynomial g;
  for (;;) {
    Polynomial r = detail::pseudo_rem(p, q, var);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial::constant(a.vars(), Rational(1));
      break;
    }
    p = std::move(q);
    q = divide_exact(r, detail::content_in_var(r, var));
  }
  // g is primitive in var by construction; only the scalar content remains.
  return (poly_gcd(cont_a, cont_b) * g).primitive_part();
}

} // namespace curvsym
