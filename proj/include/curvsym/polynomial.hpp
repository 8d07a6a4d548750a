#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "curvsym/error.hpp"
#include "curvsym/rational.hpp"

namespace curvsym {

// Shared, immutable variable universe. Polynomials combine only when they
// live over the same universe; charts own one list per chart.
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty())
      throw Error(errc::bad_spec, "empty variable name");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error(errc::bad_spec, "duplicate variable name '" + names[i] + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList& a, const VarList& b) {
  return a == b || (a && b && *a == *b);
}

struct Monomial {
  std::vector<std::uint32_t> exps;

  unsigned total_degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0u);
  }
  bool is_constant() const {
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps == b.exps;
  }
};

// Graded lexicographic order: total degree first, ties broken
// lexicographically with the earliest variable most significant.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(VarList vars) {
    Polynomial p;
    p.vars_ = std::move(vars);
    return p;
  }

  static Polynomial constant(VarList vars, Rational c) {
    Polynomial p = zero(std::move(vars));
    if (c != 0)
      p.terms_.push_back({Monomial{std::vector<std::uint32_t>(p.nvars(), 0)},
                          std::move(c)});
    return p;
  }

  static Polynomial variable(VarList vars, std::size_t index) {
    Polynomial p = zero(std::move(vars));
    if (index >= p.nvars())
      throw Error(errc::unknown_coordinate, "variable index out of range");
    Monomial m{std::vector<std::uint32_t>(p.nvars(), 0)};
    m.exps[index] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
  }

  static Polynomial monomial(VarList vars, Monomial m, Rational c) {
    Polynomial p = zero(std::move(vars));
    if (m.exps.size() != p.nvars())
      throw Error(errc::dimension_mismatch, "monomial length mismatch");
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
      throw Error(errc::bad_spec, "polynomial is not constant");
    return terms_[0].coeff;
  }

  // Leading data in the canonical (descending graded-lex) order.
  const Term& leading_term() const {
    if (terms_.empty())
      throw Error(errc::bad_spec, "zero polynomial has no leading term");
    return terms_.front();
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, unsigned(t.mono.exps[var]));
    return d;
  }

  bool mentions(std::size_t var) const {
    for (const Term& t : terms_)
      if (t.mono.exps[var] != 0) return true;
    return false;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r = zero(a.vars_ ? a.vars_ : b.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, Rational, MonoGreater> acc;
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        Monomial m{std::vector<std::uint32_t>(ta.mono.exps.size())};
        for (std::size_t i = 0; i < m.exps.size(); ++i)
          m.exps[i] = ta.mono.exps[i] + tb.mono.exps[i];
        acc[std::move(m)] += ta.coeff * tb.coeff;
      }
    }
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return zero(vars_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= nvars())
      throw Error(errc::unknown_coordinate, "variable index out of range");
    // Decrementing one exponent in every surviving term preserves the
    // canonical order, so no re-sort is needed.
    Polynomial r = zero(vars_);
    for (const Term& t : terms_) {
      if (t.mono.exps[var] == 0) continue;
      Term d = t;
      d.coeff *= Rational(t.mono.exps[var]);
      d.mono.exps[var] -= 1;
      r.terms_.push_back(std::move(d));
    }
    return r;
  }

  Rational eval(std::span<const Rational> point) const {
    if (point.size() != nvars())
      throw Error(errc::dimension_mismatch, "evaluation point size mismatch");
    Rational sum = 0;
    for (const Term& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.mono.exps[i] != 0) v *= rational_pow(point[i], t.mono.exps[i]);
      sum += v;
    }
    return sum;
  }

  double eval_double(std::span<const double> point) const {
    double sum = 0.0;
    for (const Term& t : terms_) {
      double v = to_double(t.coeff);
      for (std::size_t i = 0; i < point.size(); ++i)
        for (std::uint32_t e = 0; e < t.mono.exps[i]; ++e) v *= point[i];
      sum += v;
    }
    return sum;
  }

  // Positive rational c with P = c * prim, prim having coprime integer
  // coefficients and positive leading coefficient.
  Rational signed_content() const {
    if (is_zero()) return Rational(0);
    Rational c = 0;
    for (const Term& t : terms_) c = rational_gcd(c, t.coeff);
    if (leading_term().coeff < 0) c = -c;
    return c;
  }

  Polynomial primitive_part() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / signed_content());
  }

  // Reinterpret over a new variable universe. mapping[i] gives the new index
  // of old variable i, or npos to drop it (only legal when unused).
  static constexpr std::size_t drop_var = static_cast<std::size_t>(-1);
  Polynomial remapped(VarList new_vars,
                      const std::vector<std::size_t>& mapping) const {
    if (mapping.size() != nvars())
      throw Error(errc::dimension_mismatch, "remap table size mismatch");
    Polynomial r = zero(std::move(new_vars));
    for (const Term& t : terms_) {
      Monomial m{std::vector<std::uint32_t>(r.nvars(), 0)};
      for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (t.mono.exps[i] == 0) continue;
        if (mapping[i] == drop_var)
          throw Error(errc::unknown_coordinate,
                      "expression mentions dropped variable '" +
                          (*vars_)[i] + "'");
        m.exps[mapping[i]] += t.mono.exps[i];
      }
      r.terms_.push_back({std::move(m), t.coeff});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) {
      return grlex_cmp(x.mono, y.mono) > 0;
    });
    // Combine terms that collided (possible when two old variables map to one).
    std::vector<Term> combined;
    for (Term& t : r.terms_) {
      if (!combined.empty() && combined.back().mono == t.mono)
        combined.back().coeff += t.coeff;
      else
        combined.push_back(std::move(t));
    }
    std::erase_if(combined, [](const Term& t) { return t.coeff == 0; });
    r.terms_ = std::move(combined);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      bool negative = t.coeff < 0;
      Rational mag = negative ? Rational(-t.coeff) : t.coeff;
      std::string piece;
      std::string mono;
      for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
        if (t.mono.exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i];
        if (t.mono.exps[i] > 1) mono += "^" + std::to_string(t.mono.exps[i]);
      }
      if (mono.empty())
        piece = to_string(mag);
      else if (mag == 1)
        piece = mono;
      else
        piece = to_string(mag) + "*" + mono;
      if (first) {
        out = negative ? "-" + piece : piece;
        first = false;
      } else {
        out += negative ? " - " : " + ";
        out += piece;
      }
    }
    return out;
  }

private:
  struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return grlex_cmp(a, b) > 0;
    }
  };

  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_))
      throw Error(errc::chart_mismatch, "variable universes differ");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    Polynomial r = zero(a.vars_ ? a.vars_ : b.vars_);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = grlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                              : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarList vars_;
  std::vector<Term> terms_;
};

} // namespace curvsym
