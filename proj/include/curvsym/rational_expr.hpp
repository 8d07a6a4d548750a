#pragma once

#include <span>
#include <string>
#include <utility>

#include "curvsym/poly_gcd.hpp"
#include "curvsym/polynomial.hpp"

namespace curvsym {

// Exact multivariate rational function num/den over Q. Canonical form:
// gcd(num, den) = 1, den has coprime integer coefficients with positive
// leading coefficient, and the zero function is 0/1. The zero test only needs
// den != 0, so it stays sound even where gcd reduction is skipped.
class RationalExpr {
public:
  RationalExpr()
      : num_(Polynomial::zero(VarList())),
        den_(Polynomial::constant(VarList(), Rational(1))) {}

  RationalExpr(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize(true);
  }

  static RationalExpr from_poly(Polynomial p) {
    VarList vars = p.vars();
    return RationalExpr(std::move(p), Polynomial::constant(vars, Rational(1)));
  }

  static RationalExpr zero(const VarList& vars) {
    return from_poly(Polynomial::zero(vars));
  }

  static RationalExpr constant(const VarList& vars, Rational c) {
    return from_poly(Polynomial::constant(vars, std::move(c)));
  }

  static RationalExpr variable(const VarList& vars, std::size_t index) {
    return from_poly(Polynomial::variable(vars, index));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const {
    return num_.constant_value() / den_.constant_value();
  }
  bool mentions(std::size_t var) const {
    return num_.mentions(var) || den_.mentions(var);
  }

  friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalExpr operator-() const {
    RationalExpr r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    return add_impl(a, b, false);
  }
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
    return add_impl(a, b, true);
  }

  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.den_.is_constant() && b.den_.is_constant())
      return RationalExpr(a.num_ * b.num_, a.den_ * b.den_, already_reduced{});
    // Cross-cancel so the product of reduced fractions stays reduced.
    Polynomial g1 = poly_gcd(a.num_, b.den_);
    Polynomial g2 = poly_gcd(b.num_, a.den_);
    Polynomial num = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    Polynomial den = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    return RationalExpr(std::move(num), std::move(den), already_reduced{});
  }

  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
    if (b.is_zero())
      throw Error(errc::zero_denominator, "zero denominator");
    RationalExpr inv(b.den_, b.num_, already_reduced{});
    return a * inv;
  }

  RationalExpr pow(unsigned e) const {
    RationalExpr result = constant(vars(), Rational(1));
    RationalExpr base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e != 0) base = base * base;
    }
    return result;
  }

  // Exact partial derivative via the quotient rule.
  RationalExpr derivative(std::size_t var) const {
    if (den_.is_constant()) {
      return RationalExpr(num_.derivative(var), den_, already_reduced{});
    }
    Polynomial num = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalExpr(std::move(num), den_ * den_);
  }

  Rational eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d == 0)
      throw Error(errc::pole_at_point, "pole at point");
    return num_.eval(point) / d;
  }

  double eval_double(std::span<const double> point) const {
    return num_.eval_double(point) / den_.eval_double(point);
  }

  RationalExpr remapped(const VarList& new_vars,
                        const std::vector<std::size_t>& mapping) const {
    return RationalExpr(num_.remapped(new_vars, mapping),
                        den_.remapped(new_vars, mapping));
  }

  std::string str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

private:
  struct already_reduced {};

  RationalExpr(Polynomial num, Polynomial den, already_reduced)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize(false);
  }

  static RationalExpr add_impl(const RationalExpr& a, const RationalExpr& b,
                               bool subtract) {
    if (a.den_.is_constant() && b.den_.is_constant()) {
      Polynomial num = subtract ? a.num_ * b.den_ - b.num_ * a.den_
                                : a.num_ * b.den_ + b.num_ * a.den_;
      return RationalExpr(std::move(num), a.den_ * b.den_, already_reduced{});
    }
    Polynomial g = poly_gcd(a.den_, b.den_);
    Polynomial da = divide_exact(a.den_, g);
    Polynomial db = divide_exact(b.den_, g);
    Polynomial num =
        subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
    return RationalExpr(std::move(num), a.den_ * db);
  }

  void normalize(bool reduce) {
    if (den_.is_zero())
      throw Error(errc::zero_denominator, "zero denominator");
    if (!num_.vars() && den_.vars()) num_ = Polynomial::zero(den_.vars());
    if (num_.is_zero()) {
      den_ = Polynomial::constant(num_.vars(), Rational(1));
      return;
    }
    if (den_.is_constant()) {
      Rational c = den_.constant_value();
      if (c != 1) num_ = num_.scaled(Rational(1) / c);
      den_ = Polynomial::constant(num_.vars(), Rational(1));
      return;
    }
    if (reduce) {
      Polynomial g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
        if (den_.is_constant()) {
          normalize(false);
          return;
        }
      }
    }
    Rational c = den_.signed_content();
    if (c != 1) {
      den_ = den_.scaled(Rational(1) / c);
      num_ = num_.scaled(Rational(1) / c);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

} // namespace curvsym
