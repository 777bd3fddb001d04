#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "oddgreedy/exact.hpp"

namespace oddgreedy {

/// (A + B t) / (C + D t) for t = 0, 1, 2, ...
struct AffineFamily {
  Integer num_const;
  Integer num_coeff;
  Integer den_const;
  Integer den_coeff;
  std::string param = "t";

  friend bool operator==(const AffineFamily&, const AffineFamily&) = default;
};

/// Member at t, unreduced.
inline Fraction family_member(const AffineFamily& f, const Integer& t) {
  if (t < 0) throw std::out_of_range("family parameter must be nonnegative");
  return Fraction{f.num_const + f.num_coeff * t, f.den_const + f.den_coeff * t};
}

/// Same coefficients, ignoring the parameter label.
inline bool same_coefficients(const AffineFamily& a, const AffineFamily& b) {
  return a.num_const == b.num_const && a.num_coeff == b.num_coeff &&
         a.den_const == b.den_const && a.den_coeff == b.den_coeff;
}

namespace detail {

inline std::string affine_text(const Integer& c, const Integer& coeff, const std::string& param) {
  if (coeff == 0) return c.str();
  std::string s = "(" + c.str();
  s += coeff < 0 ? "-" : "+";
  Integer mag = coeff < 0 ? Integer{-coeff} : coeff;
  if (mag != 1) s += mag.str();
  return s + param + ")";
}

}  // namespace detail

/// Human-readable form, e.g. "(87+16t)/(135+30t)" or "6/(25+60t)".
inline std::string to_string(const AffineFamily& f) {
  return detail::affine_text(f.num_const, f.num_coeff, f.param) + "/" +
         detail::affine_text(f.den_const, f.den_coeff, f.param);
}

}  // namespace oddgreedy
