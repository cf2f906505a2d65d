#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "extlab/measure.hpp"

namespace extlab {

using Complex = std::complex<double>;

// Character of (Z/A)^W: exponent e_v on each support point, all nonzero.
struct Character {
  Domain support;
  std::vector<int> exponents;  // aligned with support order

  bool operator==(const Character&) const = default;
};

// "x,y;x,y:e,e" with points separated by ';'; the trivial character is ":".
std::string character_key(const Character& chi);

// sum_b mu[b] * conj(chi(b)),  chi(b) = exp(2 pi i sum_v e_v b_v / A)
Complex fourier_coeff(const SignedMeasure& mu, const Character& chi);

// Coefficients for every character of the window, indexed like words: the
// exponent vector on the whole window, read as a mixed-radix number.
struct CharacterTable {
  Domain window;
  int alphabet = 2;
  std::vector<Complex> coefficients;

  Character character(std::size_t index) const;
  std::size_t index_of(const Character& chi) const;
};

CharacterTable fourier_transform(const SignedMeasure& mu);

// mu[a] = A^-|W| sum_chi coeff(chi) chi(a). Throws if an imaginary part
// exceeds 1e-9; returns the real parts.
std::vector<double> inverse_fourier(const CharacterTable& t);

struct FourierCheck {
  bool pass = true;
  Character character;  // first disagreeing character
  LatticePoint shift;   // stationarity only
  double deviation = 0;
};

FourierCheck check_stationarity_fourier(const SignedMeasure& mu, double tol = 1e-9);
// Compares coefficients of mu_w at characters supported in U with mu_u's.
FourierCheck check_extension_fourier(const SignedMeasure& mu_u, const SignedMeasure& mu_w, double tol = 1e-9);

}  // namespace extlab
