#include "extlab/harmonic.hpp"

#include <cmath>
#include <numbers>

namespace extlab {

namespace {

Complex root_of_unity(long long k, int a) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % a) / static_cast<double>(a);
  return {std::cos(angle), std::sin(angle)};
}

// In-place DFT along every site: out[e] = sum_b in[b] exp(sign 2 pi i e.b / A).
void transform(std::vector<Complex>& v, std::size_t sites, int a, int sign) {
  std::vector<Complex> roots(static_cast<std::size_t>(a));
  for (int k = 0; k < a; ++k) roots[static_cast<std::size_t>(k)] = root_of_unity(sign > 0 ? k : (a - k) % a, a);
  std::size_t stride = 1;
  std::vector<Complex> buf(static_cast<std::size_t>(a));
  for (std::size_t s = 0; s < sites; ++s) {
    const std::size_t block = stride * static_cast<std::size_t>(a);
    for (std::size_t start = 0; start < v.size(); start += block)
      for (std::size_t off = 0; off < stride; ++off) {
        for (int e = 0; e < a; ++e) {
          Complex acc = 0;
          for (int b = 0; b < a; ++b)
            acc += v[start + off + static_cast<std::size_t>(b) * stride] * roots[static_cast<std::size_t>((e * b) % a)];
          buf[static_cast<std::size_t>(e)] = acc;
        }
        for (int e = 0; e < a; ++e) v[start + off + static_cast<std::size_t>(e) * stride] = buf[static_cast<std::size_t>(e)];
      }
    stride = block;
  }
}

}  // namespace

std::string character_key(const Character& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.support.size(); ++i) {
    if (i) s += ";";
    const auto& p = chi.support[i];
    for (std::size_t d = 0; d < p.dim(); ++d) s += (d ? "," : "") + std::to_string(p[d]);
  }
  s += ":";
  for (std::size_t i = 0; i < chi.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(chi.exponents[i]);
  return s;
}

Complex fourier_coeff(const SignedMeasure& mu, const Character& chi) {
  if (chi.support.size() != chi.exponents.size()) throw std::invalid_argument("character: exponent count differs from support");
  auto pos = chi.support.positions_in(mu.domain());
  const int a = mu.alphabet();
  Complex acc = 0;
  for (std::size_t i = 0; i < mu.word_count(); ++i) {
    if (sgn(mu.mass(i)) == 0) continue;
    Symbols w = mu.word(i);
    long long phase = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) phase += static_cast<long long>(chi.exponents[j]) * w[pos[j]];
    const long long r = ((phase % a) + a) % a;
    acc += mu.mass(i).get_d() * root_of_unity((a - r) % a, a);
  }
  return acc;
}

Character CharacterTable::character(std::size_t index) const {
  Symbols e = word_at(index, window.size(), alphabet);
  std::vector<LatticePoint> pts;
  std::vector<int> ex;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) {
      pts.push_back(window[i]);
      ex.push_back(e[i]);
    }
  return Character{Domain(window.dim(), pts), ex};
}

std::size_t CharacterTable::index_of(const Character& chi) const {
  Symbols e(window.size(), 0);
  auto pos = chi.support.positions_in(window);
  for (std::size_t j = 0; j < pos.size(); ++j) e[pos[j]] = ((chi.exponents[j] % alphabet) + alphabet) % alphabet;
  return word_index(e, alphabet);
}

CharacterTable fourier_transform(const SignedMeasure& mu) {
  std::vector<Complex> v(mu.word_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mu.mass(i).get_d();
  transform(v, mu.domain().size(), mu.alphabet(), -1);
  return CharacterTable{mu.domain(), mu.alphabet(), std::move(v)};
}

std::vector<double> inverse_fourier(const CharacterTable& t) {
  std::vector<Complex> v = t.coefficients;
  transform(v, t.window.size(), t.alphabet, +1);
  std::vector<double> out(v.size());
  const double scale = 1.0 / static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Complex z = v[i] * scale;
    if (std::abs(z.imag()) > 1e-9) throw std::runtime_error("inverse transform is not real");
    out[i] = z.real();
  }
  return out;
}

FourierCheck check_stationarity_fourier(const SignedMeasure& mu, double tol) {
  const CharacterTable t = fourier_transform(mu);
  const Domain& w = mu.domain();
  const auto shifts = overlap_shifts(w);
  FourierCheck out;
  for (std::size_t i = 1; i < t.coefficients.size(); ++i) {
    Character chi = t.character(i);
    // Positive shifts suffice: each pair of translates is visited from its
    // lexicographically smaller member.
    for (const auto& k : shifts) {
      Domain moved = shift_domain(chi.support, k);
      if (!moved.is_subset_of(w)) continue;
      double dev = std::abs(t.coefficients[i] - t.coefficients[t.index_of(Character{moved, chi.exponents})]);
      if (dev > tol) return {false, chi, k, dev};
    }
  }
  return out;
}

FourierCheck check_extension_fourier(const SignedMeasure& mu_u, const SignedMeasure& mu_w, double tol) {
  if (!mu_u.domain().is_subset_of(mu_w.domain()) || mu_u.alphabet() != mu_w.alphabet())
    throw std::invalid_argument("check_extension_fourier: the small window must lie inside the large one");
  const CharacterTable small = fourier_transform(mu_u);
  const CharacterTable large = fourier_transform(mu_w);
  FourierCheck out;
  for (std::size_t i = 0; i < small.coefficients.size(); ++i) {
    Character chi = small.character(i);
    double dev = std::abs(small.coefficients[i] - large.coefficients[large.index_of(chi)]);
    if (dev > tol) return {false, chi, LatticePoint::zero(mu_u.domain().dim()), dev};
  }
  return out;
}

}  // namespace extlab
