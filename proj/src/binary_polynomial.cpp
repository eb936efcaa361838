#include "qfactor/binary_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qfactor {

std::int64_t BinaryPolynomial::evaluate(std::uint32_t b) const {
  std::int64_t value = 0;
  for (const auto& [mask, coeff] : terms) {
    if ((mask & b) == mask) value += coeff;
  }
  return value;
}

std::int64_t BinaryPolynomial::constant() const {
  auto it = terms.find(0);
  return it == terms.end() ? 0 : it->second;
}

int BinaryPolynomial::degree() const {
  int deg = 0;
  for (const auto& [mask, coeff] : terms) {
    deg = std::max(deg, std::popcount(mask));
  }
  return deg;
}

void BinaryPolynomial::add_term(std::uint32_t mask, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

BinaryPolynomial build_F(const Instance& inst) {
  BinaryPolynomial f;
  f.n = inst.n;
  f.add_term(0, static_cast<std::int64_t>(inst.N) - 1);
  for (int l = 1; l <= inst.n_p; ++l) {
    f.add_term(std::uint32_t{1} << (l - 1), -(std::int64_t{1} << l));
  }
  for (int m = 1; m <= inst.n_q; ++m) {
    f.add_term(std::uint32_t{1} << (inst.n_p + m - 1), -(std::int64_t{1} << m));
  }
  for (int l = 1; l <= inst.n_p; ++l) {
    for (int m = 1; m <= inst.n_q; ++m) {
      std::uint32_t mask = (std::uint32_t{1} << (l - 1)) | (std::uint32_t{1} << (inst.n_p + m - 1));
      f.add_term(mask, -(std::int64_t{1} << (l + m)));
    }
  }
  return f;
}

BinaryPolynomial multiply(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.n != b.n) throw std::invalid_argument("variable count mismatch");
  BinaryPolynomial out;
  out.n = a.n;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      out.add_term(ma | mb, ca * cb);  // x*x = x
    }
  }
  return out;
}

BinaryPolynomial square(const BinaryPolynomial& f) { return multiply(f, f); }

}  // namespace qfactor
