#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace glrank {

// Sum of e-th roots of unity: (exponent mod e, multiplicity), exponents sorted
// and distinct. Character values of a representation come out this way
// naturally, as the eigenvalue multiset of rho(g).
using CycTerms = std::vector<std::pair<int, std::int64_t>>;

// Integer coefficients of the e-th cyclotomic polynomial, lowest first.
const std::vector<mpz_class>& cyclotomic_poly(int e);
int euler_phi(int e);

// Reduce a polynomial in zeta_e (any length, lowest first) modulo Phi_e.
// The result has length phi(e) and is the canonical form of the number.
template <class T>
std::vector<T> reduce_mod_phi(std::vector<T> v, int e) {
  const auto& phi = cyclotomic_poly(e);
  size_t deg = phi.size() - 1;
  for (size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    T c = v[i];
    for (size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi[j];
  }
  v.resize(deg);
  return v;
}

// Dense coefficient vector of length e.
std::vector<mpz_class> dense(const CycTerms& t, int e);
CycTerms conj(const CycTerms& t, int e);
// multiply by zeta_e^shift
CycTerms rotate(const CycTerms& t, int shift, int e);
std::complex<double> to_complex(const CycTerms& t, int e);
std::int64_t degree_sum(const CycTerms& t);

}  // namespace glrank
