#include "glrank/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>

#include "glrank/error.hpp"

namespace glrank {

const std::vector<mpz_class>& cyclotomic_poly(int e) {
  require(e >= 1, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(e); it != memo.end()) return it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d
  std::vector<mpz_class> num(static_cast<size_t>(e) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d) continue;
    const auto& den = cyclotomic_poly(d);
    size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
      mpz_class c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (size_t i = 0; i < dd; ++i)
      if (num[i] != 0) fail(ErrorKind::Internal, "cyclotomic division not exact");
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  return memo.emplace(e, std::move(num)).first->second;
}

int euler_phi(int e) { return static_cast<int>(cyclotomic_poly(e).size()) - 1; }

std::vector<mpz_class> dense(const CycTerms& t, int e) {
  std::vector<mpz_class> v(static_cast<size_t>(e), 0);
  for (auto [x, m] : t) v[static_cast<size_t>(x)] += static_cast<long>(m);
  return v;
}

CycTerms conj(const CycTerms& t, int e) {
  CycTerms out;
  for (auto [x, m] : t) out.push_back({(e - x) % e, m});
  std::sort(out.begin(), out.end());
  return out;
}

CycTerms rotate(const CycTerms& t, int shift, int e) {
  std::map<int, std::int64_t> acc;
  for (auto [x, m] : t) acc[((x + shift) % e + e) % e] += m;
  return {acc.begin(), acc.end()};
}

std::complex<double> to_complex(const CycTerms& t, int e) {
  std::complex<double> z = 0;
  for (auto [x, m] : t)
    z += static_cast<double>(m) * std::polar(1.0, 2 * std::numbers::pi * x / e);
  return z;
}

std::int64_t degree_sum(const CycTerms& t) {
  std::int64_t s = 0;
  for (auto [x, m] : t) s += m;
  return s;
}

}  // namespace glrank
