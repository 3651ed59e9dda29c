#include "lagorb/number_theory.hpp"

#include <algorithm>
#include <map>

#include "lagorb/error.hpp"

namespace lagorb::nt {
namespace {

constexpr unsigned long kTrialLimit = 100000;
// Cycle length at which Pollard-Brent gives up on a composite.
constexpr unsigned long kPollardBudget = 1UL << 18;

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = mpz_class(seed) % n;
  mpz_class c = mpz_class(seed * 7 + 1) % n;
  if (c == 0) c = 1;
  const unsigned long m = 128;
  mpz_class g = 1, q = 1, x, ys;
  unsigned long r = 1;
  auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
  while (g == 1) {
    if (r > kPollardBudget) fail(ErrorCode::TooLarge, "factorization budget exceeded");
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    mpz_class d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
  mpz_class a = mod_nonneg(a_in, p);
  if (p == 2 || a == 0) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // Tonelli-Shanks
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  if (s == 1) return powm(a, (p + 1) / 4, p);
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  unsigned long big_m = s;
  mpz_class c = powm(z, q, p);
  mpz_class t = powm(a, q, p);
  mpz_class r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long k = 0; k + i + 1 < big_m; ++k) b = b * b % p;
    big_m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  require(n != 0, ErrorCode::Precondition, "factorize: zero");
  n = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      n /= p;
    }
  }
  if (n != 1) {
    if (n <= mpz_class(kTrialLimit) * kTrialLimit) ++found[n];
    else factor_into(n, found);
  }
  return {found.begin(), found.end()};
}

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) return 0;
  mpz_class s = 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) s *= p;
  return n < 0 ? mpz_class(-s) : s;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& m) {
  require(m >= 1, ErrorCode::Precondition, "sqrt_mod: modulus must be positive");
  if (m == 1) return mpz_class(0);
  mpz_class acc_mod = 1, acc_root = 0;
  for (const auto& [p, e] : factorize(m)) {
    require(e == 1, ErrorCode::Precondition, "sqrt_mod: modulus must be squarefree");
    auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // CRT: x ≡ acc_root (acc_mod), x ≡ r (p)
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(acc_mod % p).get_mpz_t(), p.get_mpz_t());
    mpz_class k = mod_nonneg((*r - acc_root) * inv, p);
    acc_root += acc_mod * k;
    acc_mod *= p;
  }
  return mod_nonneg(acc_root, acc_mod);
}

std::optional<std::array<Rational, 3>> solve_legendre(const mpz_class& a, const mpz_class& b) {
  require(a != 0 && b != 0, ErrorCode::Precondition, "solve_legendre: zero coefficient");
  if (a == 1) return std::array<Rational, 3>{Rational(1), Rational(0), Rational(1)};
  if (b == 1) return std::array<Rational, 3>{Rational(0), Rational(1), Rational(1)};
  if (a < 0 && b < 0) return std::nullopt;
  if (abs(a) > abs(b)) {
    auto s = solve_legendre(b, a);
    if (!s) return std::nullopt;
    return std::array<Rational, 3>{(*s)[1], (*s)[0], (*s)[2]};
  }
  // Descent: with t^2 ≡ a (mod b), t^2 - a = b b' and |b'| < |b|.
  mpz_class mb = abs(b);
  auto t0 = sqrt_mod(a, mb);
  if (!t0) return std::nullopt;
  mpz_class t = *t0;
  if (2 * t > mb) t -= mb;
  mpz_class bp = (t * t - a);
  require(mpz_divisible_p(bp.get_mpz_t(), b.get_mpz_t()) != 0, ErrorCode::Internal, "solve_legendre: bad root");
  bp /= b;
  require(bp != 0, ErrorCode::Internal, "solve_legendre: degenerate descent");
  mpz_class core = squarefree_part(bp);
  mpz_class s2 = bp / core;
  mpz_class s = sqrt(s2);
  auto sub = solve_legendre(a, core);
  if (!sub) return std::nullopt;
  const Rational& x1 = (*sub)[0];
  Rational y1 = (*sub)[1] / Rational(s);
  const Rational& z1 = (*sub)[2];
  // (z1 + x1 √a)(t + √a) = Z + X √a  with  Z^2 - a X^2 = b (bp y1)^2
  Rational tq(t);
  Rational aq(a);
  Rational z = z1 * tq + aq * x1;
  Rational x = z1 + x1 * tq;
  Rational y = Rational(bp) * y1;
  return std::array<Rational, 3>{x, y, z};
}

int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
  require(a != 0 && b != 0, ErrorCode::Precondition, "hilbert_symbol: zero argument");
  auto split = [&](mpz_class x) {
    unsigned long e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    return std::pair<unsigned long, mpz_class>{e, x};
  };
  auto [alpha, u] = split(a);
  auto [beta, v] = split(b);
  if (p == 2) {
    // ε(x) = (x − 1)/2 and ω(x) = (x² − 1)/8, both mod 2, for odd x.
    auto eps = [](const mpz_class& x) { return mpz_class((x - 1) / 2) % 2 != 0 ? 1UL : 0UL; };
    auto omega = [](const mpz_class& x) { return mpz_class((x * x - 1) / 8) % 2 != 0 ? 1UL : 0UL; };
    unsigned long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if ((alpha * beta) % 2 == 1 && mpz_class((p - 1) / 2) % 2 != 0) sign = -sign;
  if (beta % 2 == 1) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) sign *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
  return sign;
}

}  // namespace lagorb::nt
