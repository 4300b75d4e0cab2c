#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/fraclp.hpp"

namespace hypercover {

SandwichReport sandwich_check(const Hypergraph& h, int m) {
  SandwichReport r;
  r.nu = matching_number(h, m);
  r.tau = cover_number(h, m);
  const auto frac = solve_fractional(h, m);
  r.nu_star = frac.matching.total();
  r.tau_star = frac.cover.total();
  r.binom_bound = binomial(h.uniformity(), m) * static_cast<std::uint64_t>(r.nu);

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("sandwich chain violated (" + what + "): nu=" + std::to_string(r.nu) +
                             " nu*=" + to_fraction_string(r.nu_star) +
                             " tau*=" + to_fraction_string(r.tau_star) +
                             " tau=" + std::to_string(r.tau));
  };
  if (Rational(r.nu) > r.nu_star) fail("nu <= nu*");
  if (r.nu_star != r.tau_star) fail("nu* = tau*");
  if (r.tau_star > Rational(r.tau)) fail("tau* <= tau");
  if (static_cast<std::uint64_t>(r.tau) > r.binom_bound) fail("tau <= C(k,m) nu");
  return r;
}

}  // namespace hypercover
