// Small tour of the library: a moment sum, an extremal set, a representation profile.
#include <iostream>

#include "romanoff.hpp"

int main() {
  using namespace romanoff;

  const FactorSieve sieve(1'000'000);
  const PrimeList primes = PrimeList::from_sieve(sieve);

  std::vector<u64> a;
  for (u64 n = 1; n <= 10'000; ++n) a.push_back(n);
  const MomentReport m = theorem1_report(a, 2, 0.9, 10'000, sieve);
  std::cout << "moment lhs=" << m.lhs << " implied constant=" << m.implied_constant << '\n';

  const ExtremalSet set = construct_extremal_set(1'000'000, 2.2, 6.9, sieve);
  std::cout << "extremal Q=" << set.Q << " members=" << set.members.size()
            << " mean n/phi(n)=" << to_double(set.mean_ratio) << '\n';

  const RepresentationProfile prof = representation_counts(SequenceSpec::parse("geom:2"), 100'000, primes);
  std::cout << "p + 2^k: representable " << density_count(prof, 1) << " of " << prof.x
            << ", second moment " << second_moment(prof) << '\n';

  std::cout << render(to_json(theorem9_report(2, 2, 100'000, primes)));
  return 0;
}
