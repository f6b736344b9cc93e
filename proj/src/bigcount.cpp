#include "recurpart/bigcount.hpp"

#include "recurpart/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace recurpart {

namespace {
std::size_t g_budget = std::size_t(8) << 30;
constexpr long long kOracleGuard = 10000;
}  // namespace

void set_memory_budget(std::size_t bytes) { g_budget = bytes; }

std::size_t memory_budget() { return g_budget; }

std::size_t estimate_table_bytes(const std::vector<BigInt>& parts, long long n_max) {
  // p(n) <= prod over all but the largest usable part of (n/p + 1).
  std::vector<double> usable;
  for (const auto& p : parts) {
    if (p <= n_max) usable.push_back(p.convert_to<double>());
  }
  std::sort(usable.begin(), usable.end());
  double bits = 1;
  for (std::size_t i = 0; i + 1 < usable.size(); ++i) {
    bits += std::log2(static_cast<double>(n_max) / usable[i] + 1);
  }
  const double limbs = std::ceil(bits / 64) + 1;
  const double per_entry = sizeof(BigInt) + 8 * limbs + 16;
  return static_cast<std::size_t>(per_entry * static_cast<double>(n_max + 1));
}

CountTable count_table(const std::vector<BigInt>& parts, long long n_max, const std::string& label) {
  if (parts.empty()) throw ValidationError("part list is empty");
  if (n_max < 0) throw ValidationError("n_max must be >= 0");
  std::set<BigInt> seen;
  for (const auto& p : parts) {
    if (p <= 0) throw ValidationError("parts must be positive");
    if (!seen.insert(p).second) throw ValidationError("parts must be distinct");
  }
  const std::size_t need = estimate_table_bytes(parts, n_max);
  if (need > g_budget) {
    throw CapacityExceeded("table for n_max = " + std::to_string(n_max) + " needs about " +
                           std::to_string(need >> 20) + " MiB, budget is " +
                           std::to_string(g_budget >> 20) + " MiB");
  }
  CountTable t;
  t.n_max = n_max;
  t.parts = parts;
  t.spec_label = label;
  t.counts.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  t.counts[0] = 1;
  for (const auto& pb : parts) {
    if (pb > n_max) continue;
    const long long p = pb.convert_to<long long>();
    for (long long n = p; n <= n_max; ++n) t.counts[n] += t.counts[n - p];
  }
  return t;
}

CountTable count_table(const RecurrenceSpec& spec, long long n_max) {
  return count_table(parts_up_to(spec, BigInt(std::max<long long>(n_max, 1))), n_max, spec.label);
}

BigInt count_pF(long long n) {
  if (n < 0) throw ValidationError("n must be >= 0");
  return count_table(make_fibonacci(), n).counts[n];
}

BigInt brute_force_count(const std::vector<BigInt>& parts, long long n) {
  if (n > kOracleGuard) {
    throw OracleTooLarge("enumeration oracle is limited to n <= " + std::to_string(kOracleGuard));
  }
  if (n < 0) return BigInt(0);
  std::vector<long long> ps;
  for (const auto& p : parts) {
    if (p <= n) ps.push_back(p.convert_to<long long>());
  }
  std::sort(ps.begin(), ps.end(), std::greater<>());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  // Each call walks one partition prefix; parts are taken in nonincreasing order.
  std::function<unsigned long long(long long, std::size_t)> walk = [&](long long rem, std::size_t from) {
    if (rem == 0) return 1ULL;
    unsigned long long total = 0;
    for (std::size_t i = from; i < ps.size(); ++i) {
      if (ps[i] <= rem) total += walk(rem - ps[i], i);
    }
    return total;
  };
  return BigInt(walk(n, 0));
}

HPReal log_count(const BigInt& c) {
  if (c <= 0) throw LogOfZero("log_count needs a positive count");
  return boost::multiprecision::log(to_hp(c));
}

}  // namespace recurpart
