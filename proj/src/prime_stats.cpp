#include "gramlab/prime_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"
#include "moment_common.hpp"

namespace gramlab {

namespace {

constexpr char kMagic[8] = {'G', 'R', 'A', 'M', 'L', 'A', 'B', '\0'};
constexpr unsigned char kCacheVersion = 1;

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::istream& is, std::uint64_t& v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return true;
}

std::mutex g_mutex;
std::filesystem::path g_cache_dir;
std::shared_ptr<const PrimeTable> g_table;
// tables handed out stay alive for the process
std::vector<std::shared_ptr<const PrimeTable>> g_retired;

// f(p) for every tabulated prime p < bound_exclusive
template <class F>
void for_primes_below(const PrimeTable& tab, std::uint64_t bound_exclusive, F&& f) {
  for (const auto p : tab.primes) {
    if (p >= bound_exclusive) break;
    f(p);
  }
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t ceiling) {
  if (limit > ceiling) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the ceiling " + std::to_string(ceiling));
  }
  PrimeTable out;
  out.limit = limit;
  if (limit < 2) return out;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  out.primes.reserve(static_cast<std::size_t>(1.1 * limit / std::log(static_cast<double>(limit))) + 16);
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit + 1, lo + kSegment);
    std::fill(seg.begin(), seg.end(), 1);
    for (const auto p : base) {
      if (p * p >= hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j < hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
      if (seg[n - lo]) out.primes.push_back(n);
    }
  }
  return out;
}

void write_prime_cache(const std::filesystem::path& path, const PrimeTable& table) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ResourceError("cannot write " + tmp);
    os.write(kMagic, 8);
    os.put(static_cast<char>(kCacheVersion));
    put_u64(os, table.limit);
    put_u64(os, table.primes.size());
    for (const auto p : table.primes) put_u64(os, p);
    if (!os) throw ResourceError("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

PrimeTable read_prime_cache(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ResourceError("cannot open " + path.string());
  char magic[8];
  if (!is.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) throw ParseError("bad prime cache header", 1);
  const int version = is.get();
  if (version != kCacheVersion) {
    throw VersionMismatch("prime cache version " + std::to_string(version) + ", expected " +
                          std::to_string(kCacheVersion));
  }
  PrimeTable out;
  std::uint64_t count = 0;
  if (!get_u64(is, out.limit) || !get_u64(is, count)) throw ParseError("truncated prime cache header", 1);
  out.primes.resize(count);
  for (auto& p : out.primes) {
    if (!get_u64(is, p)) throw ParseError("truncated prime cache body", 1);
  }
  return out;
}

void set_prime_cache_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(g_mutex);
  g_cache_dir = dir;
}

const PrimeTable& shared_primes(std::uint64_t limit) {
  std::lock_guard lock(g_mutex);
  if (g_table && g_table->limit >= limit) return *g_table;
  if (limit > kSieveCeiling) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the ceiling " +
                        std::to_string(kSieveCeiling));
  }
  // grow geometrically so repeated small requests do not re-sieve
  std::uint64_t want = std::max<std::uint64_t>(limit, 1 << 16);
  if (g_table) want = std::min(kSieveCeiling, std::max(want, 2 * g_table->limit));
  std::shared_ptr<PrimeTable> fresh;
  const bool cached = want > kSieveCacheFloor && !g_cache_dir.empty();
  const auto path = g_cache_dir / "primes.bin";
  if (cached && std::filesystem::exists(path)) {
    try {
      auto t = std::make_shared<PrimeTable>(read_prime_cache(path));
      if (t->limit >= want) fresh = t;
    } catch (const Error&) {
      // unusable cache; rebuild below
    }
  }
  if (!fresh) {
    fresh = std::make_shared<PrimeTable>(sieve_primes(want));
    if (cached) {
      std::filesystem::create_directories(g_cache_dir);
      write_prime_cache(path, *fresh);
    }
  }
  if (g_table) g_retired.push_back(g_table);
  g_table = fresh;
  return *g_table;
}

MertensSums mertens_sums(std::uint64_t x) {
  if (x < 2) throw PreconditionError("mertens_sums: x must be >= 2");
  const auto& tab = shared_primes(x);
  CompensatedSum<double> a, b;
  for_primes_below(tab, x + 1, [&](std::uint64_t p) {
    const double pd = static_cast<double>(p);
    a.add(std::log(pd) / pd);
    b.add(1.0 / pd);
  });
  return {a.value(), b.value()};
}

double v_y(double t, double y) {
  if (!(y > 2)) return 0.0;  // no prime below y
  const auto& tab = shared_primes(static_cast<std::uint64_t>(std::ceil(y)));
  CompensatedSum<long double> acc;
  const long double tl = t;
  for (const auto p : tab.primes) {
    if (static_cast<double>(p) >= y) break;
    const long double ph = reduce_angle(tl * std::log(static_cast<long double>(p)));
    acc.add(std::sin(ph) / std::sqrt(static_cast<long double>(p)));
  }
  return static_cast<double>(acc.value() / kPiL);
}

VxhResult v_xh(double x, double h) {
  if (!(h > 0 && h < kPrimeSquareH0)) throw PreconditionError("v_xh: need 0 < h < 0.4");
  if (!(x >= 2) || !(h * std::log(x) > 2)) throw PreconditionError("v_xh: need h ln x > 2");
  const auto limit = static_cast<std::uint64_t>(std::floor(x));
  const auto& tab = shared_primes(limit);
  CompensatedSum<double> acc;
  for_primes_below(tab, limit + 1, [&](std::uint64_t p) {
    const double pd = static_cast<double>(p);
    const double s = std::sin(0.5 * h * std::log(pd));
    acc.add(s * s / pd);
  });
  VxhResult out;
  out.value = acc.value();
  out.main_term = 0.5 * std::log(h * std::log(x));
  out.deviation = std::abs(out.value - out.main_term);
  return out;
}

MomentReport residual_moments(const ZeroTable& tab, const MomentConfig& cfg) {
  using namespace detail;
  MomentReport rep;
  rep.name = "residual_moments";
  rep.config = cfg;
  const int k = cfg.k;
  if (k < 1) throw PreconditionError("residual_moments: k must be >= 1");
  require_certified(tab, cfg.N + cfg.M, rep.name);
  require_regime(rep, k <= std::log(cfg.x) / 192,
                 "k = " + std::to_string(k) + " above ln(x)/192 = " + std::to_string(std::log(cfg.x) / 192));
  require_short_range(rep);
  if (cfg.y <= 2) rep.notes.push_back("y = " + std::to_string(cfg.y) + " admits no prime; V_y = 0 and R = S");
  CompensatedSum<double> acc;
  for (std::int64_t n = cfg.N + 1; n <= cfg.N + cfg.M; ++n) {
    const double r = static_cast<double>(tab.s_at_gram(n)) + v_y(tab.gram(n), cfg.y);
    acc.add(std::pow(r, 2 * k));
  }
  rep.sum = acc.value();
  set_bound(rep, 2 * k * std::log(cfg.A * std::exp(-4.0) * k) + std::log(static_cast<double>(cfg.M)), false);
  return rep;
}

DiagonalCheck diagonal_identity_check(int k, double y, const PrimeCoefficients& a) {
  if (k != 1 && k != 2) throw PreconditionError("diagonal_identity_check: k must be 1 or 2");
  // the k = 1 identity is exact for any y; the y > e^3 floor matters for the k = 2 window
  if (!(y >= 2)) throw PreconditionError("diagonal_identity_check: need y >= 2");
  if (k == 2 && !(y > std::exp(3.0))) throw PreconditionError("diagonal_identity_check: k = 2 needs y > e^3");
  if (k == 2 && y > 1e3) throw ResourceError("diagonal_identity_check: brute force limited to y <= 1e3 for k = 2");
  if (y > 1e7) throw ResourceError("diagonal_identity_check: y above 1e7");

  const auto limit = static_cast<std::uint64_t>(std::floor(y));
  std::vector<std::uint64_t> ps;
  std::vector<std::complex<double>> as;
  for_primes_below(shared_primes(limit), limit + 1, [&](std::uint64_t p) {
    ps.push_back(p);
    as.push_back(a(p));
  });

  DiagonalCheck out;
  CompensatedSum<double> s1, s2;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double w = std::norm(as[i]) / static_cast<double>(ps[i]);
    s1.add(w);
    s2.add(w * w);
  }
  out.sigma1 = s1.value();
  out.sigma2 = s2.value();

  if (k == 1) {
    // p = q
    CompensatedSum<double> left;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      left.add((as[i] * std::conj(as[i])).real() / std::sqrt(static_cast<double>(ps[i] * ps[i])));
    }
    out.left = left.value();
    out.theta = 0;
    out.holds = std::abs(out.left - out.sigma1) <= 1e-12 * std::max(1.0, out.sigma1);
    return out;
  }

  // group ordered pairs by product; each group contributes |sum a(p1) a(p2) / sqrt(P)|^2
  std::map<std::uint64_t, std::complex<double>> groups;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const std::uint64_t prod = ps[i] * ps[j];
      groups[prod] += as[i] * as[j] / std::sqrt(static_cast<double>(prod));
    }
  }
  CompensatedSum<double> left;
  for (const auto& [prod, v] : groups) left.add(std::norm(v));
  out.left = left.value();
  if (out.sigma2 == 0) {
    out.theta = 0;
    out.holds = std::abs(out.left - 2 * out.sigma1 * out.sigma1) <= 1e-12;
  } else {
    out.theta = (out.left / 2 - out.sigma1 * out.sigma1) / (4 * out.sigma2);
    out.holds = out.theta >= -1 - 1e-12 && out.theta <= 1e-12;
  }
  return out;
}

}  // namespace gramlab
