#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "gramlab/errors.hpp"
#include "gramlab/gram_law.hpp"
#include "gramlab/harness.hpp"
#include "gramlab/moments.hpp"
#include "gramlab/prime_stats.hpp"
#include "gramlab/theta.hpp"
#include "gramlab/zeros.hpp"
#include "gramlab/zeta.hpp"

using namespace gramlab;

namespace {

struct Globals {
  std::string cache_dir;
  unsigned threads = 1;
  std::string format = "csv";
  double epsilon = 9e-4;
  bool allow_uncertified = false;
  int max_depth = 6;
};

Globals g;

BuildOptions build_opts() {
  BuildOptions o;
  o.threads = g.threads;
  o.allow_uncertified = g.allow_uncertified;
  o.max_depth = g.max_depth;
  return o;
}

ZeroTable table_for(std::int64_t n_needed) {
  if (!g.cache_dir.empty()) set_prime_cache_dir(g.cache_dir);
  return cached_table(g.cache_dir, std::max<std::int64_t>(n_needed, 1), build_opts());
}

void emit(const Report& r) {
  std::cout << (g.format == "json" ? to_json(r) : to_csv(r));
}

std::string b(bool v) { return v ? "true" : "false"; }
std::string i(std::int64_t v) { return std::to_string(v); }

Report moment_report(const MomentReport& m) {
  Report r;
  r.kind = ReportKind::moment;
  r.columns = {"name", "N", "M", "m", "k", "sum", "main_term", "ratio", "log_bound", "bound_satisfied", "notes"};
  std::string notes;
  for (const auto& n : m.notes) notes += (notes.empty() ? "" : "; ") + n;
  r.rows.push_back({m.name, i(m.config.N), i(m.config.M), i(m.config.m), i(m.config.k),
                    m.integer ? i(m.exact_sum) : format_value(m.sum),
                    m.has_main_term ? format_value(m.main_term) : "", m.has_main_term ? format_value(m.ratio) : "",
                    m.has_bound ? format_value(m.log_bound) : "", m.has_bound ? b(m.bound_satisfied) : "", notes});
  r.provenance.emplace_back(m.name, "epsilon=" + format_value(m.config.epsilon) +
                                        (m.config.exploratory ? " exploratory" : " strict"));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram points, zeros of Z(t) and Gram-interval statistics"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", g.cache_dir, "directory for zero tables and prime sieves");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--epsilon", g.epsilon, "moment parameter epsilon, 0 < eps < 1e-3");
  app.add_flag("--allow-uncertified", g.allow_uncertified, "accept tables whose count is not certified");
  app.add_option("--max-depth", g.max_depth, "Gram-interval refinement depth (each interval split up to 2^depth ways)")
      ->check(CLI::Range(0, 20));

  std::int64_t lo = 0, hi = 10, N = 10000, M = 1000, m = 1;
  int k = 1;
  double t_lo = 0, t_hi = 100, x = 1e6, h = 0.2, y = 100, t = 100, tol = 1e-4;
  bool exploratory = false;
  std::string kind, file;
  std::int64_t n_max = 100000;

  auto* gram = app.add_subcommand("gram", "Gram points t_lo..t_hi with Z(t_n)");
  gram->add_option("--from", lo)->required();
  gram->add_option("--to", hi)->required();

  auto* zeros = app.add_subcommand("zeros", "zeros of Z(t) in (t_lo, t_hi]");
  zeros->add_option("--t-lo", t_lo);
  zeros->add_option("--t-hi", t_hi)->required();

  auto* classify = app.add_subcommand("classify", "Gram's-law flags for G_from..G_to");
  classify->add_option("--from", lo)->required();
  classify->add_option("--to", hi)->required();

  auto* delta = app.add_subcommand("delta", "Delta_n for zero indices from..to");
  delta->add_option("--from", lo)->required();
  delta->add_option("--to", hi)->required();

  auto* nu = app.add_subcommand("nu", "histogram nu_k(N) of interval counts");
  nu->add_option("--N", N)->required();

  auto* moments = app.add_subcommand("moments", "moment sums over (N, N+M]");
  moments
      ->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"block", "adjacent", "first", "alternating", "selberg-even", "selberg-odd", "residual",
                             "empty-crowded"}));
  moments->add_option("--N", N);
  moments->add_option("--M", M);
  moments->add_option("--m", m);
  moments->add_option("--k", k);
  moments->add_flag("--exploratory", exploratory, "record violated parameter windows instead of failing");

  auto* titch = app.add_subcommand("titchmarsh", "sum Z(t_{n-1}) Z(t_n) over n <= N");
  titch->add_option("--N", N)->required();

  auto* primes = app.add_subcommand("primes", "prime sums");
  primes->set_help_flag("--help", "print this help");
  primes->add_option("--kind", kind)->required()->check(CLI::IsMember({"mertens", "vy", "vxh", "diagonal"}));
  primes->add_option("--x", x);
  primes->add_option("--h", h);
  primes->add_option("--y", y);
  primes->add_option("--t", t);
  primes->add_option("--k", k);

  auto* ingest = app.add_subcommand("ingest", "match an external list of ordinates against computed zeros");
  ingest->add_option("file", file)->required();
  ingest->add_option("--tol", tol);

  auto* verify = app.add_subcommand("verify-paper", "historical and bound regression table");
  verify->add_option("--n-max", n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gram) {
      if (lo < 0 || hi < lo) throw PreconditionError("gram: need 0 <= from <= to");
      Report r;
      r.columns = {"n", "t", "z", "good"};
      for (std::int64_t n = lo; n <= hi; ++n) {
        const double tn = gram_point(n).t;
        const double z = hardy_z(tn).z;
        const bool good = n % 2 == 1 ? z > 0 : z < 0;
        r.rows.push_back({i(n), format_height(tn), format_value(z), b(n == 0 || good)});
      }
      r.provenance.emplace_back("gram_point", "theta(t_n) = (n - 1) pi");
      emit(r);
    } else if (*zeros) {
      if (!(t_lo >= 0 && t_lo < t_hi)) throw PreconditionError("zeros: need 0 <= t-lo < t-hi");
      const ZeroTable tab = table_for(gram_index_below(t_hi) + 1);
      Report r;
      r.columns = {"index", "t", "bracket_half_width", "certified", "gram_index", "ambiguous"};
      for (const auto& z : tab.zeros_in(t_lo, t_hi)) {
        r.rows.push_back({i(z.index), format_height(z.t), format_value(z.bracket_width), b(z.certified),
                          i(z.gram_index), b(z.ambiguous)});
      }
      r.provenance.emplace_back("find_zeros", "certified_gram=" + i(tab.certified_gram()));
      emit(r);
    } else if (*classify) {
      const ZeroTable tab = table_for(hi);
      Report r;
      r.kind = ReportKind::classification;
      r.columns = {"n", "zero_count", "r", "sgl", "gl", "wgl", "ambiguous"};
      for (const auto& c : classify_intervals(tab, lo, hi)) {
        r.rows.push_back({i(c.n), i(c.zero_count), i(c.r), b(c.sgl), b(c.gl), b(c.wgl), b(c.ambiguous)});
      }
      r.provenance.emplace_back("classify_intervals", "G_n = (t_{n-1}, t_n]");
      emit(r);
    } else if (*delta) {
      if (lo < 1 || hi < lo) throw PreconditionError("delta: need 1 <= from <= to");
      const ZeroTable tab = table_for(hi + 64);
      Report r;
      r.columns = {"zero_index", "gram_index", "delta", "on_line"};
      for (std::int64_t n = lo; n <= hi; ++n) {
        const auto d = delta_n(tab, n);
        r.rows.push_back({i(d.zero_index), i(d.gram_index), i(d.delta), b(d.on_line)});
      }
      r.provenance.emplace_back("delta_n", "Delta_n = m - n, t_{m-1} < gamma_n <= t_m");
      emit(r);
    } else if (*nu) {
      const ZeroTable tab = table_for(N);
      const auto hist = nu_histogram(tab, N);
      Report r;
      r.kind = ReportKind::histogram;
      r.columns = {"k", "nu_k"};
      for (const auto& [kk, c] : hist.counts) r.rows.push_back({i(kk), i(c)});
      r.provenance.emplace_back("nu_histogram", "N=" + i(N) + " S(t_N+0)=" + i(hist.s_at_end) +
                                                    " identities=" + b(nu_identities_hold(hist)));
      emit(r);
    } else if (*moments) {
      const ZeroTable tab = table_for(N + M + m);
      if (kind == "empty-crowded") {
        const auto c = empty_and_crowded_counts(tab, N, M);
        Report r;
        r.kind = ReportKind::moment;
        r.columns = {"N", "M", "empty", "crowded", "empty_fraction", "crowded_fraction"};
        r.rows.push_back({i(N), i(M), i(c.empty), i(c.crowded), format_value(c.empty_fraction),
                          format_value(c.crowded_fraction)});
        emit(r);
      } else {
        MomentReport rep;
        if (kind == "first") {
          rep = first_moment(tab, N, M);
        } else if (kind == "selberg-even" || kind == "selberg-odd") {
          rep = selberg_delta_moment(tab, N, M, k, kind == "selberg-even" ? Parity::even : Parity::odd, g.epsilon,
                                     exploratory);
        } else {
          const auto cfg = make_moment_config(N, M, m, k, g.epsilon, exploratory);
          if (kind == "block") rep = block_difference_moment(tab, cfg);
          else if (kind == "adjacent") rep = adjacent_difference_moment(tab, cfg);
          else if (kind == "alternating") rep = alternating_sum(tab, cfg);
          else rep = residual_moments(tab, cfg);
        }
        emit(moment_report(rep));
      }
    } else if (*titch) {
      const ZeroTable tab = table_for(N);
      emit(moment_report(titchmarsh_correlation(tab, N)));
    } else if (*primes) {
      if (!g.cache_dir.empty()) set_prime_cache_dir(g.cache_dir);
      Report r;
      if (kind == "mertens") {
        const auto s = mertens_sums(static_cast<std::uint64_t>(x));
        r.columns = {"x", "sum_logp_over_p", "sum_recip_p", "mertens_deviation"};
        r.rows.push_back({format_value(x), format_value(s.sum_logp_over_p), format_value(s.sum_recip_p),
                          format_value(s.sum_recip_p - std::log(std::log(x)) - kMertensConstant)});
      } else if (kind == "vy") {
        r.columns = {"t", "y", "v_y"};
        r.rows.push_back({format_height(t), format_value(y), format_value(v_y(t, y))});
      } else if (kind == "vxh") {
        const auto v = v_xh(x, h);
        r.columns = {"x", "h", "value", "main_term", "deviation"};
        r.rows.push_back({format_value(x), format_value(h), format_value(v.value), format_value(v.main_term),
                          format_value(v.deviation)});
      } else {
        const auto d = diagonal_identity_check(k, y, [](std::uint64_t) { return std::complex<double>(1, 0); });
        r.columns = {"k", "y", "left", "sigma1", "sigma2", "theta", "holds"};
        r.rows.push_back({i(k), format_value(y), format_value(d.left), format_value(d.sigma1), format_value(d.sigma2),
                          format_value(d.theta), b(d.holds)});
      }
      emit(r);
    } else if (*ingest) {
      const auto ext = read_ordinates(file);
      const double top = ext.empty() ? 20.0 : ext.back() + 1.0;
      const ZeroTable tab = table_for(gram_index_below(top) + 1);
      std::vector<double> comp;
      for (const auto& z : tab.zeros_in(0, top)) comp.push_back(z.t);
      const auto mr = match_ordinates(ext, comp, tol);
      Report r;
      r.columns = {"matched", "max_abs_diff", "unmatched_external", "unmatched_computed"};
      r.rows.push_back({i(mr.matched), format_value(mr.max_abs_diff), i(static_cast<std::int64_t>(mr.unmatched_external.size())),
                        i(static_cast<std::int64_t>(mr.unmatched_computed.size()))});
      r.provenance.emplace_back("ingest", file + " tol=" + format_value(tol));
      emit(r);
      if (!mr.unmatched_external.empty()) return 1;
    } else if (*verify) {
      RegressionOptions ro;
      ro.cache_dir = g.cache_dir;
      ro.n_max = n_max;
      ro.threads = g.threads;
      ro.epsilon = g.epsilon;
      if (!g.cache_dir.empty()) set_prime_cache_dir(g.cache_dir);
      const Report r = run_paper_regression(ro);
      emit(r);
      return regression_failures(r) > 0 ? 1 : 0;
    }
  } catch (const UncertifiedRange& e) {
    std::cerr << "uncertified range: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
