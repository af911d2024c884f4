#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "gramlab/zeros.hpp"

namespace gramlab {

inline constexpr int kCacheVersion = 1;

struct CacheManifest {
  int version = kCacheVersion;
  std::int64_t n_max_gram = 0;
  std::int64_t certified_gram = -1;
  bool certified = false;
  double t_max = 0;
  std::int64_t zero_count = 0;
  std::string method;
  double epsilon = 9e-4;
  std::string created;      ///< UTC, ISO 8601
  std::uint64_t checksum = 0;  ///< FNV-1a over gram.csv then zeros.csv
};

struct SaveOptions {
  bool allow_uncertified = false;
  double epsilon = 9e-4;
};

/// Writes gram.csv and zeros.csv (header `index,t`, heights at 17 significant
/// digits) and manifest.json into dir, holding dir/.lock while writing.
/// Throws UncertifiedRange for a table not certified through its n_max
/// unless opts.allow_uncertified.
CacheManifest save_range(const std::filesystem::path& dir, const ZeroTable& tab, const SaveOptions& opts = {});

/// Throws VersionMismatch, ChecksumMismatch, or ParseError on malformed files.
ZeroTable load_range(const std::filesystem::path& dir);
CacheManifest read_manifest(const std::filesystem::path& dir);

/// Cached table covering G_1..G_{n_max}: loaded from dir when it covers
/// n_max, otherwise built and (when dir is non-empty) saved.
ZeroTable cached_table(const std::filesystem::path& dir, std::int64_t n_max, const BuildOptions& opts);

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

struct MatchReport {
  std::int64_t matched = 0;
  double max_abs_diff = 0;
  std::vector<double> unmatched_external;
  std::vector<double> unmatched_computed;
};

/// One decimal ordinate per line, non-decreasing; blank lines ignored.
/// Throws ParseError with the 1-based line number.
std::vector<double> read_ordinates(const std::filesystem::path& path);

/// Greedy one-to-one matching of two ascending lists within match_tol.
MatchReport match_ordinates(const std::vector<double>& external, const std::vector<double>& computed,
                            double match_tol = 1e-4);

MatchReport ingest_external_table(const std::filesystem::path& path, const std::vector<double>& computed,
                                  double match_tol = 1e-4);

enum class ReportKind { classification, histogram, moment, paper_regression, table };
const char* to_string(ReportKind k);

struct Report {
  ReportKind kind = ReportKind::table;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> provenance;  ///< (operation, config)
};

/// Header row, LF line ends, RFC 4180 quoting.
std::string to_csv(const Report& r);
/// {"kind", "columns", "rows" (objects keyed by column), "provenance"}, fixed key order.
std::string to_json(const Report& r);

/// %.17g, the format used for every height in reports and caches.
std::string format_height(double t);
/// %.10g for derived quantities.
std::string format_value(double v);

struct RegressionOptions {
  std::filesystem::path cache_dir;
  std::int64_t n_max = 100000;
  unsigned threads = 1;
  double epsilon = 9e-4;
};

/// Every historical and bound assertion as a pass / fail / skipped row.
Report run_paper_regression(const RegressionOptions& opts);
/// Number of rows with status "fail".
std::int64_t regression_failures(const Report& r);

}  // namespace gramlab
