#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "postage/analysis.hpp"
#include "postage/basis.hpp"

namespace postage {

/// Visitor for enumerations; return false to stop early.
using BasisVisitor = std::function<bool(const Basis&)>;

/// Every symmetric basis with k elements and a_k <= ak_max, once each, in
/// lexicographic order. Only the free half is enumerated; the rest is derived.
/// Returns false if the visitor stopped the walk.
bool for_each_symmetric(std::size_t k, std::uint64_t ak_max, const BasisVisitor& visit);
std::vector<Basis> enumerate_symmetric(std::size_t k, std::uint64_t ak_max);

/// Every basis {1, a_2, ..., a_k} with a_k <= ak_max, in lexicographic order.
bool for_each_basis(std::size_t k, std::uint64_t ak_max, const BasisVisitor& visit);

enum class ScanMode { Symmetric, All };

std::string_view to_string(ScanMode mode) noexcept;
ScanMode parse_scan_mode(std::string_view text);

/// A bounded box of bases: k_min <= k <= k_max, a_k <= ak_max.
///
/// Symmetric bases always search h1 up to max(h0, 2h0-2), where it is
/// guaranteed to exist; other bases (All mode) stop at h_cap.
struct ScanSpec {
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::uint64_t ak_max = 1;
  StampCount h_cap = kDefaultH1Cap;
  ScanMode mode = ScanMode::Symmetric;
};

/// Throws InvalidArgument on an empty or ill-formed box.
void validate(const ScanSpec& spec);

/// Orders bases as the scan emits them: by k, then lexicographically.
bool scan_order_less(const Basis& a, const Basis& b);

/// Outcome for one basis. Exactly one of `report` / `error` is meaningful.
struct ScanRecord {
  Basis basis;
  std::optional<BasisReport> report;
  std::string error;
};

struct ScanSummary {
  std::uint64_t scanned = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t errors = 0;
  bool complete = false;  // false when stopped early
};

/// Sink for scan records; return false to stop the scan.
using ScanSink = std::function<bool(const ScanRecord&)>;

/// Analyzes every basis in the box and feeds the sink in scan order.
/// Evaluation may use `threads` workers; the sink always sees the same
/// sequence. Bases at or before `resume_after` (scan order) are skipped.
ScanSummary scan_conjecture(const ScanSpec& spec, const ScanSink& sink, unsigned threads = 1,
                            const std::optional<Basis>& resume_after = std::nullopt);

std::string scan_record_to_json(const ScanRecord& record);
std::string scan_summary_to_json(const ScanSpec& spec, const ScanSummary& summary);

struct ScanFileOptions {
  std::filesystem::path out;
  bool resume = false;
  unsigned threads = 1;
  /// Stop after this many newly emitted records, without writing the summary line.
  std::optional<std::uint64_t> stop_after;
};

/// Sidecar holding the last emitted basis: "<out>.checkpoint".
std::filesystem::path checkpoint_path(const std::filesystem::path& out);

/// JSONL scan: one record per line, then a summary line. With `resume`,
/// keeps the output up to the checkpointed basis and continues after it;
/// the finished file is identical to an uninterrupted run.
ScanSummary run_scan(const ScanSpec& spec, const ScanFileOptions& options);

struct ExtremalOptions {
  /// Largest a_k considered. Default: n*(h, k-1) + 1, computed recursively.
  std::optional<std::uint64_t> ak_ceiling;
  /// Refuse boxes with more than this many bases, C(ceiling - 1, k - 1).
  std::uint64_t max_candidates = 50'000'000;
};

struct ExtremalResult {
  StampCount h;
  std::size_t k;
  std::uint64_t ak_ceiling;
  std::uint64_t n_star;
  std::vector<Basis> witnesses;  // lexicographic
};

/// Exhaustive search for the k-element bases maximizing n(h).
/// Throws TooLarge when the box exceeds options.max_candidates.
ExtremalResult search_extremal(StampCount h, std::size_t k, const ExtremalOptions& options = {});

}  // namespace postage
