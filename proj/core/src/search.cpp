#include "postage/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <thread>

#include "json_detail.hpp"
#include "binomial.hpp"
#include "postage/checked.hpp"
#include "postage/cover.hpp"
#include "postage/error.hpp"
#include "postage/report_json.hpp"

namespace postage {

namespace {

bool emit_symmetric(std::vector<std::uint64_t>& lower, std::size_t k, std::uint64_t top,
                    const BasisVisitor& visit) {
  const auto half = lower.size();
  std::vector<std::uint64_t> full(k);
  std::copy(lower.begin(), lower.end(), full.begin());
  full[k - 1] = top;
  for (std::size_t i = 1; i <= half; ++i) full[k - 1 - i] = top - full[i - 1];
  return visit(Basis(std::move(full)));
}

// Fills lower[depth..half-1] with increasing values; `limit` caps a_half.
bool walk_symmetric_half(std::vector<std::uint64_t>& lower, std::size_t half, std::size_t k,
                         std::uint64_t ak_max, std::uint64_t limit, const BasisVisitor& visit) {
  const auto depth = lower.size();
  if (depth == half) {
    const auto a_half = lower.back();
    if (k % 2 == 0) return emit_symmetric(lower, k, 2 * a_half, visit);
    for (std::uint64_t top = 2 * a_half + 1; top <= ak_max; ++top)
      if (!emit_symmetric(lower, k, top, visit)) return false;
    return true;
  }
  const auto remaining = half - depth - 1;  // elements still to place after this one
  if (limit < remaining) return true;
  for (std::uint64_t a = lower.back() + 1; a <= limit - remaining; ++a) {
    lower.push_back(a);
    bool go_on = walk_symmetric_half(lower, half, k, ak_max, limit, visit);
    lower.pop_back();
    if (!go_on) return false;
  }
  return true;
}

bool walk_all(std::vector<std::uint64_t>& prefix, std::size_t k, std::uint64_t ak_max,
              const BasisVisitor& visit) {
  if (prefix.size() == k) return visit(Basis(prefix));
  const auto remaining = k - prefix.size() - 1;
  if (ak_max < remaining) return true;
  for (std::uint64_t a = prefix.back() + 1; a <= ak_max - remaining; ++a) {
    prefix.push_back(a);
    bool go_on = walk_all(prefix, k, ak_max, visit);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool for_each_symmetric(std::size_t k, std::uint64_t ak_max, const BasisVisitor& visit) {
  if (k == 0 || ak_max < 1) return true;
  if (k == 1) return visit(Basis({1}));
  const auto half = k / 2;
  // Even k: a_k = 2 a_half. Odd k: a_k >= 2 a_half + 1.
  const std::uint64_t limit = (k % 2 == 0) ? ak_max / 2 : (ak_max - 1) / 2;
  if (limit < 1) return true;
  std::vector<std::uint64_t> lower{1};
  return walk_symmetric_half(lower, half, k, ak_max, limit, visit);
}

std::vector<Basis> enumerate_symmetric(std::size_t k, std::uint64_t ak_max) {
  std::vector<Basis> out;
  for_each_symmetric(k, ak_max, [&](const Basis& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

bool for_each_basis(std::size_t k, std::uint64_t ak_max, const BasisVisitor& visit) {
  if (k == 0 || ak_max < 1) return true;
  std::vector<std::uint64_t> prefix{1};
  return walk_all(prefix, k, ak_max, visit);
}

std::string_view to_string(ScanMode mode) noexcept {
  return mode == ScanMode::Symmetric ? "symmetric" : "all";
}

ScanMode parse_scan_mode(std::string_view text) {
  if (text == "symmetric") return ScanMode::Symmetric;
  if (text == "all") return ScanMode::All;
  throw Error(ErrorCode::InvalidArgument, "scan mode must be 'symmetric' or 'all'");
}

void validate(const ScanSpec& spec) {
  if (spec.k_min < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (spec.k_max < spec.k_min) throw Error(ErrorCode::InvalidArgument, "k_max < k_min");
  if (spec.ak_max < spec.k_max)
    throw Error(ErrorCode::InvalidArgument, "ak_max must be >= k (" + std::to_string(spec.k_max) +
                                                ")");
  if (spec.h_cap < 1) throw Error(ErrorCode::InvalidArgument, "h_cap must be >= 1");
}

bool scan_order_less(const Basis& a, const Basis& b) {
  if (a.k() != b.k()) return a.k() < b.k();
  return a < b;
}

namespace {

ScanRecord evaluate(const Basis& basis, const ScanSpec& spec) {
  ScanRecord record{basis, std::nullopt, {}};
  try {
    const bool symmetric = is_symmetric(basis);
    record.report = analyze(basis, symmetric ? std::nullopt : std::optional(spec.h_cap));
  } catch (const Error& e) {
    record.error = e.what();
  }
  return record;
}

std::vector<ScanRecord> evaluate_batch(const std::vector<Basis>& batch, const ScanSpec& spec,
                                       unsigned threads) {
  std::vector<std::optional<ScanRecord>> slots(batch.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) slots[i] = evaluate(batch[i], spec);
  };
  const auto workers = std::min<std::size_t>(std::max(1u, threads), batch.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  std::vector<ScanRecord> out;
  out.reserve(batch.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

constexpr std::size_t kBatchPerThread = 256;

}  // namespace

ScanSummary scan_conjecture(const ScanSpec& spec, const ScanSink& sink, unsigned threads,
                            const std::optional<Basis>& resume_after) {
  validate(spec);
  ScanSummary summary;
  const std::size_t batch_size = kBatchPerThread * std::max(1u, threads);
  std::vector<Basis> batch;
  bool stopped = false;

  auto flush = [&] {
    for (const auto& record : evaluate_batch(batch, spec, threads)) {
      ++summary.scanned;
      if (!record.report) ++summary.errors;
      else if (record.report->counterexample) ++summary.counterexamples;
      if (!sink(record)) {
        stopped = true;
        break;
      }
    }
    batch.clear();
    return !stopped;
  };
  auto collect = [&](const Basis& b) {
    if (resume_after && !scan_order_less(*resume_after, b)) return true;
    batch.push_back(b);
    return batch.size() < batch_size || flush();
  };

  for (auto k = spec.k_min; k <= spec.k_max && !stopped; ++k) {
    if (spec.mode == ScanMode::Symmetric)
      for_each_symmetric(k, spec.ak_max, collect);
    else
      for_each_basis(k, spec.ak_max, collect);
  }
  if (!stopped && !batch.empty()) flush();
  summary.complete = !stopped;
  return summary;
}

std::string scan_record_to_json(const ScanRecord& record) {
  if (record.report) return report_to_json(*record.report);
  nlohmann::ordered_json j;
  j["basis"] = record.basis.to_string();
  j["k"] = record.basis.k();
  j["error"] = record.error;
  return j.dump();
}

std::string scan_summary_to_json(const ScanSpec& spec, const ScanSummary& summary) {
  nlohmann::ordered_json box;
  box["k_min"] = spec.k_min;
  box["k_max"] = spec.k_max;
  box["ak_max"] = spec.ak_max;
  box["h_cap"] = spec.h_cap;
  box["mode"] = to_string(spec.mode);
  nlohmann::ordered_json s;
  s["scanned"] = summary.scanned;
  s["counterexamples"] = summary.counterexamples;
  s["errors"] = summary.errors;
  s["box"] = box;
  nlohmann::ordered_json j;
  j["summary"] = s;
  return j.dump();
}

std::filesystem::path checkpoint_path(const std::filesystem::path& out) {
  auto p = out;
  p += ".checkpoint";
  return p;
}

namespace {

void write_checkpoint(const std::filesystem::path& out, const Basis& last) {
  const auto path = checkpoint_path(out);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    f << last.to_string() << '\n';
    if (!f) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// Reloads the lines of a previous run up to the checkpointed basis, tallying them.
std::vector<std::string> reload_prefix(const std::filesystem::path& out, const Basis& last,
                                       ScanSummary& tally) {
  std::ifstream in(out);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + out.string());
  std::vector<std::string> kept;
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: partial write
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::ordered_json::exception&) {
      break;
    }
    if (j.contains("summary")) break;
    ++tally.scanned;
    if (j.contains("error")) ++tally.errors;
    else if (detail::report_from_object(j).counterexample) ++tally.counterexamples;
    kept.push_back(line);
    if (j.at("basis").get<std::string>() == last.to_string()) return kept;
  }
  throw Error(ErrorCode::Io, "checkpoint basis " + last.to_string() + " not found in " +
                                 out.string());
}

}  // namespace

ScanSummary run_scan(const ScanSpec& spec, const ScanFileOptions& options) {
  validate(spec);
  const auto ckpt = checkpoint_path(options.out);
  ScanSummary prior;
  std::optional<Basis> resume_after;
  std::vector<std::string> kept;

  if (options.resume && std::filesystem::exists(options.out) && std::filesystem::exists(ckpt)) {
    std::ifstream c(ckpt);
    std::string text;
    std::getline(c, text);
    resume_after = parse_basis(text);
    kept = reload_prefix(options.out, *resume_after, prior);
  } else {
    std::error_code ec;
    std::filesystem::remove(ckpt, ec);
  }

  std::ofstream out(options.out, std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + options.out.string());
  for (const auto& line : kept) out << line << '\n';

  std::optional<Basis> last = resume_after;
  std::uint64_t emitted = 0;
  auto checkpoint = [&] {
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write failed on " + options.out.string());
    if (last) write_checkpoint(options.out, *last);
  };

  auto fresh = scan_conjecture(
      spec,
      [&](const ScanRecord& record) {
        out << scan_record_to_json(record) << '\n';
        last = record.basis;
        ++emitted;
        if (emitted % 256 == 0) checkpoint();
        return !(options.stop_after && emitted >= *options.stop_after);
      },
      options.threads, resume_after);

  ScanSummary total{prior.scanned + fresh.scanned, prior.counterexamples + fresh.counterexamples,
                    prior.errors + fresh.errors, fresh.complete};
  if (total.complete) out << scan_summary_to_json(spec, total) << '\n';
  checkpoint();
  return total;
}

namespace {

struct ExtremalSearch {
  StampCount h;
  std::size_t k;
  std::uint64_t ceiling;
  std::uint64_t bound;
  std::vector<std::vector<StampCount>> tables;  // one per depth
  std::vector<std::uint64_t> prefix;
  std::uint64_t best = 0;
  std::vector<Basis> witnesses;

  std::uint64_t prefix_cover(const std::vector<StampCount>& t) const {
    std::uint64_t x = 1;
    while (t[x] <= h) ++x;
    return x - 1;
  }

  void run(std::size_t depth) {
    const auto& table = tables[depth - 1];
    const auto n = prefix_cover(table);
    if (depth == k) {
      if (n > best) {
        best = n;
        witnesses.clear();
      }
      if (n == best) witnesses.emplace_back(prefix);
      return;
    }
    // Past n + 1 the value n + 1 stays uncovered; such bases are never extremal.
    const auto room = k - depth - 1;
    const auto hi = std::min(n + 1, ceiling - room);
    for (std::uint64_t a = prefix.back() + 1; a <= hi; ++a) {
      auto& next = tables[depth];
      next = table;
      for (std::uint64_t x = a; x < next.size(); ++x)
        if (next[x - a] + 1 < next[x]) next[x] = next[x - a] + 1;
      prefix.push_back(a);
      run(depth + 1);
      prefix.pop_back();
    }
  }
};

}  // namespace

ExtremalResult search_extremal(StampCount h, std::size_t k, const ExtremalOptions& options) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (k == 1) return ExtremalResult{h, 1, options.ak_ceiling.value_or(1), h, {Basis({1})}};

  std::uint64_t ceiling;
  if (options.ak_ceiling) {
    ceiling = *options.ak_ceiling;
  } else {
    ExtremalOptions inner = options;
    inner.ak_ceiling.reset();
    ceiling = checked_add(search_extremal(h, k - 1, inner).n_star, 1);
  }
  if (ceiling < k)
    throw Error(ErrorCode::InvalidArgument,
                "ceiling " + std::to_string(ceiling) + " leaves no room for " + std::to_string(k) +
                    " elements");
  if (detail::binomial_capped(ceiling - 1, k - 1, options.max_candidates) > options.max_candidates)
    throw Error(ErrorCode::TooLarge, "more than " + std::to_string(options.max_candidates) +
                                         " candidate bases with a_k <= " +
                                         std::to_string(ceiling));

  const auto bound = checked_add(checked_mul(h, ceiling), 1);
  if (bound > kMaxTableBound) throw Error(ErrorCode::Overflow, "table too large");

  ExtremalSearch search{h, k, ceiling, bound, {}, {1}, 0, {}};
  search.tables.assign(k, std::vector<StampCount>(bound + 1));
  for (std::uint64_t x = 0; x <= bound; ++x)
    search.tables[0][x] = static_cast<StampCount>(x);  // {1}: x needs x stamps
  search.run(1);
  return ExtremalResult{h, k, ceiling, search.best, std::move(search.witnesses)};
}

}  // namespace postage
