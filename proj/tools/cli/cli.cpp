#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "postage/postage.hpp"

namespace postage::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Overflow: return kOverflow;
    case ErrorCode::TooLarge: return kTooLarge;
    case ErrorCode::NotRepresentable:
    case ErrorCode::Io: return kFailure;
    default: return kInvalidInput;
  }
}

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Table, Json, Jsonl };

struct Rendered {
  ojson doc;
  std::string table;
  int code = kOk;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Terminal terminal;
  Format format;
};

std::string bold_red(const Context& ctx, const std::string& s) {
  return ctx.terminal.color ? "\x1b[1;31m" + s + "\x1b[0m" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(Context& ctx, const Rendered& r) {
  switch (ctx.format) {
    case Format::Table: ctx.out << r.table; break;
    case Format::Json: ctx.out << r.doc.dump(2) << '\n'; break;
    case Format::Jsonl: ctx.out << r.doc.dump() << '\n'; break;
  }
}

ojson generation_json(const Generation& g) {
  ojson j;
  j["coefficients"] = g.coefficients;
  j["value"] = g.value;
  j["weight"] = g.weight;
  return j;
}

std::string generation_text(const Basis& basis, const Generation& g) {
  std::ostringstream s;
  s << g.value << " =";
  bool first = true;
  for (std::size_t i = basis.k(); i-- > 0;) {
    if (g.coefficients[i] == 0) continue;
    s << (first ? " " : " + ") << g.coefficients[i] << '*' << basis[i];
    first = false;
  }
  if (first) s << " 0";
  s << "  (weight " << g.weight << ")\n";
  return s.str();
}

ojson bases_json(const std::vector<Basis>& bases) {
  ojson arr = ojson::array();
  for (const auto& b : bases) arr.push_back(b.to_string());
  return arr;
}

Rendered render_cover(const Basis& basis, StampCount h) {
  Rendered r;
  auto n = cover(basis, h);
  r.doc["basis"] = basis.to_string();
  r.doc["h"] = h;
  r.doc["cover"] = n;
  r.table = std::to_string(n) + "\n";
  return r;
}

Rendered render_profile(const Basis& basis, StampCount h_max) {
  Rendered r;
  auto profile = cover_profile(basis, h_max);
  r.doc["basis"] = basis.to_string();
  r.doc["rows"] = ojson::array();
  std::ostringstream t;
  t << "   h          n  saturated\n";
  for (const auto& row : profile.rows) {
    ojson j;
    j["h"] = row.h;
    j["n"] = row.n;
    j["saturated"] = row.saturated;
    r.doc["rows"].push_back(j);
    t << std::setw(4) << row.h << ' ' << std::setw(10) << row.n << "  " << yes_no(row.saturated)
      << '\n';
  }
  r.table = t.str();
  return r;
}

Rendered render_report(const Context& ctx, const BasisReport& report) {
  Rendered r;
  r.doc = ojson::parse(report_to_json(report));
  std::ostringstream t;
  t << "basis:            " << report.basis.to_string() << '\n'
    << "k:                " << report.basis.k() << '\n'
    << "symmetric:        " << yes_no(report.symmetric) << '\n'
    << "h0:               " << report.h0 << '\n'
    << "h1:               " << (report.h1 ? std::to_string(*report.h1) : "not found within cap")
    << '\n'
    << "theorem_bound:    " << report.theorem_bound << '\n'
    << "conjecture_holds: " << yes_no(report.conjecture_holds) << '\n'
    << "counterexample:   "
    << (report.counterexample ? bold_red(ctx, "yes") : std::string("no")) << '\n';
  r.table = t.str();
  if (!report.h1) r.code = kCapExhausted;
  return r;
}

// Applies `fn` to --basis, or to every line of --basis-file (emitting JSONL).
int for_bases(Context& ctx, const std::string& basis_text, const std::string& basis_file,
              const std::function<Rendered(const Basis&)>& fn) {
  if (basis_file.empty()) {
    auto r = fn(parse_basis(basis_text));
    emit(ctx, r);
    return r.code;
  }
  std::ifstream in(basis_file);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + basis_file);
  int status = kOk;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    ojson doc;
    int code = kOk;
    try {
      auto r = fn(parse_basis(line));
      doc = std::move(r.doc);
      code = r.code;
    } catch (const Error& e) {
      doc = ojson::object();
      doc["line"] = line_no;
      doc["input"] = line;
      doc["error"] = e.what();
      code = exit_code_for(e.code());
    }
    ctx.out << doc.dump() << '\n';
    if (status == kOk) status = code;
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& terminal) {
  CLI::App app{"Covers (h-ranges) of additive bases for the postage stamp problem"};
  app.name("postage");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print help and exit");

  std::string format_text;
  app.add_option("--format", format_text, "Output format (default: table on a terminal, else json)")
      ->check(CLI::IsMember({"table", "json", "jsonl"}));

  std::string basis_text, basis_file;
  auto add_basis = [&](CLI::App* sub, bool allow_file) {
    if (allow_file) {
      auto* input = sub->add_option_group("input");
      input->add_option("--basis", basis_text, "Comma-separated basis, e.g. 1,3,6,10");
      input->add_option("--basis-file", basis_file,
                        "File with one basis per line (# comments); emits JSONL");
      input->require_option(1);
    } else {
      sub->add_option("--basis", basis_text, "Comma-separated basis, e.g. 1,3,6,10")->required();
    }
  };
  const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
  const auto positive32 = CLI::Range(StampCount{1}, StampCount{1} << 20);

  StampCount h = 1, h_max = 1, cap = 0, h_cap = kDefaultH1Cap;
  std::uint64_t x = 0, p = 0, ak_max = 1, ceiling = 0, max_candidates = 0;
  std::uint64_t brute_ceiling = kDefaultBruteForceCeiling, stop_after = 0;
  std::size_t k = 1, k_min = 0;
  unsigned threads = 1;
  std::string kind, parity, mode = "symmetric", out_path;
  bool resume = false;

  auto* c_cover = app.add_subcommand("cover", "Print n(h, A)");
  add_basis(c_cover, true);
  c_cover->add_option("--h", h, "Number of stamps")->required()->check(positive32);

  auto* c_profile = app.add_subcommand("profile", "Covers for h = 1..h-max");
  add_basis(c_profile, true);
  c_profile->add_option("--h-max", h_max)->required()->check(positive32);

  auto* c_brute = app.add_subcommand("brute", "Cover by exhaustive enumeration (oracle)");
  add_basis(c_brute, false);
  c_brute->add_option("--h", h)->required()->check(positive32);
  c_brute->add_option("--ceiling", brute_ceiling, "Max coefficient vectors")->check(positive);

  auto* c_gen = app.add_subcommand("generation", "Minimal generation of x with at most h stamps");
  add_basis(c_gen, false);
  c_gen->add_option("--x", x)->required();
  c_gen->add_option("--h", h)->required()->check(positive32);

  auto* c_reflect =
      app.add_subcommand("reflect", "Reflect an h0-generation of x < a_k onto h0*a_k - x");
  add_basis(c_reflect, false);
  c_reflect->add_option("--x", x)->required();

  auto* c_sym = app.add_subcommand("symmetrize", "Extend a half basis to a symmetric basis");
  add_basis(c_sym, false);
  c_sym->add_option("--parity", parity, "odd (2m-1 elements) or even (2m)")
      ->required()
      ->check(CLI::IsMember({"odd", "even"}));

  auto* c_analyze = app.add_subcommand("analyze", "Symmetry, h0, h1 and conjecture verdicts");
  add_basis(c_analyze, true);
  auto* cap_opt = c_analyze->add_option(
      "--cap", cap, "h1 search cap (default: max(h0,2h0-2) if symmetric, else 64)");
  cap_opt->check(positive32);

  auto* c_family = app.add_subcommand("family", "Parametric counterexample families");
  c_family->add_option("--kind", kind, "a5 | a9 | a10")
      ->required()
      ->check(CLI::IsMember({"a5", "a9", "a10"}, CLI::ignore_case));
  c_family->add_option("--p", p, "Odd parameter")->required();

  auto* c_enum = app.add_subcommand("enumerate", "List symmetric bases with k elements");
  c_enum->add_option("--k", k)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  c_enum->add_option("--ak-max", ak_max)->required()->check(positive);

  auto* c_scan = app.add_subcommand("scan", "Analyze every basis in a box; JSONL output");
  c_scan->add_option("--k", k, "Largest k scanned")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  c_scan->add_option("--k-min", k_min, "Smallest k scanned (default: --k)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  c_scan->add_option("--ak-max", ak_max)->required()->check(positive);
  c_scan->add_option("--h-cap", h_cap, "h1 cap for non-symmetric bases")->check(positive32);
  c_scan->add_option("--mode", mode)->check(CLI::IsMember({"symmetric", "all"}));
  c_scan->add_option("--out", out_path)->required();
  c_scan->add_flag("--resume", resume, "Continue from <out>.checkpoint");
  c_scan->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
  c_scan->add_option("--stop-after", stop_after, "Stop after N new records (no summary)")
      ->check(positive);

  auto* c_ext = app.add_subcommand("extremal", "Exhaustive extremal h-basis search");
  c_ext->add_option("--h", h)->required()->check(positive32);
  c_ext->add_option("--k", k)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  c_ext->add_option("--ceiling", ceiling, "Largest a_k (default: n*(h,k-1)+1)")->check(positive);
  c_ext->add_option("--max-candidates", max_candidates)->check(positive);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  Format format = terminal.stdout_is_tty ? Format::Table : Format::Json;
  if (format_text == "table") format = Format::Table;
  if (format_text == "json") format = Format::Json;
  if (format_text == "jsonl") format = Format::Jsonl;
  Context ctx{out, err, terminal, format};

  try {
    if (*c_cover) {
      return for_bases(ctx, basis_text, basis_file,
                       [&](const Basis& b) { return render_cover(b, h); });
    }
    if (*c_profile) {
      return for_bases(ctx, basis_text, basis_file,
                       [&](const Basis& b) { return render_profile(b, h_max); });
    }
    if (*c_brute) {
      auto basis = parse_basis(basis_text);
      Rendered r;
      auto n = brute_force_cover(basis, h, brute_ceiling);
      r.doc["basis"] = basis.to_string();
      r.doc["h"] = h;
      r.doc["cover"] = n;
      r.table = std::to_string(n) + "\n";
      emit(ctx, r);
      return kOk;
    }
    if (*c_gen) {
      auto basis = parse_basis(basis_text);
      auto g = find_generation(basis, x, h);
      Rendered r;
      r.doc["basis"] = basis.to_string();
      r.doc["x"] = x;
      r.doc["h"] = h;
      r.doc.update(generation_json(g));
      r.table = generation_text(basis, g);
      emit(ctx, r);
      return kOk;
    }
    if (*c_reflect) {
      auto basis = parse_basis(basis_text);
      if (!is_symmetric(basis)) throw Error(ErrorCode::NotSymmetric, basis.to_string());
      auto h0 = compute_h0(basis);
      auto source = find_generation(basis, x, h0);
      auto reflected = reflect_generation(basis, source, h0);
      Rendered r;
      r.doc["basis"] = basis.to_string();
      r.doc["x"] = x;
      r.doc["h0"] = h0;
      r.doc["source"] = generation_json(source);
      r.doc["reflected"] = generation_json(reflected);
      r.table = "h0 = " + std::to_string(h0) + "\n" + generation_text(basis, source) +
                generation_text(basis, reflected);
      emit(ctx, r);
      return kOk;
    }
    if (*c_sym) {
      auto half = parse_basis(basis_text);
      auto full = parity == "odd" ? symmetrize_odd(half) : symmetrize_even(half);
      Rendered r;
      r.doc["half"] = half.to_string();
      r.doc["parity"] = parity;
      r.doc["basis"] = full.to_string();
      r.doc["differences"] = differences(full);
      r.table = full.to_string() + "\n";
      emit(ctx, r);
      return kOk;
    }
    if (*c_analyze) {
      std::optional<StampCount> cap_arg;
      if (cap_opt->count()) cap_arg = cap;
      return for_bases(ctx, basis_text, basis_file, [&](const Basis& b) {
        return render_report(ctx, analyze(b, cap_arg));
      });
    }
    if (*c_family) {
      auto fk = parse_family_kind(kind);
      auto basis = family(fk, p);
      Rendered r;
      r.doc["kind"] = std::string(to_string(fk));
      r.doc["p"] = p;
      r.doc["basis"] = basis.to_string();
      r.table = basis.to_string() + "\n";
      emit(ctx, r);
      return kOk;
    }
    if (*c_enum) {
      auto bases = enumerate_symmetric(k, ak_max);
      Rendered r;
      r.doc["k"] = k;
      r.doc["ak_max"] = ak_max;
      r.doc["bases"] = bases_json(bases);
      for (const auto& b : bases) r.table += b.to_string() + "\n";
      emit(ctx, r);
      return kOk;
    }
    if (*c_scan) {
      ScanSpec spec;
      spec.k_max = k;
      spec.k_min = k_min ? k_min : k;
      spec.ak_max = ak_max;
      spec.h_cap = h_cap;
      spec.mode = parse_scan_mode(mode);
      ScanFileOptions opts;
      opts.out = out_path;
      opts.resume = resume;
      opts.threads = threads;
      if (stop_after) opts.stop_after = stop_after;
      auto summary = run_scan(spec, opts);
      err << (summary.complete ? "scan complete" : "scan stopped") << ": scanned "
          << summary.scanned << ", counterexamples " << summary.counterexamples << ", errors "
          << summary.errors << " (k " << spec.k_min << ".." << spec.k_max << ", a_k <= "
          << spec.ak_max << ", mode " << to_string(spec.mode) << ")\n";
      return summary.counterexamples > 0 ? kCounterexampleFound : kOk;
    }
    if (*c_ext) {
      ExtremalOptions opts;
      if (ceiling) opts.ak_ceiling = ceiling;
      if (max_candidates) opts.max_candidates = max_candidates;
      auto result = search_extremal(h, k, opts);
      Rendered r;
      r.doc["h"] = result.h;
      r.doc["k"] = result.k;
      r.doc["ak_ceiling"] = result.ak_ceiling;
      r.doc["n_star"] = result.n_star;
      r.doc["witnesses"] = bases_json(result.witnesses);
      r.table = "n* = " + std::to_string(result.n_star) + "\n";
      for (const auto& b : result.witnesses) r.table += "  " + b.to_string() + "\n";
      emit(ctx, r);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInvalidInput;
}

}  // namespace postage::cli
