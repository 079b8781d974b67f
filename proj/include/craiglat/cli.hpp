#pragma once

// Command-line front end. Exit status: 0 success, 2 usage or validation
// error, 3 capacity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "craiglat/codes.hpp"
#include "craiglat/craig.hpp"
#include "craiglat/exactnum.hpp"
#include "craiglat/lift.hpp"
#include "craiglat/records.hpp"
#include "craiglat/svp.hpp"

#ifndef CRAIGLAT_DATA_DIR
#define CRAIGLAT_DATA_DIR "data"
#endif

namespace craiglat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCapacity = 3;

inline int exit_code(const Error& e) { return e.kind() == ErrorKind::capacity ? kExitCapacity : kExitInvalid; }

/// Digits from CRAIGLAT_PRECISION, else 4.
inline int default_precision() {
  const char* env = std::getenv("CRAIGLAT_PRECISION");
  if (env == nullptr || *env == '\0') return 4;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1 && v <= 64) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::argument, "CRAIGLAT_PRECISION must be an integer in 1..64");
}

struct CommandConfig {
  std::uint64_t n = 0;
  std::uint64_t m = 1;
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t dim = 0;
  std::uint64_t p = 0;
  int id = 0;
  std::string bound;
  std::string value;
  int precision = 4;
  std::string basis_path;
  std::string code_path;
  std::string code_spec;
  std::string records_path = std::string(CRAIGLAT_DATA_DIR) + "/records.csv";
  std::string codes_path = std::string(CRAIGLAT_DATA_DIR) + "/codes.csv";
  std::string out_path;
  std::string format = "text";
  std::string tolerance = "0.05";
  std::string target;
  std::string target_name = "target";
  std::size_t max_rank = kDefaultEnumerationRank;
  std::size_t max_ambient = kDefaultMaxAmbient;
  bool repetition = false;
  bool certify = false;
};

namespace detail {

inline std::optional<RecordTable> try_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return ingest(in);
}

inline CodeTable try_codes(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  return parse_code_table(in);
}

inline RecordTable require_records(const std::string& path) { return ingest_file(path); }

/// Published value for this dimension, if the records file has one.
inline void print_reference(std::ostream& out, const CommandConfig& c, std::uint64_t dim) {
  const auto table = try_records(c.records_path);
  if (!table) return;
  for (const auto* e : table->at(dim))
    if (e->kind == RecordKind::paper_claim) out << "reference: " << e->log2_delta << " (" << e->name << ", " << e->source << ")\n";
  if (const auto* best = table->best_record(dim))
    out << "record: " << best->log2_delta << " (" << best->name << ")\n";
}

inline void print_lift(std::ostream& out, const LiftResult& r, int digits) {
  out << "params: " << to_string(r.params) << '\n';
  if (r.k == 0) {
    out << "code: none\n";
  } else {
    out << "code: " << to_string(r.code) << " (" << to_string(r.code.status) << ")\n";
  }
  out << "k: " << r.k << '\n';
  if (r.reference_k) out << "quoted k: " << *r.reference_k << '\n';
  out << "log2 delta: " << r.density.render(digits) << '\n';
  out << "provenance: " << to_string(r.density.provenance) << '\n';
  out << "min norm guarantee: " << r.min_norm_guarantee << '\n';
  if (r.lattice) out << "vol^2: " << r.lattice->vol_sq() << '\n';
  if (r.baseline) out << "baseline log2 delta: " << r.baseline->render(digits) << '\n';
}

inline LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open code file '" + path + "'");
  return read_generator(in);
}

inline IntMatrix read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open basis file '" + path + "'");
  return read_basis(in);
}

inline BigInt parse_bigint(const std::string& s, const char* what) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorKind::argument, std::string("bad integer for ") + what);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_construct(const CommandConfig& c, std::ostream& out) {
  const IntegerLattice lat = craig_basis(CraigParams{c.n, c.m, c.l}, c.max_ambient);
  if (c.out_path.empty()) {
    write_basis(out, lat.basis());
  } else {
    std::ofstream f(c.out_path);
    if (!f) throw Error(ErrorKind::argument, "cannot write '" + c.out_path + "'");
    write_basis(f, lat.basis());
    out << "wrote " << c.out_path << ": rank " << lat.rank() << ", ambient " << lat.ambient_dim() << ", vol^2 "
        << lat.vol_sq() << '\n';
  }
  return kExitOk;
}

inline int cmd_density(const CommandConfig& c, std::ostream& out) {
  const CraigParams p{c.n, c.m, c.l};
  const LogDensity d = center_density_lb(p, c.k, c.precision);
  out << "params: " << to_string(p) << '\n';
  out << "k: " << c.k << '\n';
  out << "log2 delta: " << d.rendered << '\n';
  out << "delta^2: " << d.delta_sq.square().get_str() << '\n';
  out << "min norm guarantee: " << (c.k == 0 ? 2 * c.m : 8 * c.m) << '\n';
  if (!c.basis_path.empty()) {
    const IntegerLattice lat(detail::read_basis_file(c.basis_path));
    out << "basis vol^2: " << lat.vol_sq() << '\n';
    out << "matches l^(2(m-1))(n+1): " << (lat.vol_sq() == craig_vol_sq(p) ? "yes" : "no") << '\n';
  }
  detail::print_reference(out, c, c.n);
  return kExitOk;
}

inline int cmd_lift(const CommandConfig& c, std::ostream& out) {
  const CraigParams p{c.n, c.m, c.l};
  LiftResult r;
  if (c.repetition) {
    r = lift_with_length_n_code(p, repetition(c.n), c.max_ambient);
  } else if (!c.code_path.empty()) {
    const LinearCode code = detail::read_code_file(c.code_path);
    r = code.length() == c.n + 1 ? lift_sublattice(p, code, c.max_ambient) : lift_with_length_n_code(p, code, c.max_ambient);
  } else if (!c.code_spec.empty()) {
    r = lift_with_length_n_code(p, parse_code_spec(c.code_spec, CodeStatus::table_known));
  } else {
    throw Error(ErrorKind::argument, "lift needs --code, --code-spec or --repetition");
  }
  detail::print_lift(out, r, c.precision);
  if (c.certify) {
    if (!r.lattice) throw Error(ErrorKind::capacity, "no basis to certify above the basis cap");
    const NormCertificate cert = verify_min_norm(*r.lattice, r.min_norm_guarantee, c.max_rank);
    out << "enumerated minimum norm: " << cert.minimum << '\n';
    out << "certificate: " << (cert.holds ? "holds" : "violated") << '\n';
  }
  if (!c.out_path.empty()) {
    if (!r.lattice) throw Error(ErrorKind::capacity, "no basis to write above the basis cap");
    std::ofstream f(c.out_path);
    if (!f) throw Error(ErrorKind::argument, "cannot write '" + c.out_path + "'");
    write_basis(f, r.lattice->basis());
  }
  detail::print_reference(out, c, c.n);
  return kExitOk;
}

/// Dimensions quoted in published existence arguments, keyed by (n, d).
inline const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& quoted_gv_dimensions() {
  static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> m = {
      {{4096, 1024}, 772}, {{4098, 1024}, 773}, {{4104, 1026}, 774}, {{4124, 1031}, 778}};
  return m;
}

inline int cmd_gv(const CommandConfig& c, std::ostream& out) {
  const std::size_t kmax = gv_max_k(c.n, c.d);
  out << "n: " << c.n << "\nd: " << c.d << '\n';
  out << "log2 V(n,d-1) floor: " << bit_length(binom_sum(c.n, c.d - 1)) - 1 << '\n';
  out << "max k: " << kmax << '\n';
  if (c.k != 0) out << "[" << c.n << "," << c.k << "," << c.d << "] exists by GV: " << (gv_exists(c.n, c.k, c.d) ? "yes" : "no") << '\n';
  const auto& quoted = quoted_gv_dimensions();
  if (const auto it = quoted.find({c.n, c.d}); it != quoted.end())
    out << "claimed k: " << it->second << " (" << (it->second <= kmax ? "confirmed" : "not confirmed") << ")\n";
  return kExitOk;
}

inline int cmd_verify(const CommandConfig& c, std::ostream& out) {
  const IntegerLattice lat(detail::read_basis_file(c.basis_path));
  const BigInt bound = detail::parse_bigint(c.bound, "--bound");
  const NormCertificate cert = verify_min_norm(lat, bound, c.max_rank);
  out << "rank: " << lat.rank() << "\nambient: " << lat.ambient_dim() << "\nvol^2: " << lat.vol_sq() << '\n';
  out << "minimum norm: " << cert.minimum << "\nbound: " << cert.bound << '\n';
  out << "certificate: " << (cert.holds ? "holds" : "violated") << '\n';
  if (cert.witness) {
    out << "witness:";
    for (const auto& x : *cert.witness) out << ' ' << x;
    out << '\n';
  }
  return kExitOk;
}

inline int cmd_table(const CommandConfig& c, std::ostream& out) {
  const CodeTable codes = detail::try_codes(c.codes_path);
  const TableReport rep = emit_table(c.id, codes, parse_decimal(c.tolerance), c.precision);
  if (c.format == "csv") write_csv(out, rep);
  else write_text(out, rep);
  return kExitOk;
}

inline int cmd_sweep(const CommandConfig& c, std::ostream& out) {
  const CodeTable codes = detail::try_codes(c.codes_path);
  const LiftResult r = sweep_dimension(c.n, &codes);
  detail::print_lift(out, r, c.precision);
  detail::print_reference(out, c, c.n);
  return kExitOk;
}

inline int cmd_mwbeat(const CommandConfig& c, std::ostream& out) {
  const LiftResult r = mw_beater_search(c.p);
  detail::print_lift(out, r, c.precision);
  out << "Mordell-Weil log2 delta: " << r.baseline->render(c.precision) << '\n';
  out << "margin: " << log2_difference(r.density.delta_sq / r.baseline->delta_sq, 0, c.precision).rendered << '\n';
  out << "next_prime(2p) < 2^1.001 p: " << (mw_prime_bound_holds(c.p) ? "yes" : "no") << '\n';
  detail::print_reference(out, c, r.params.n);
  return kExitOk;
}

inline int cmd_pipeline24(const CommandConfig& c, std::ostream& out) {
  const LiftResult r = pipeline_24n(c.dim);
  detail::print_lift(out, r, c.precision);
  out << "log2 delta at quoted k: " << center_density_lb(r.params, *r.reference_k, c.precision).rendered << '\n';
  detail::print_reference(out, c, c.dim);
  return kExitOk;
}

inline int cmd_conditional(const CommandConfig& c, std::ostream& out) {
  const CodeTable codes = detail::try_codes(c.codes_path);
  std::optional<std::string> name;
  std::optional<BigRational> target;
  if (!c.target.empty()) {
    name = c.target_name;
    target = parse_decimal(c.target);
  }
  const CodeSpec req = parse_code_spec(c.code_spec, CodeStatus::hypothetical);
  const ConditionalVerdict v = conditional_eval(CraigParams{c.n, c.m, c.l}, req, codes, name, target, c.precision);
  out << "params: " << to_string(CraigParams{c.n, c.m, c.l}) << '\n';
  out << "required code: " << to_string(v.required) << '\n';
  out << "achieved log2 delta: " << v.achieved_density.rendered << '\n';
  if (v.margin) out << "target: " << *v.target_name << ' ' << c.target << "\nmargin: " << v.margin->rendered << '\n';
  out << "status: " << to_string(v.status) << '\n';
  return kExitOk;
}

inline int cmd_compare(const CommandConfig& c, std::ostream& out) {
  const RecordTable table = detail::require_records(c.records_path);
  Comparison cmp;
  std::string candidate;
  if (!c.value.empty()) {
    cmp = compare(table, c.dim, parse_decimal(c.value), c.precision);
    candidate = c.value;
  } else {
    const CraigParams p{c.dim, c.m, c.l};
    const LogDensity d = center_density_lb(p, c.k, c.precision);
    cmp = compare(table, c.dim, d, c.precision);
    candidate = d.rendered + " (" + to_string(p) + " k=" + std::to_string(c.k) + ")";
  }
  out << "dim: " << c.dim << "\ncandidate: " << candidate << '\n';
  out << "record: " << cmp.record->log2_delta << " (" << cmp.record->name << ")\n";
  out << "verdict: " << to_string(cmp.verdict) << "\nmargin: " << cmp.margin << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  try {
    c.precision = default_precision();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }

  CLI::App app{"Analogous Craig lattices: construction, lifting, exact densities and certification", "craiglat"};
  app.require_subcommand(1, 1);
  app.add_option("--precision", c.precision, "decimal digits of log2 output")->check(CLI::Range(1, 64));

  auto craig_opts = [&c](CLI::App* s, bool need_l = true) {
    s->add_option("--n", c.n, "dimension")->required();
    s->add_option("--m", c.m, "order m")->capture_default_str();
    auto* l = s->add_option("--l", c.l, "modulus l (prime)");
    if (need_l) l->required();
  };
  auto records_opt = [&c](CLI::App* s) { s->add_option("--records", c.records_path, "records CSV")->capture_default_str(); };
  auto codes_opt = [&c](CLI::App* s) { s->add_option("--codes", c.codes_path, "code table CSV")->capture_default_str(); };

  auto* construct = app.add_subcommand("construct", "write the basis of A_n^(m,l)");
  craig_opts(construct);
  construct->add_option("--out", c.out_path, "output file (default stdout)");
  construct->add_option("--max-ambient", c.max_ambient, "basis size cap")->capture_default_str();

  auto* density = app.add_subcommand("density", "center density lower bound of A_n^(m,l) lifted by a k-dim code");
  craig_opts(density);
  density->add_option("--k", c.k, "code dimension (0: bare lattice)")->capture_default_str();
  density->add_option("--basis", c.basis_path, "also measure the volume of this basis file");
  records_opt(density);

  auto* lift = app.add_subcommand("lift", "lift a binary code into A_n^(m,l)");
  craig_opts(lift);
  lift->add_option("--code", c.code_path, "generator file (length n or n+1)");
  lift->add_option("--code-spec", c.code_spec, "known code n,k,d (formula only)");
  lift->add_flag("--repetition", c.repetition, "use the [n,1,n] repetition code");
  lift->add_flag("--certify", c.certify, "enumerate the shortest vector");
  lift->add_option("--out", c.out_path, "write the lifted basis");
  lift->add_option("--max-rank", c.max_rank, "enumeration rank cap")->capture_default_str();
  lift->add_option("--max-ambient", c.max_ambient, "basis size cap")->capture_default_str();
  records_opt(lift);

  auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov dimension for length n, distance d");
  gv->add_option("--n", c.n, "length")->required();
  gv->add_option("--d", c.d, "distance")->required();
  gv->add_option("--k", c.k, "check this dimension");

  auto* verify = app.add_subcommand("verify", "certify a minimum norm by exact enumeration");
  verify->add_option("--basis", c.basis_path, "basis file")->required();
  verify->add_option("--bound", c.bound, "norm bound")->required();
  verify->add_option("--max-rank", c.max_rank, "enumeration rank cap")->capture_default_str();

  auto* table = app.add_subcommand("table", "reproduce a published density table");
  table->add_option("--id", c.id, "table number")->required()->check(CLI::Range(1, 10));
  table->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
  table->add_option("--tolerance", c.tolerance, "agreement tolerance in log2")->capture_default_str();
  codes_opt(table);

  auto* sweep = app.add_subcommand("sweep", "best construction found for dimension n");
  sweep->add_option("--n", c.n, "dimension")->required();
  codes_opt(sweep);
  records_opt(sweep);

  auto* mwbeat = app.add_subcommand("mwbeat", "GV lift in dimension 2p-2 against the Mordell-Weil density");
  mwbeat->add_option("--p", c.p, "prime p = 5 mod 6")->required();
  records_opt(mwbeat);

  auto* pipe = app.add_subcommand("pipeline24", "GV lift in dimension 24t");
  pipe->add_option("--dim", c.dim, "dimension")->required();
  records_opt(pipe);

  auto* cond = app.add_subcommand("conditional", "density reachable with a code not known to exist");
  craig_opts(cond);
  cond->add_option("--code-spec", c.code_spec, "required code n,k,d")->required();
  cond->add_option("--target", c.target, "log2 density to beat");
  cond->add_option("--target-name", c.target_name, "label of the target");
  codes_opt(cond);

  auto* cmp = app.add_subcommand("compare", "compare a density with the best record in its dimension");
  cmp->add_option("--dim", c.dim, "dimension")->required();
  cmp->add_option("--value", c.value, "log2 density");
  cmp->add_option("--m", c.m, "order m")->capture_default_str();
  cmp->add_option("--l", c.l, "modulus l");
  cmp->add_option("--k", c.k, "code dimension")->capture_default_str();
  records_opt(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitInvalid;
  }

  try {
    if (*construct) return cmd_construct(c, out);
    if (*density) return cmd_density(c, out);
    if (*lift) return cmd_lift(c, out);
    if (*gv) return cmd_gv(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*table) return cmd_table(c, out);
    if (*sweep) return cmd_sweep(c, out);
    if (*mwbeat) return cmd_mwbeat(c, out);
    if (*pipe) return cmd_pipeline24(c, out);
    if (*cond) return cmd_conditional(c, out);
    if (*cmp) {
      if (c.value.empty() && c.l == 0) throw Error(ErrorKind::argument, "compare needs --value or --m/--l/--k");
      return cmd_compare(c, out);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace craiglat::cli
