#pragma once

#include "hyperfac/catalog.hpp"
#include "hyperfac/factorization.hpp"
#include "hyperfac/freeness.hpp"
#include "hyperfac/io.hpp"
#include "hyperfac/lattice.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace hyperfac::cli {

/// Exit codes.
enum Exit : int { kHolds = 0, kFails = 1, kUsage = 2, kInconclusive = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t budget = 0;
  unsigned threads = 1;
  bool exhaustive = false;
  std::string input, partition, cert, localize, flat, output;
  std::size_t l = 0, k = 0;
  int r = 0;
  std::string kind;
};

/// A verdict in both renderings.
struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  int code = kHolds;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::string poly_str(const std::vector<std::int64_t>& c) {
  std::string s;
  for (std::size_t d = c.size(); d-- > 0;) {
    const std::int64_t a = c[d];
    if (a == 0) continue;
    const std::int64_t m = a < 0 ? -a : a;
    if (s.empty()) s += a < 0 ? "-" : "";
    else s += a < 0 ? " - " : " + ";
    if (m != 1 || d == 0) s += std::to_string(m);
    if (d >= 1) s += "t";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

inline std::string partition_str(const Partition& pi) { return io::to_json(pi).dump(); }

inline std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw UsageError("--flat: '" + item + "' is not a hyperplane index");
    out.push_back(v);
  }
  return out;
}

inline json read_input(const std::string& path) {
  if (path == "-") {
    try {
      return json::parse(std::cin);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("<stdin>: ") + e.what());
    }
  }
  return io::read_json_file(path);
}

inline io::LoadedArrangement load_arrangement(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  try {
    auto loaded = io::arrangement_from_json(read_input(path));
    if (loaded.name.empty()) loaded.name = path;
    return loaded;
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T>
T load_with_context(const std::string& path, T (*parse)(const json&)) {
  try {
    return parse(io::read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Partition load_partition(const std::string& path, std::size_t n) {
  if (path.empty()) throw UsageError("--partition is required");
  auto pi = load_with_context<Partition>(path, io::partition_from_json);
  try {
    pi.validate(n);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": partition: " + e.what());
  }
  return pi;
}

template <ExactField F>
Flat flat_from_option(const Arrangement<F>& arr, const std::string& text) {
  auto idx = parse_indices(text);
  for (int i : idx)
    if (static_cast<std::size_t>(i) >= arr.size())
      throw UsageError("--flat: index " + std::to_string(i) + " out of range for " + std::to_string(arr.size()) + " hyperplanes");
  return closure(arr, IndexSet::of(arr.size(), idx));
}

inline SearchMode mode_of(const Options& o) { return o.exhaustive ? SearchMode::Exhaustive : SearchMode::Pruned; }
inline const char* mode_name(SearchMode m) { return m == SearchMode::Exhaustive ? "exhaustive" : "pruned"; }

template <ExactField F>
json flat_json(const Flat& x) {
  return json{{"members", x.members.elements()}, {"rank", x.rank}};
}

// ---- commands --------------------------------------------------------------

template <ExactField F>
Report cmd_lattice(const Arrangement<F>& arr, const std::string& name) {
  Report rep;
  auto lat = build_lattice(arr);
  auto chi = characteristic_polynomial(lat);
  rep.data = io::to_json(lat);
  rep.data["input"] = io::to_json(arr, name);
  rep.lines.push_back("lattice of " + name + ": " + std::to_string(lat.size()) + " flats, rank " + std::to_string(lat.max_rank()));
  for (int k = 0; k <= lat.max_rank(); ++k) {
    auto [lo, hi] = lat.rank_range(k);
    std::string line = "rank " + std::to_string(k) + " (" + std::to_string(hi - lo) + "):";
    for (int f = lo; f < hi; ++f) line += " " + join_ints(lat.members(f).elements());
    rep.lines.push_back(line);
  }
  rep.lines.push_back("chi(t) = " + poly_str(chi));
  return rep;
}

template <ExactField F>
Report cmd_check_nice(const Arrangement<F>& arr, const std::string& name, const Partition& pi) {
  Report rep;
  auto res = is_nice(arr, pi);
  rep.data = {{"input", io::to_json(arr, name)}, {"partition", io::to_json(pi)}, {"nice", res.nice}};
  if (res.nice) {
    rep.lines.push_back("partition " + partition_str(pi) + " of " + name + " is nice");
  } else if (!res.dependent_transversal.empty()) {
    rep.data["dependent_transversal"] = res.dependent_transversal;
    rep.lines.push_back("partition is not independent: transversal " + join_ints(res.dependent_transversal) +
                        " is linearly dependent");
  } else {
    rep.data["bad_flat"] = *res.bad_flat;
    rep.lines.push_back("partition is not nice: flat " + join_ints(*res.bad_flat) + " induces no singleton block");
  }
  rep.code = res.nice ? kHolds : kFails;
  return rep;
}

template <ExactField F>
Report cmd_check_indfac(const Arrangement<F>& arr, const std::string& name, const Partition& pi, const Options& o) {
  Report rep;
  auto cert = is_inductively_factored(arr, pi, o.budget);
  rep.data = {{"input", io::to_json(arr, name)}, {"partition", io::to_json(pi)}, {"inductively_factored", cert.has_value()}};
  if (cert) {
    rep.data["certificate"] = io::to_json(*cert);
    rep.data["exponents"] = exponents_from_factorization(pi, arr.dim());
    rep.lines.push_back("partition " + partition_str(pi) + " is an inductive factorization of " + name);
    rep.lines.push_back("certificate: " + io::to_json(*cert).dump());
  } else {
    rep.lines.push_back("partition " + partition_str(pi) + " is not an inductive factorization of " + name);
    rep.code = kFails;
  }
  return rep;
}

template <ExactField F>
Report cmd_find_indfac(const Arrangement<F>& arr, const std::string& name, const std::optional<AnySubspace>& u,
                       const Options& o) {
  Report rep;
  const SearchMode mode = mode_of(o);
  rep.data = {{"input", io::to_json(arr, name)}, {"mode", mode_name(mode)}};

  if (u || !o.flat.empty()) {
    Arrangement<F> local = Arrangement<F>::empty(arr.field(), arr.dim());
    std::vector<int> members;
    if (u) {
      const auto* sub = std::get_if<Subspace<F>>(&*u);
      if (!sub || !(sub->field() == arr.field())) throw UsageError("--localize: subspace is over a different field");
      if (sub->ambient_dim() != arr.dim()) throw UsageError("--localize: subspace lives in a different dimension");
      members = localization_indices(arr, *sub);
      rep.data["subspace"] = io::to_json(*sub);
    } else {
      members = flat_from_option(arr, o.flat).members.elements();
    }
    local = arr.subarrangement(members);
    auto chi = characteristic_polynomial(build_lattice(local));
    rep.data["localization"] = {{"members", members}, {"size", local.size()}, {"charpoly", chi}};
    rep.lines.push_back("localization A_X of " + name + ": " + std::to_string(local.size()) + " hyperplanes " +
                        join_ints(members) + ", chi(t) = " + poly_str(chi));
    auto lf = find_inductive_factorization(local, SearchOptions{mode, o.budget});
    if (!lf) {
      rep.data["localization"]["factorization"] = nullptr;
      rep.data["inductively_factored"] = false;
      rep.data["conclusion"] = name + " is not inductively factored (by localization closure)";
      rep.lines.push_back("A_X has no inductive factorization (" + std::string(mode_name(mode)) + " search)");
      rep.lines.push_back(name + " is not inductively factored (by localization closure)");
      rep.code = kFails;
      return rep;
    }
    rep.data["localization"]["factorization"] = {{"partition", io::to_json(lf->partition)},
                                                 {"certificate", io::to_json(lf->certificate)}};
    rep.lines.push_back("A_X is inductively factored by " + partition_str(lf->partition) +
                        "; localization gives no obstruction");
  }

  auto f = find_inductive_factorization(arr, SearchOptions{mode, o.budget});
  rep.data["inductively_factored"] = f.has_value();
  if (!f) {
    rep.data["conclusion"] = name + " is not inductively factored";
    rep.lines.push_back("none found: " + name + " is not inductively factored (" + mode_name(mode) + " search)");
    rep.code = kFails;
    return rep;
  }
  auto exps = exponents_from_factorization(f->partition, arr.dim());
  rep.data["partition"] = io::to_json(f->partition);
  rep.data["certificate"] = io::to_json(f->certificate);
  rep.data["exponents"] = exps;
  rep.lines.push_back(name + " is inductively factored");
  rep.lines.push_back("partition: " + partition_str(f->partition));
  rep.lines.push_back("exponents: " + join_ints(exps));
  rep.lines.push_back("certificate: " + io::to_json(f->certificate).dump());
  return rep;
}

template <ExactField F>
Report cmd_check_indfree(const Arrangement<F>& arr, const std::string& name, const Options& o) {
  Report rep;
  auto exps = is_inductively_free(arr, o.budget);
  rep.data = {{"input", io::to_json(arr, name)}, {"inductively_free", exps.has_value()}};
  if (exps) {
    rep.data["exponents"] = exps->values;
    rep.lines.push_back(name + " is inductively free with exponents " + join_ints(exps->values));
  } else {
    rep.lines.push_back(name + " is not inductively free (search exhausted)");
    rep.code = kFails;
  }
  return rep;
}

template <ExactField F>
Report cmd_verify_cert(const Arrangement<F>& arr, const std::string& name, const Certificate& cert,
                       const std::optional<Partition>& given) {
  Report rep;
  const Partition& pi = given ? *given : cert.partition;
  auto v = verify_certificate(arr, pi, cert);
  rep.data = {{"input", io::to_json(arr, name)}, {"partition", io::to_json(pi)}, {"certificate", io::to_json(cert)},
              {"verified", v.ok}};
  if (v.ok) {
    rep.lines.push_back("certificate verified for " + name);
  } else {
    rep.data["failing_step"] = v.failing_step;
    rep.data["reason"] = v.reason;
    rep.lines.push_back("certificate rejected" +
                        (v.failing_step >= 0 ? " at step " + std::to_string(v.failing_step) : std::string()) + ": " +
                        v.reason);
    rep.code = kFails;
  }
  return rep;
}

template <ExactField F>
Report cmd_localize_cert(const Arrangement<F>& arr, const std::string& name, const Certificate& cert, const Options& o) {
  Report rep;
  if (o.flat.empty() && o.localize.empty()) throw UsageError("--flat is required");
  Flat x = flat_from_option(arr, o.flat);
  rep.data = {{"input", io::to_json(arr, name)}, {"certificate", io::to_json(cert)}, {"flat", flat_json<F>(x)}};
  Certificate local;
  try {
    local = localize_certificate(arr, cert.partition, cert, x);
  } catch (const InvalidCertificate& e) {
    rep.data["error"] = e.what();
    rep.lines.push_back(e.what());
    rep.code = kFails;
    return rep;
  }
  auto ax = localization(arr, x);
  auto v = verify_certificate(ax, local.partition, local);
  rep.data["localization"] = io::to_json(ax);
  rep.data["localized_certificate"] = io::to_json(local);
  rep.data["verified"] = v.ok;
  rep.lines.push_back("flat " + join_ints(x.members.elements()) + " (rank " + std::to_string(x.rank) + "), |A_X| = " +
                      std::to_string(ax.size()));
  rep.lines.push_back("localized certificate: " + io::to_json(local).dump());
  rep.lines.push_back(v.ok ? "localized certificate verified" : "localized certificate rejected: " + v.reason);
  rep.code = v.ok ? kHolds : kFails;
  return rep;
}

template <ExactField F>
Report cmd_check_hereditary(const Arrangement<F>& arr, const std::string& name, const Options& o) {
  Report rep;
  auto res = is_hereditarily_inductively_factored(arr, SearchOptions{mode_of(o), o.budget});
  rep.data = {{"input", io::to_json(arr, name)}, {"hereditary", res.hereditary}};
  if (res.hereditary) {
    rep.lines.push_back(name + " is hereditarily inductively factored");
  } else {
    rep.data["failing_flat"] = *res.failing_flat;
    rep.lines.push_back(name + " is not hereditarily inductively factored: restriction to flat " +
                        join_ints(*res.failing_flat) + " has no inductive factorization");
    rep.code = kFails;
  }
  return rep;
}

/// For every flat X: (A_X, pi_X) is inductively factored, and the localized
/// certificate replays. Results are listed in lattice order.
template <ExactField F>
Report cmd_verify_theorem(const Arrangement<F>& arr, const std::string& name, const std::optional<Certificate>& given,
                          const Options& o) {
  Report rep;
  rep.data = {{"input", io::to_json(arr, name)}};
  Certificate cert;
  if (given) {
    auto v = verify_certificate(arr, given->partition, *given);
    if (!v.ok) {
      rep.data["error"] = "invalid input certificate: " + v.reason;
      rep.lines.push_back("invalid input certificate: " + v.reason);
      rep.code = kFails;
      return rep;
    }
    cert = *given;
  } else {
    auto f = find_inductive_factorization(arr, SearchOptions{mode_of(o), o.budget});
    if (!f) {
      rep.data["error"] = "no inductive factorization found";
      rep.lines.push_back("none found: " + name + " has no inductive factorization to localize");
      rep.code = kFails;
      return rep;
    }
    cert = f->certificate;
  }
  const Partition& pi = cert.partition;
  rep.data["certificate"] = io::to_json(cert);

  auto lat = build_lattice(arr);
  struct Row {
    bool factored = false, verified = false;
    std::size_t size = 0;
    std::string error;
  };
  std::vector<Row> rows(lat.size());
  VerifyCache cache;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> budget_hit{false};
  auto work = [&] {
    for (std::size_t f; (f = next++) < lat.size();) {
      Row& row = rows[f];
      try {
        const Flat& x = lat.flat(static_cast<int>(f));
        auto members = x.members.elements();
        auto ax = localization(arr, x);
        auto pix = induced_local_partition(pi, members, arr.size());
        row.size = ax.size();
        row.factored = ax.is_empty() || is_inductively_factored(ax, pix, o.budget).has_value();
        auto local = localize_certificate(arr, pi, cert, x, InputCheck::Trusted, &cache);
        row.verified = verify_certificate(ax, pix, local, &cache).ok;
      } catch (const BudgetExceeded&) {
        budget_hit = true;
        row.error = "budget exceeded";
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const unsigned threads = std::max(1U, o.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::size_t failures = 0;
  json flats = json::array();
  for (std::size_t f = 0; f < rows.size(); ++f) {
    const auto& row = rows[f];
    const bool pass = row.factored && row.verified && row.error.empty();
    failures += pass ? 0 : 1;
    const auto members = lat.members(static_cast<int>(f)).elements();
    json entry{{"members", members},     {"rank", lat.rank(static_cast<int>(f))}, {"size", row.size},
               {"factored", row.factored}, {"certificate_verified", row.verified}, {"pass", pass}};
    if (!row.error.empty()) entry["error"] = row.error;
    flats.push_back(entry);
    rep.lines.push_back(std::string(pass ? "pass" : "FAIL") + " flat " + join_ints(members) + " rank " +
                        std::to_string(lat.rank(static_cast<int>(f))) + " |A_X|=" + std::to_string(row.size) +
                        (row.error.empty() ? "" : " (" + row.error + ")"));
  }
  if (budget_hit) throw BudgetExceeded(o.budget);
  rep.data["flats"] = flats;
  rep.data["failures"] = failures;
  rep.lines.push_back(std::to_string(lat.size() - failures) + "/" + std::to_string(lat.size()) +
                      " flats pass for " + name);
  rep.code = failures == 0 ? kHolds : kFails;
  return rep;
}

inline std::uint64_t env_uint(const char* var, std::uint64_t fallback) {
  const char* v = std::getenv(var);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  auto x = std::strtoull(v, &end, 10);
  if (*end) throw UsageError(std::string(var) + ": expected a nonnegative integer");
  return x;
}

inline void emit(const Report& rep, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json data = rep.data;
    data["exit_code"] = rep.code;
    out << data.dump(2) << "\n";
  } else {
    for (const auto& line : rep.lines) out << line << "\n";
  }
}

}  // namespace detail

/// Runs one command line (args exclude the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"Inductive factorizations of central hyperplane arrangements", "hyperfac"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
  auto* budget_opt = app.add_option("--budget", o.budget, "search node budget (0 = unlimited)");
  auto* threads_opt = app.add_option("--threads", o.threads, "worker threads for verify-theorem");

  auto* build = app.add_subcommand("build", "emit a catalog arrangement as JSON");
  build->add_option("kind", o.kind, "boolean | braid | intermediate")->required()->check(
      CLI::IsMember({"boolean", "braid", "intermediate"}));
  build->add_option("--l", o.l, "dimension")->required();
  build->add_option("--r", o.r, "root of unity order (intermediate)");
  build->add_option("--k", o.k, "number of coordinate hyperplanes (intermediate)");

  auto* flat = app.add_subcommand("flat", "emit a catalog subspace as JSON");
  flat->add_option("kind", o.kind, "example")->required()->check(CLI::IsMember({"example"}));
  flat->add_option("--l", o.l)->required();
  flat->add_option("--r", o.r)->required();
  flat->add_option("--k", o.k)->required();

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "arrangement JSON ('-' for stdin)")->required(); };
  auto* lattice = app.add_subcommand("lattice", "flats by rank and the characteristic polynomial");
  add_input(lattice);
  auto* check_nice = app.add_subcommand("check-nice", "is a partition nice");
  add_input(check_nice);
  check_nice->add_option("--partition", o.partition)->required();
  auto* check_indfac = app.add_subcommand("check-indfac", "is a partition an inductive factorization");
  add_input(check_indfac);
  check_indfac->add_option("--partition", o.partition)->required();
  auto* find_indfac = app.add_subcommand("find-indfac", "search for an inductive factorization");
  add_input(find_indfac);
  find_indfac->add_flag("--exhaustive", o.exhaustive, "try every set partition");
  find_indfac->add_option("--localize", o.localize, "subspace JSON; search the localization first");
  find_indfac->add_option("--flat", o.flat, "comma-separated hyperplanes; search the localization at their closure first");
  auto* check_indfree = app.add_subcommand("check-indfree", "inductive freeness and exponents");
  add_input(check_indfree);
  auto* verify_cert = app.add_subcommand("verify-cert", "replay a certificate");
  add_input(verify_cert);
  verify_cert->add_option("--cert", o.cert)->required();
  verify_cert->add_option("--partition", o.partition, "defaults to the certificate's partition");
  auto* localize_cert = app.add_subcommand("localize-cert", "localize a certificate at a flat");
  add_input(localize_cert);
  localize_cert->add_option("--cert", o.cert)->required();
  localize_cert->add_option("--flat", o.flat, "comma-separated hyperplanes; their closure is used")->required();
  auto* hereditary = app.add_subcommand("check-hereditary", "every restriction is inductively factored");
  add_input(hereditary);
  hereditary->add_flag("--exhaustive", o.exhaustive);
  auto* theorem = app.add_subcommand("verify-theorem", "localize a factorization at every flat and replay");
  add_input(theorem);
  theorem->add_option("--cert", o.cert, "use this certificate instead of searching");
  theorem->add_flag("--exhaustive", o.exhaustive);

  std::vector<std::string> argv_store{"hyperfac"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (budget_opt->count() == 0) o.budget = env_uint("HYPERFAC_BUDGET", 0);
    if (threads_opt->count() == 0) o.threads = static_cast<unsigned>(env_uint("HYPERFAC_THREADS", 1));

    if (build->parsed()) {
      if (o.kind == "boolean") out << io::to_json(boolean_arrangement(o.l), "boolean_" + std::to_string(o.l)).dump(2) << "\n";
      else if (o.kind == "braid") out << io::to_json(braid_arrangement(o.l), "braid_" + std::to_string(o.l)).dump(2) << "\n";
      else out << io::to_json(intermediate_arrangement(o.l, o.r, o.k), intermediate_name(o.l, o.r, o.k)).dump(2) << "\n";
      return kHolds;
    }
    if (flat->parsed()) {
      out << io::to_json(example_flat(o.l, o.r, o.k)).dump(2) << "\n";
      return kHolds;
    }

    auto loaded = load_arrangement(o.input);
    const std::string& name = loaded.name;
    std::optional<Certificate> cert;
    if (!o.cert.empty()) cert = load_with_context<Certificate>(o.cert, io::certificate_from_json);
    std::optional<AnySubspace> u;
    if (!o.localize.empty()) u = load_with_context<AnySubspace>(o.localize, io::subspace_from_json);

    Report rep = std::visit(
        [&](const auto& arr) -> Report {
          const std::size_t n = arr.size();
          if (lattice->parsed()) return cmd_lattice(arr, name);
          if (check_nice->parsed()) return cmd_check_nice(arr, name, load_partition(o.partition, n));
          if (check_indfac->parsed()) return cmd_check_indfac(arr, name, load_partition(o.partition, n), o);
          if (find_indfac->parsed()) return cmd_find_indfac(arr, name, u, o);
          if (check_indfree->parsed()) return cmd_check_indfree(arr, name, o);
          if (verify_cert->parsed()) {
            std::optional<Partition> pi;
            if (!o.partition.empty()) pi = load_partition(o.partition, n);
            return cmd_verify_cert(arr, name, *cert, pi);
          }
          if (localize_cert->parsed()) return cmd_localize_cert(arr, name, *cert, o);
          if (hereditary->parsed()) return cmd_check_hereditary(arr, name, o);
          return cmd_verify_theorem(arr, name, cert, o);
        },
        loaded.arrangement);
    (void)theorem;
    emit(rep, o, out);
    return rep.code;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hyperfac::cli
