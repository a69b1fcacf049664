// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.

#include "hyperfac/cli.hpp"
#include "support.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hftest;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every nice pair seen anywhere in the run is checked against the product formula.
struct NiceLedger {
  long checked = 0, failed = 0;
  std::string first_failure;
  template <ExactField F>
  void record(const Arrangement<F>& arr, const Partition& pi) {
    ++checked;
    if (characteristic_polynomial(build_lattice(arr)) == product_poly(arr.dim(), pi)) return;
    if (failed++ == 0) first_failure = io::to_json(arr).dump() + " " + io::to_json(pi).dump();
  }
} nice_ledger;

std::string ints(const std::vector<int>& v) { return json(v).dump(); }

struct Case {
  std::string name;
  std::variant<QArr, Arrangement<CyclotomicField>> arr;
};

std::vector<Case> supersolvable_cases() {
  std::vector<Case> out;
  for (std::size_t l = 2; l <= 5; ++l) out.push_back({"braid_" + std::to_string(l), braid_arrangement(l)});
  for (std::size_t l = 1; l <= 3; ++l) out.push_back({"boolean_" + std::to_string(l), boolean_arrangement(l)});
  for (std::size_t l = 2; l <= 4; ++l)
    for (int r = 2; r <= 3; ++r)
      for (std::size_t k : {l - 1, l}) out.push_back({intermediate_name(l, r, k), intermediate_arrangement(l, r, k)});
  return out;
}

// ---- 1 ---------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  int n = 0;
  for (const auto& c : supersolvable_cases()) {
    std::visit(
        [&](const auto& arr) {
          ++n;
          if (!is_supersolvable(arr).supersolvable) return o.fail(c.name + " not supersolvable");
          auto f = find_inductive_factorization(arr);
          if (!f) return o.fail(c.name + ": no inductive factorization");
          if (!verify_certificate(arr, f->partition, f->certificate).ok) return o.fail(c.name + ": certificate rejected");
          nice_ledger.record(arr, f->partition);
          const int r = build_lattice(arr).max_rank();
          std::vector<int> want(arr.dim() - static_cast<std::size_t>(r), 0);
          for (auto s : f->partition.block_sizes()) want.push_back(static_cast<int>(s));
          std::sort(want.begin(), want.end());
          auto exps = exponents_from_factorization(f->partition, arr.dim());
          int sum = 0;
          for (int e : exps) sum += e;
          if (exps != want || f->partition.size() != static_cast<std::size_t>(r)) return o.fail(c.name + ": exponents " + ints(exps));
          if (sum != static_cast<int>(arr.size())) return o.fail(c.name + ": exponents sum to " + std::to_string(sum));
          auto free = is_inductively_free(arr);
          if (!free || free->values != exps) return o.fail(c.name + ": freeness exponents disagree");
        },
        c.arr);
  }
  if (o.pass) o.detail = std::to_string(n) + " arrangements supersolvable and inductively factored";
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  long flats = 0;
  for (const auto& c : supersolvable_cases()) {
    std::visit(
        [&](const auto& arr) {
          auto f = find_inductive_factorization(arr);
          if (!f) return o.fail(c.name + ": no factorization to localize");
          auto lat = build_lattice(arr);
          VerifyCache cache;
          for (const auto& x : lat.flats()) {
            ++flats;
            auto members = x.members.elements();
            auto ax = localization(arr, x);
            auto pix = induced_local_partition(f->partition, members, arr.size());
            if (!is_inductively_factored(ax, pix)) o.fail(c.name + ": pi_X rejected at " + ints(members));
            auto lc = localize_certificate(arr, f->partition, f->certificate, x, InputCheck::Verify, &cache);
            if (!verify_certificate(ax, pix, lc, &cache).ok) o.fail(c.name + ": localized certificate rejected at " + ints(members));
            nice_ledger.record(ax, pix);
          }
        },
        c.arr);
  }
  if (o.pass) o.detail = std::to_string(flats) + " flats, zero failures";
  return o;
}

// ---- 3 ---------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  auto g = intermediate_arrangement(3, 3, 0);
  auto pruned = find_inductive_factorization(g, {SearchMode::Pruned, 0});
  auto exhaustive = find_inductive_factorization(g, {SearchMode::Exhaustive, 0});
  auto free = is_inductively_free(g);
  std::ostringstream d;
  d << "pruned: " << (pruned ? "found" : "none") << ", exhaustive: " << (exhaustive ? "found" : "none")
    << ", inductive freeness: " << (free ? ints(free->values) : std::string("none (search exhausted)"))
    << ", expected {1,4,4}";
  if (pruned || exhaustive) o.fail("");
  if (!free || free->values != std::vector<int>{1, 4, 4}) o.fail("");
  o.detail = d.str();
  return o;
}

// ---- 4 ---------------------------------------------------------------------

// chi divided by the power of t coming from the non-essential directions.
std::vector<std::int64_t> essential(std::vector<std::int64_t> c) {
  while (!c.empty() && c.front() == 0) c.erase(c.begin());
  return c;
}

Outcome criterion4() {
  Outcome o;
  auto a = intermediate_arrangement(4, 3, 1);
  auto x = example_flat(4, 3, 1);
  auto ax = localization_at_subspace(a, x);
  auto chi_x = characteristic_polynomial(build_lattice(ax));
  auto chi_g = characteristic_polynomial(build_lattice(intermediate_arrangement(3, 3, 0)));
  if (a.size() != 19) o.fail("A^1_4(3) has " + std::to_string(a.size()) + " hyperplanes");
  if (ax.size() != 9) o.fail("localization has " + std::to_string(ax.size()) + " hyperplanes");
  if (essential(chi_x) != essential(chi_g)) o.fail("characteristic polynomials differ");
  if (find_inductive_factorization(ax, {SearchMode::Exhaustive, 0})) o.fail("localization is inductively factored");

  auto dir = std::filesystem::temp_directory_path() / "hyperfac_acceptance";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    auto p = (dir / name).string();
    std::ofstream(p) << out.str();
    return p;
  };
  auto ap = write("a141.json", {"build", "intermediate", "--l", "4", "--r", "3", "--k", "1"});
  auto xp = write("x141.json", {"flat", "example", "--l", "4", "--r", "3", "--k", "1"});
  std::ostringstream out, err;
  const int code = cli::run({"find-indfac", "--input", ap, "--localize", xp, "--exhaustive"}, out, err);
  const std::string want = "A^1_4(3) is not inductively factored (by localization closure)";
  if (out.str().find(want) == std::string::npos) o.fail("CLI report lacks the conclusion: " + out.str() + err.str());
  if (code != 1) o.fail("CLI exit code " + std::to_string(code));
  if (o.pass) o.detail = "|A_X| = 9, chi matches A^0_3(3), exhaustive search: none; CLI: \"" + want + "\"";
  return o;
}

// ---- 5 ---------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  long arrangements = 0, instances = 0;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    // hyperplanes with coefficients in {-1, 0, 1}, one per normalized functional
    std::vector<Functional<RationalField>> pool;
    std::vector<long> digits(dim, -1);
    for (;;) {
      std::vector<Rational> v;
      for (long d : digits) v.emplace_back(d);
      if (!std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); })) {
        auto f = Functional<RationalField>::normalize(v);
        if (std::find(pool.begin(), pool.end(), f) == pool.end()) pool.push_back(f);
      }
      std::size_t i = 0;
      while (i < dim && ++digits[i] > 1) digits[i++] = -1;
      if (i == dim) break;
    }
    const std::size_t m = pool.size();
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      if (std::popcount(mask) > 5) continue;
      std::vector<Functional<RationalField>> forms;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1U) forms.push_back(pool[i]);
      QArr arr({}, dim, forms);
      ++arrangements;
      if (arr.is_empty()) continue;
      all_partitions(arr.size(), [&](const Partition& pi) {
        for (std::size_t h = 0; h < arr.size(); ++h) {
          ++instances;
          auto rep = check_addition_deletion(arr, pi, static_cast<int>(h));
          if (rep.nice_full) nice_ledger.record(arr, pi);
          if (!rep.consistent())
            o.fail(io::to_json(arr).dump() + " " + io::to_json(pi).dump() + " pivot " + std::to_string(h));
        }
      });
    }
  }
  if (o.pass) o.detail = std::to_string(arrangements) + " arrangements, " + std::to_string(instances) + " (partition, pivot) instances";
  return o;
}

// ---- 6 ---------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  long flats = 0;
  for (const auto& c : supersolvable_cases()) {
    std::visit(
        [&](const auto& arr) {
          auto lat = build_lattice(arr);
          SearchEngine engine(lat);
          for (int x = 0; x < static_cast<int>(lat.size()); ++x) {
            ++flats;
            if (!check_indfree_localization(engine, x)) o.fail(c.name + ": A_X not inductively free at " + ints(lat.members(x).elements()));
          }
        },
        c.arr);
  }
  if (o.pass) o.detail = std::to_string(flats) + " localizations inductively free";
  return o;
}

// ---- 7 ---------------------------------------------------------------------

template <ExactField F>
void commutation(const Arrangement<F>& arr, const std::string& name, Outcome& o, long& pairs) {
  auto lat = build_lattice(arr);
  for (int x = 0; x < static_cast<int>(lat.size()); ++x) {
    auto ax = localization(arr, lat.flat(x));
    auto xspace = flat_subspace(arr, lat.members(x));
    for (int y = 0; y < static_cast<int>(lat.size()); ++y) {
      if (!lat.leq(y, x)) continue;
      ++pairs;
      auto yspace = flat_subspace(arr, lat.members(y));
      auto lhs = restriction_to(ax, yspace).arrangement;
      auto ay = restriction_to(arr, yspace).arrangement;
      // X inside Y, in the coordinates of Y's canonical basis
      std::vector<std::vector<typename F::Element>> coords;
      for (const auto& v : xspace.basis()) coords.push_back(yspace.coordinates(v));
      Subspace<F> x_in_y(arr.field(), yspace.dim(), coords);
      auto rhs = localization_at_subspace(ay, x_in_y);
      if (lhs.dim() != rhs.dim() || lhs.canonical_set() != rhs.canonical_set())
        o.fail(name + ": X = " + ints(lat.members(x).elements()) + ", Y = " + ints(lat.members(y).elements()));
    }
  }
}

Outcome criterion7() {
  Outcome o;
  long pairs = 0;
  commutation(braid_arrangement(4), "braid_4", o, pairs);
  commutation(intermediate_arrangement(3, 3, 0), "A^0_3(3)", o, pairs);
  if (o.pass) o.detail = std::to_string(pairs) + " comparable pairs, all equal";
  return o;
}

// ---- 8 ---------------------------------------------------------------------

Outcome criterion8() {
  Outcome o;
  if (nice_ledger.failed) o.fail(std::to_string(nice_ledger.failed) + " failures, first " + nice_ledger.first_failure);
  if (nice_ledger.checked == 0) o.fail("no nice partitions were recorded");
  if (o.pass) o.detail = std::to_string(nice_ledger.checked) + " nice pairs factor chi";
  return o;
}

// ---- 9 ---------------------------------------------------------------------

template <class F, class Gen>
bool axioms_hold(const F& field, Gen gen) {
  auto a = gen(), b = gen(), c = gen();
  bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
            a + b == b + a && a * b == b * a && a + field.zero() == a && a * field.one() == a && (a - a).is_zero();
  if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one() && (b / a) * a == b;
  return ok && ((a * c + b) - b).str() == (a * c).str();
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  const int cases = 1000;
  // field axioms
  for (int i = 0; i < cases; ++i) {
    if (!axioms_hold(RationalField{}, [&] { return rand_rational(rng, 30); })) o.fail("rational field axiom");
    CyclotomicField k(3 + static_cast<int>(rng() % 10));
    if (!axioms_hold(k, [&] { return rand_cyclotomic(rng, k); })) o.fail("cyclotomic field axiom");
  }
  // closure laws and rank-nullity
  for (int i = 0; i < cases; ++i) {
    auto arr = random_arrangement(rng, 1 + rng() % 4, 7);
    const auto& hs = arr.hyperplanes();
    std::vector<Functional<RationalField>> forms(hs.begin(), hs.end());
    if (rank_of<RationalField>(arr.field(), arr.dim(), forms) + intersect_kernels<RationalField>(arr.field(), arr.dim(), forms).dim() != arr.dim())
      o.fail("rank-nullity");
    const std::size_t n = arr.size();
    auto s = subset_of(static_cast<unsigned>(rng() % (1U << n)), n);
    auto t = s;
    if (n) t.push_back(static_cast<int>(rng() % n));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    auto cs = closure(arr, IndexSet::of(n, s)), ct = closure(arr, IndexSet::of(n, t));
    if (!IndexSet::of(n, s).is_subset_of(cs.members) || !cs.members.is_subset_of(ct.members) ||
        !(closure(arr, cs.members).members == cs.members) || cs.members.elements() != brute_closure(arr, s))
      o.fail("closure law");
  }
  // certificate round-trip and determinism
  auto dir = std::filesystem::temp_directory_path() / "hyperfac_acceptance";
  std::filesystem::create_directories(dir);
  for (int done = 0; done < cases;) {
    auto arr = random_arrangement(rng, 2 + rng() % 3, 6);
    auto f = find_inductive_factorization(arr);
    if (!f) continue;
    ++done;
    if (!verify_certificate(arr, f->partition, f->certificate).ok) o.fail("certificate round-trip");
    if (!(io::certificate_from_json(json::parse(io::to_json(f->certificate).dump())) == f->certificate)) o.fail("certificate JSON");
    auto again = find_inductive_factorization(arr);
    if (!again || !(again->certificate == f->certificate)) o.fail("search determinism");
    auto p = (dir / "rand.json").string();
    std::ofstream(p) << io::to_json(arr).dump();
    std::ostringstream r1, r2, e;
    cli::run({"find-indfac", "--input", p, "--format", "json"}, r1, e);
    cli::run({"find-indfac", "--input", p, "--format", "json"}, r2, e);
    if (r1.str() != r2.str()) o.fail("CLI determinism");
    auto rep = json::parse(r1.str());
    auto loaded = std::get<QArr>(io::arrangement_from_json(rep["input"]).arrangement);
    auto cert = io::certificate_from_json(rep["certificate"]);
    if (!verify_certificate(loaded, cert.partition, cert).ok) o.fail("report re-verification");
  }
  if (o.pass) o.detail = "field axioms, closure laws, rank-nullity, certificate round-trip, determinism: 1000 cases each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "supersolvable implies inductively factored", 60, criterion1},
      {2, "inductive factorizations localize", 300, criterion2},
      {3, "A^0_3(3) negative instance", 600, criterion3},
      {4, "A^1_4(3) by localization", 900, criterion4},
      {5, "addition-deletion consistency", 600, criterion5},
      {6, "inductive freeness localizes", 300, criterion6},
      {7, "localization commutes with restriction", 600, criterion7},
      {8, "nice partitions factor chi", 600, criterion8},
      {9, "invariant suites", 1800, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over budget)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %d: %s  %s  [%.2f s / %.0f s]  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, c.budget_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
