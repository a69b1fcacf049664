// Finds an inductive factorization of the braid arrangement in Q^4 and
// localizes its certificate at every rank-2 flat.
#include "hyperfac.hpp"

#include <iostream>

using namespace hyperfac;

int main() {
  auto arr = braid_arrangement(4);
  auto f = find_inductive_factorization(arr);
  if (!f) return 1;
  std::cout << "partition " << io::to_json(f->partition).dump() << "\n";

  auto lat = build_lattice(arr);
  auto [lo, hi] = lat.rank_range(2);
  for (int x = lo; x < hi; ++x) {
    const Flat& flat = lat.flat(x);
    auto local = localize_certificate(arr, f->partition, f->certificate, flat);
    auto ok = verify_certificate(localization(arr, flat), local.partition, local).ok;
    std::cout << json(flat.members.elements()).dump() << " -> " << io::to_json(local).dump()
              << (ok ? "  ok" : "  FAILED") << "\n";
  }
}
