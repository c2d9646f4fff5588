#pragma once

#include <map>
#include <utility>
#include <vector>

#include "octa/builder.hpp"
#include "octa/symmetry.hpp"

namespace octa {

// Already-claimed orbit representatives, bucketed by minimal cube size.
// Orbit-equivalent octahedra always share that size, so a candidate only has
// to be checked against its own bucket.
struct OrbitRegistry {
  std::map<i64, std::set<PointConfig>> buckets;
};

struct Catalog {
  std::vector<IrreducibleRecord> irreducible;
  std::vector<IrreducibleRecord> multiples;  // scaled copies, k-values inherited
};

// Builds the deduplicated list of irreducible octahedra with edge factor up
// to N. Iteration order is fixed (ascending k, then (m, n) pairs, then odd
// side factors, then sorted abc triples) so first-seen-wins dedup is
// reproducible. A candidate built with k > 1 is admitted only when its
// k-value set avoids 1; such octahedra are unreachable from the k = 1 pass.
std::vector<IrreducibleRecord> build_irreducible_catalog(i64 N,
                                                         OrbitRegistry* registry = nullptr);

// Dilations j*entry, j = 2..floor(N / min_cube), for every irreducible entry.
std::vector<IrreducibleRecord> expand_multiples(i64 N,
                                                const std::vector<IrreducibleRecord>& irreducible);

inline Catalog build_catalog(i64 N) {
  Catalog cat;
  cat.irreducible = build_irreducible_catalog(N);
  cat.multiples = expand_multiples(N, cat.irreducible);
  return cat;
}

// Number of regular octahedra in {0..N}^3: sum of per-entry placement counts
// over every catalog entry whose minimal cube fits.
i64 total_count(i64 N, const Catalog& catalog);

// (n, count) for n = 1..maxN over a catalog built once at horizon maxN.
std::vector<std::pair<i64, i64>> sequence_terms(i64 maxN);

}  // namespace octa
