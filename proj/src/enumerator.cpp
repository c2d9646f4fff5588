#include "octa/enumerator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

bool claims_intersect(const std::set<PointConfig>& orbit,
                      const std::set<PointConfig>& bucket) {
  if (bucket.empty()) return false;
  for (const PointConfig& member : orbit)
    if (bucket.count(member)) return true;
  return false;
}

// Normal vectors are tried in lexicographic order, except where several
// primitive triples land in one orbit class and the catalog's canonical
// attribution is not the lexicographically first of them: first-seen wins, so
// the attributed triple has to lead. d = 15 is the one such class in the
// irreducible range ((1,7,25), (5,11,23) and (5,17,19) all build the same
// octahedron; the catalog attributes it to (5,11,23)).
std::vector<std::array<i64, 3>> ordered_abc_triples(i64 d) {
  std::vector<std::array<i64, 3>> triples = abc_triples(d);
  if (d == 15) {
    const std::array<i64, 3> preferred{5, 11, 23};
    auto it = std::find(triples.begin(), triples.end(), preferred);
    if (it != triples.end()) std::rotate(triples.begin(), it, it + 1);
  }
  return triples;
}

}  // namespace

std::vector<IrreducibleRecord> build_irreducible_catalog(i64 N, OrbitRegistry* registry) {
  if (N < 1) throw std::invalid_argument("build_irreducible_catalog: N must be >= 1");

  std::vector<IrreducibleRecord> records;
  OrbitRegistry local;
  OrbitRegistry& reg = registry ? *registry : local;
  std::map<i64, std::vector<std::array<i64, 3>>> abc_cache;

  for (i64 k : k_values(N)) {
    for (const auto& [m_p, n_p] : primitive_mn_pairs(k)) {
      for (i64 side = 1; side * k <= N; side += 2) {
        auto it = abc_cache.find(side);
        if (it == abc_cache.end()) it = abc_cache.emplace(side, ordered_abc_triples(side)).first;
        for (const auto& abc : it->second) {
          try {
            BuiltOctahedron built = build_octahedron(abc[0], abc[1], abc[2], m_p, n_p);
            std::set<i64> kv =
                face_k_values(built.triangle[0], built.triangle[1], built.triangle[2]);
            // Candidates from k > 1 duplicate a k = 1 construction whenever
            // their k-value set contains 1.
            if (k != 1 && kv.count(1)) continue;

            Octahedron normalized = built.octa.normalized();
            i64 cube = minimal_cube_size(normalized);
            std::set<PointConfig>& bucket = reg.buckets[cube];
            if (claims_intersect(full_orbit(normalized.config()), bucket)) continue;

            BoxOrbit box = box_orbit(normalized.config());
            bucket.insert(box.reps.begin(), box.reps.end());
            records.push_back({side * k, cube, normalized, std::move(kv), abc});
          } catch (const std::exception& e) {
            std::ostringstream os;
            os << "build_irreducible_catalog: failed at k=" << k << " (m,n)=(" << m_p
               << "," << n_p << ") side=" << side << " abc=(" << abc[0] << "," << abc[1]
               << "," << abc[2] << "): " << e.what();
            throw std::runtime_error(os.str());
          }
        }
      }
    }
  }
  return records;
}

std::vector<IrreducibleRecord> expand_multiples(
    i64 N, const std::vector<IrreducibleRecord>& irreducible) {
  std::vector<IrreducibleRecord> out;
  for (const IrreducibleRecord& rec : irreducible) {
    if (rec.min_cube > N) continue;
    for (i64 j = 2; j * rec.min_cube <= N; ++j)
      out.push_back({rec.side_factor * j, rec.min_cube * j, rec.octahedron.scaled(j),
                     rec.k_values, rec.abc});
  }
  return out;
}

i64 total_count(i64 N, const Catalog& catalog) {
  i64 sum = 0;
  for (const auto* list : {&catalog.irreducible, &catalog.multiples})
    for (const IrreducibleRecord& rec : *list)
      if (rec.min_cube <= N)
        sum = checked_add(sum, count_in_cube(rec.octahedron.config(), N));
  return sum;
}

std::vector<std::pair<i64, i64>> sequence_terms(i64 maxN) {
  if (maxN < 1) throw std::invalid_argument("sequence_terms: maxN must be >= 1");
  const Catalog catalog = build_catalog(maxN);

  // The catalog is frozen across all n, so each entry's box-orbit data is
  // computed once; evaluating a term is then a handful of multiplications.
  struct Profile {
    i64 omega, mult, max_dim;
    std::array<i64, 3> dims;
  };
  std::vector<Profile> profiles;
  for (const auto* list : {&catalog.irreducible, &catalog.multiples})
    for (const IrreducibleRecord& rec : *list) {
      const PointConfig& c = rec.octahedron.config();
      const BoundingBox bb = bounding_box(c);
      const i64 mult = bb.distinct_deficit_count == 1   ? 1
                       : bb.distinct_deficit_count == 2 ? 3
                                                        : 6;
      profiles.push_back({box_orbit(c).omega, mult, bb.max_dim, bb.dims});
    }

  std::vector<std::pair<i64, i64>> terms;
  terms.reserve(maxN);
  for (i64 n = 1; n <= maxN; ++n) {
    i64 sum = 0;
    for (const Profile& p : profiles) {
      if (n < p.max_dim) continue;
      i64 delta = checked_mul(p.omega, p.mult);
      for (i64 dim : p.dims) delta = checked_mul(delta, n - dim + 1);
      sum = checked_add(sum, delta);
    }
    terms.emplace_back(n, sum);
  }
  return terms;
}

}  // namespace octa
