#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hallbase/poly.hpp"
#include "hallbase/rep.hpp"
#include "hallbase/words.hpp"

namespace hallbase {

using PolyMap = std::map<KostantPartition, IntPoly>;
using CountMap = std::map<KostantPartition, BigInt>;

/// How per-prime counts are obtained.
///  Census: enumerate submodules of M(λ) and identify them.
///  Extension: enumerate Ext¹(M, N) and convert with Riedtmann's formula
///    F^X_{MN} = |Ext¹(M,N)_X| |Aut X| / (|Aut M| |Aut N| |Hom(M,N)|).
enum class Route { Auto, Census, Extension };

struct HallOptions {
  Route route = Route::Auto;
  /// Bound on ℓ(λ) for general Hall polynomials.
  int max_general_length = 6;
  /// Primes past the fitting points at which every interpolant is checked.
  int held_out_primes = 1;
};

struct HallStats {
  std::size_t interpolations = 0;
  std::size_t held_out_checks = 0;
  std::size_t census_tallies = 0;
  std::size_t extension_tallies = 0;
};

/// Hall polynomials by counting over prime fields and interpolating. Every
/// interpolant of degree bound D is fitted on the first D+1 primes and then
/// compared against the direct count at the next prime(s); a mismatch throws
/// VerificationError. All caches are internally synchronized.
class HallEngine {
 public:
  explicit HallEngine(const RepTheory& rt, HallOptions options = {});
  HallEngine(const HallEngine&) = delete;
  HallEngine& operator=(const HallEngine&) = delete;

  const RepTheory& theory() const { return rt_; }
  const HallOptions& options() const { return opt_; }

  // ---- counts at one prime; keys are the submodule classes ν (rows) or the
  // middle terms λ (columns, extensions)

  /// F^λ_{eS_j, ν}(p) for all ν: codimension-e subspace census.
  CountMap count_layer(const KostantPartition& lambda, int j, int e, std::uint32_t p) const;
  /// Same tally through submodules_with_layer and identify on explicit modules.
  CountMap count_layer_reference(const KostantPartition& lambda, int j, int e, std::uint32_t p) const;
  /// F^λ_{eS_j, ν}(p) for all λ: extension census.
  CountMap count_column(int j, int e, const KostantPartition& nu, std::uint32_t p) const;
  /// F^λ_{μν}(p) for all λ: extension census.
  CountMap count_extensions(const KostantPartition& mu, const KostantPartition& nu, std::uint32_t p) const;
  /// F^λ_{μν}(p) by depth-first search over subrepresentations of M(λ).
  BigInt count_submodules(const KostantPartition& lambda, const KostantPartition& mu, const KostantPartition& nu,
                          std::uint32_t p) const;

  // ---- degree bounds

  /// min(e(m−e), dim End λ − dim End ν − e² − e<e_j, dim ν>) with m the
  /// multiplicity of S_j in the top of M(λ). Negative means identically zero.
  int layer_degree_bound(const KostantPartition& lambda, int j, int e, const KostantPartition& nu) const;
  /// min(Σ l_i(d_i − l_i), dim End λ − dim End μ − dim End ν − <dim μ, dim ν>).
  int general_degree_bound(const KostantPartition& lambda, const KostantPartition& mu,
                           const KostantPartition& nu) const;

  // ---- polynomials

  /// Row: ν ↦ F^λ_{eS_j, ν}.
  PolyMap layer_poly(const KostantPartition& lambda, int j, int e) const;
  /// Column: λ ↦ F^λ_{eS_j, ν}.
  PolyMap layer_column(int j, int e, const KostantPartition& nu) const;
  Route route_for_row(const KostantPartition& lambda, int j, int e) const;

  /// γ_w^λ for every λ, folding the tight form from the right.
  PolyMap gamma_word(const Word& w) const;
  /// γ_w^λ for one λ, by recursion on the top layer.
  IntPoly gamma_at(const Word& w, const KostantPartition& lambda) const;
  /// φ_w^λ = γ_w^λ Π [[e_r]]!
  PolyMap phi_word(const Word& w) const;
  /// φ_w^λ folded one letter at a time (an independent route to phi_word).
  PolyMap phi_letters(const Word& w) const;

  IntPoly general_hall(const KostantPartition& lambda, const KostantPartition& mu, const KostantPartition& nu) const;
  PolyMap general_hall_all(const KostantPartition& mu, const KostantPartition& nu) const;
  /// {λ : φ^λ_{μν} ≠ 0}, decided exactly without full interpolation.
  std::vector<KostantPartition> extension_support(const KostantPartition& mu, const KostantPartition& nu) const;

  HallStats stats() const;

  // ---- persistence of layer rows and columns
  nlohmann::json export_cache() const;
  /// Adds entries; existing entries must agree or VerificationError is thrown.
  void import_cache(const nlohmann::json& data);

 private:
  using RowKey = std::tuple<KostantPartition, int, int>;
  using ColKey = std::tuple<int, int, KostantPartition>;
  using PairKey = std::pair<KostantPartition, KostantPartition>;

  const std::vector<KostantPartition>& row_candidates(const KostantPartition& lambda, int j, int e) const;
  const std::vector<KostantPartition>& column_candidates(int j, int e, const KostantPartition& nu) const;
  std::vector<KostantPartition> extension_candidates(const KostantPartition& mu, const KostantPartition& nu) const;

  const CountMap& census_tally(const KostantPartition& lambda, int j, int e, std::size_t prime_index) const;
  const CountMap& column_tally(int j, int e, const KostantPartition& nu, std::size_t prime_index) const;
  const CountMap& extension_tally(const KostantPartition& mu, const KostantPartition& nu,
                                  std::size_t prime_index) const;

  IntPoly fit(int degree_bound, const std::function<BigInt(std::size_t)>& value) const;
  IntPoly column_entry(int j, int e, const KostantPartition& nu, const KostantPartition& lambda) const;
  void check_layer_args(const KostantPartition& lambda, int j, int e) const;

  const RepTheory& rt_;
  HallOptions opt_;

  mutable std::mutex mutex_;
  mutable HallStats stats_;
  mutable std::map<RowKey, PolyMap> rows_;
  mutable std::map<ColKey, PolyMap> columns_;
  mutable std::map<std::tuple<int, int, KostantPartition, KostantPartition>, IntPoly> column_entries_;
  mutable std::map<PairKey, PolyMap> general_;
  mutable std::map<RowKey, std::vector<KostantPartition>> row_candidates_;
  mutable std::map<ColKey, std::vector<KostantPartition>> column_candidates_;
  mutable std::map<std::pair<RowKey, std::size_t>, CountMap> census_tallies_;
  mutable std::map<std::pair<ColKey, std::size_t>, CountMap> column_tallies_;
  mutable std::map<std::pair<PairKey, std::size_t>, CountMap> extension_tallies_;
};

/// |Aut M(λ)| over the field with p elements.
BigInt automorphism_count(const RepTheory& rt, const KostantPartition& lambda, std::uint32_t p);

}  // namespace hallbase
