#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadnet/hm/hilbert_mumford.hpp"
#include "quadnet/nets/quadric_nets.hpp"

namespace quadnet {

struct NamedSubgroup {
  std::string name;
  OneParamSubgroup lambda;
};

/// The nine base subgroups followed by their bars; 18 entries.
const std::vector<NamedSubgroup>& lambda_catalog();
const NamedSubgroup& catalog_entry(const std::string& name);

/// Degree-2 monomials in x0..x3, descending grlex.
const std::vector<Monomial>& quadric_monomials();
std::string monomial_name(const Monomial& m);
/// Parses "x0^2", "x1*x3" (also "x1x3").
Monomial parse_quadric_monomial(const std::string& text);

/// Support sets A, B, C as sorted indices into quadric_monomials().
using TripleKey = std::array<std::vector<int>, 3>;

struct MaximalTriple {
  OneParamSubgroup lambda;
  Monomial I, J;
  /// A: w < -w(I) - w(J); B: w <= w(I); C: w <= w(J).
  std::array<std::vector<Monomial>, 3> sets;
  /// A nonempty and no factor can take its next weight level.
  bool maximal = false;
  /// Some monomial other than I (resp. J) sits exactly at the B (resp. C) threshold.
  bool threshold_ties = false;

  /// Factors sorted internally and then as a multiset.
  TripleKey key() const;
  bool all_sums_negative() const;
};

MaximalTriple maximal_set(const OneParamSubgroup& lambda, const Monomial& I, const Monomial& J);

std::string key_to_string(const TripleKey& key);
/// a is contained in b after some permutation of b's factors.
bool key_contained(const TripleKey& a, const TripleKey& b);

enum class DeltaShape {
  BinaryQuarticPlusLinearInThird,
  SquareOfLineTimesConic,
  SquareOfBinaryLineTimesConic,
  SquareOfLineTimesSquaredLine,
  LineTimesCuspidalCubic,
  LineTimesSpecialCubic,
  BinaryQuarticPlusMixedTerm,
};

struct SegreExpectation {
  /// Generator indices in the instantiated net (0, 1, 2).
  int first, second;
  std::string symbol;
};

struct AtlasRow {
  int index;
  std::string lambda_name;
  Monomial I, J;
  DeltaShape shape;
  std::string delta_form;
  std::string singularity;
  std::string net_description;
  std::vector<SegreExpectation> segre;

  MaximalTriple triple() const;
};

const std::vector<AtlasRow>& atlas_rows();
const AtlasRow& atlas_row(int index);

struct TripleSource {
  std::string lambda_name;
  Monomial I, J;
};

struct AtlasEntry {
  TripleKey key;
  std::vector<TripleSource> sources;
  bool globally_maximal = false;
  bool threshold_ties = false;
  /// Named row with exactly this triple, 0 if none.
  int named_row = 0;
};

struct AtlasEnumeration {
  /// Distinct per-subgroup maximal triples, sorted by key.
  std::vector<AtlasEntry> entries;
  /// Rows whose triple is globally maximal.
  std::vector<int> rows_maximal;
  /// Rows found only inside a larger triple: (row, index of containing maximal entry).
  std::vector<std::pair<int, std::size_t>> rows_contained;
  /// Rows found nowhere.
  std::vector<int> rows_missing;
  /// Globally maximal entries matching no named row.
  std::vector<std::size_t> unmatched;

  std::size_t maximal_count() const;
  bool exactly_named() const;
};

AtlasEnumeration enumerate_atlas();
AtlasEnumeration enumerate_atlas_serial();

/// Generic net with nonzero coefficients in {+-1..+-20} on B, C, A (that
/// generator order). Resamples up to 3 times; Degenerate if all fail.
QuadricNet instantiate_generic(const MaximalTriple& triple, std::mt19937_64& rng);

bool check_delta_shape(const MultiPoly& delta, DeltaShape shape);

struct RowTrial {
  int trial = 0;
  std::array<MultiPoly, 3> forms;
  MultiPoly delta;
  long hm_value = 0;
  bool destabilized = false;
  bool shape_ok = false;
  bool unstable = false;
  bool segre_ok = false;
  std::vector<std::string> segre_found;
  std::string error;

  bool passed() const { return error.empty() && destabilized && shape_ok && unstable && segre_ok; }
};

struct RowReport {
  int row = 0;
  std::uint64_t seed = 0;
  std::vector<RowTrial> trials;

  int passed() const;
};

RowReport verify_atlas_row(int row, int trials, std::uint64_t seed);
RowReport verify_atlas_row_serial(int row, int trials, std::uint64_t seed);

/// Per-trial generator, a function of (seed, row, trial) only.
std::mt19937_64 trial_rng(std::uint64_t seed, int row, int trial);

}  // namespace quadnet
