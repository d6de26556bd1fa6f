// Binary matroids: GF(2) matrices, cycle-space circuit enumeration, and
// binarity testing by searching for a U(2,4) minor.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/matroid.hpp"
#include "rainbow/subset.hpp"

namespace rainbow {

/// Rank over GF(2) of a family of bit vectors.
int gf2_rank(std::span<const std::uint64_t> vectors);

/// An r x n matrix over GF(2); column j is the vector of element j.
class BinaryMatroid {
 public:
  /// Rows as strings of '0'/'1', all of the same length n. Zero columns are
  /// loops and are rejected unless `loops` allows them.
  static BinaryMatroid from_rows(const std::vector<std::string>& rows,
                                 LoopPolicy loops = LoopPolicy::kReject);
  /// Columns as bit vectors (bit i = row i) of an r-row matrix.
  static BinaryMatroid from_columns(int rows, std::vector<std::uint64_t> columns,
                                    LoopPolicy loops = LoopPolicy::kReject);

  int row_count() const { return rows_; }
  int size() const { return static_cast<int>(columns_.size()); }
  std::span<const std::uint64_t> columns() const { return columns_; }
  std::vector<std::string> row_strings() const;

  /// Oracle view: a set is independent iff its columns are linearly independent.
  const Matroid& matroid() const { return view_; }

 private:
  BinaryMatroid(int rows, std::vector<std::uint64_t> columns);

  int rows_;
  std::vector<std::uint64_t> columns_;
  Matroid view_;
};

/// The Fano plane: the 3 x 7 matrix whose columns are all nonzero vectors.
BinaryMatroid fano_matroid();

/// Circuits as minimal supports of null-space vectors, in canonical order.
/// Agrees with circuits(b.matroid()).
std::vector<Subset> circuits_nullspace(const BinaryMatroid& b);

/// A U(2,4) minor: (M/contract_set)|four_elements is isomorphic to U(2,4),
/// and contract_set is a flat of M.
struct U24Witness {
  Subset contract_set;
  Subset four_elements;
};

inline constexpr int kMinorSearchLimit = 14;

/// First U(2,4) minor in search order (contracted set by increasing size, then
/// canonical order; four-element sets in canonical order), or nullopt.
/// Throws TooLargeError above kMinorSearchLimit elements.
std::optional<U24Witness> find_u24_minor(const Matroid& m);

/// Tutte: binary iff no U(2,4) minor. Always runs the exhaustive search.
bool is_binary(const Matroid& m);

/// Whether the 4-element set t is a U(2,4) in M/f.
bool is_u24_minor(const Matroid& m, Subset f, Subset t);

/// Precondition helper: accepts known-binary constructions immediately and
/// falls back to the minor search; throws InputError for non-binary input.
void require_binary(const Matroid& m, const char* operation);

}  // namespace rainbow
