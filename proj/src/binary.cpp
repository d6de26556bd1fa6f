#include "rainbow/binary.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "rainbow/errors.hpp"

namespace rainbow {

int gf2_rank(std::span<const std::uint64_t> vectors) {
  std::array<std::uint64_t, 64> pivot{};  // pivot[b]: reduced vector with leading bit b
  int rank = 0;
  for (std::uint64_t v : vectors) {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (pivot[lead] == 0) {
        pivot[lead] = v;
        ++rank;
        break;
      }
      v ^= pivot[lead];
    }
  }
  return rank;
}

namespace {

class BinaryOracle final : public detail::RankOracle {
 public:
  explicit BinaryOracle(std::vector<std::uint64_t> columns)
      : RankOracle(static_cast<int>(columns.size()), true), columns_(std::move(columns)) {}

 protected:
  int compute_rank(Subset x) const override {
    std::array<std::uint64_t, kMaxElements> picked{};
    int count = 0;
    for (int e : x) picked[count++] = columns_[e];
    return gf2_rank(std::span<const std::uint64_t>(picked.data(), count));
  }

 private:
  std::vector<std::uint64_t> columns_;
};

}  // namespace

BinaryMatroid::BinaryMatroid(int rows, std::vector<std::uint64_t> columns)
    : rows_(rows),
      columns_(std::move(columns)),
      view_(std::make_shared<BinaryOracle>(columns_)) {}

BinaryMatroid BinaryMatroid::from_columns(int rows, std::vector<std::uint64_t> columns,
                                          LoopPolicy loops) {
  if (rows < 0 || rows > 64) throw InputError("binary matrix needs 0..64 rows");
  if (columns.size() > static_cast<std::size_t>(kMaxElements)) {
    throw TooLargeError("binary matrix has more than 64 columns");
  }
  const std::uint64_t row_mask = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((columns[j] & ~row_mask) != 0) {
      throw InputError("column " + std::to_string(j) + " has bits beyond row " +
                       std::to_string(rows));
    }
    if (columns[j] == 0 && loops == LoopPolicy::kReject) {
      throw LoopError("zero column " + std::to_string(j) + " is a loop");
    }
  }
  return BinaryMatroid(rows, std::move(columns));
}

BinaryMatroid BinaryMatroid::from_rows(const std::vector<std::string>& rows, LoopPolicy loops) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint64_t> columns(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw InputError("binary matrix rows have different lengths");
    for (std::size_t j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        columns[j] |= std::uint64_t{1} << i;
      } else if (c != '0') {
        throw InputError(std::string("binary matrix entry '") + c + "' is not 0 or 1");
      }
    }
  }
  return from_columns(static_cast<int>(rows.size()), std::move(columns), loops);
}

std::vector<std::string> BinaryMatroid::row_strings() const {
  std::vector<std::string> out(rows_, std::string(columns_.size(), '0'));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (int i = 0; i < rows_; ++i) {
      if ((columns_[j] >> i) & 1U) out[i][j] = '1';
    }
  }
  return out;
}

BinaryMatroid fano_matroid() {
  std::vector<std::uint64_t> columns;
  for (std::uint64_t v = 1; v <= 7; ++v) columns.push_back(v);
  return BinaryMatroid::from_columns(3, std::move(columns));
}

std::vector<Subset> circuits_nullspace(const BinaryMatroid& b) {
  const int n = b.size();
  // Row-reduce with rows as n-bit masks over the columns.
  std::vector<std::uint64_t> rows(b.row_count(), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < b.row_count(); ++i) {
      if ((b.columns()[j] >> i) & 1U) rows[i] |= std::uint64_t{1} << j;
    }
  }
  std::vector<int> pivot_column;
  int next_row = 0;
  for (int col = 0; col < n && next_row < static_cast<int>(rows.size()); ++col) {
    int found = -1;
    for (int i = next_row; i < static_cast<int>(rows.size()); ++i) {
      if ((rows[i] >> col) & 1U) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[found], rows[next_row]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != next_row && ((rows[i] >> col) & 1U)) rows[i] ^= rows[next_row];
    }
    pivot_column.push_back(col);
    ++next_row;
  }
  Subset pivots;
  for (int c : pivot_column) pivots = pivots.with(c);

  std::vector<std::uint64_t> kernel_basis;
  for (int f : Subset::range(n) - pivots) {
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < pivot_column.size(); ++i) {
      if ((rows[i] >> f) & 1U) v |= std::uint64_t{1} << pivot_column[i];
    }
    kernel_basis.push_back(v);
  }
  const int dimension = static_cast<int>(kernel_basis.size());
  if (dimension > 20) throw TooLargeError("cycle space dimension above 20");

  // Gray-code walk over the whole cycle space.
  std::vector<Subset> cycles;
  cycles.reserve((std::size_t{1} << dimension) - 1);
  std::uint64_t current = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << dimension); ++step) {
    current ^= kernel_basis[std::countr_zero(step)];
    cycles.emplace_back(current);
  }
  sort_canonical(cycles);
  // Every cycle is a disjoint union of circuits, so a cycle is a circuit iff
  // it contains no smaller accepted circuit.
  std::vector<Subset> out;
  for (Subset c : cycles) {
    const bool contains_smaller =
        std::any_of(out.begin(), out.end(), [&](Subset d) { return d.subset_of(c); });
    if (!contains_smaller) out.push_back(c);
  }
  return out;
}

bool is_u24_minor(const Matroid& m, Subset f, Subset t) {
  if (t.size() != 4 || t.intersects(f)) return false;
  const int rf = m.rank(f);
  if (m.rank(f | t) - rf != 2) return false;
  for (int a : t) {
    if (m.rank(f.with(a)) - rf != 1) return false;
    for (int b : t) {
      if (b > a && m.rank(f.with(a).with(b)) - rf != 2) return false;
    }
  }
  return true;
}

std::optional<U24Witness> find_u24_minor(const Matroid& m) {
  if (m.size() > kMinorSearchLimit) {
    throw TooLargeError("minor search is limited to " + std::to_string(kMinorSearchLimit) +
                        " elements");
  }
  const int n = m.size();
  std::optional<U24Witness> found;
  // A dependent contraction set gives the same minors as any of its bases,
  // which are smaller and therefore searched first.
  for (int k = 0; k + 2 <= m.rank() && !found; ++k) {
    for_each_subset_of_size(m.ground(), k, [&](Subset x) {
      if (!m.is_independent(x)) return true;
      std::vector<int> points;
      for (int e = 0; e < n; ++e) {
        if (!x.contains(e) && m.rank(x.with(e)) == k + 1) points.push_back(e);
      }
      const int p = static_cast<int>(points.size());
      if (p < 4) return true;
      std::vector<char> spread(static_cast<std::size_t>(p) * p, 0);
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
          spread[i * p + j] = m.rank(x.with(points[i]).with(points[j])) == k + 2;
        }
      }
      for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
          if (!spread[a * p + b]) continue;
          const Subset line = x.with(points[a]).with(points[b]);
          for (int c = b + 1; c < p; ++c) {
            if (!spread[a * p + c] || !spread[b * p + c]) continue;
            if (m.rank(line.with(points[c])) != k + 2) continue;
            for (int d = c + 1; d < p; ++d) {
              if (!spread[a * p + d] || !spread[b * p + d] || !spread[c * p + d]) continue;
              const Subset t{points[a], points[b], points[c], points[d]};
              if (m.rank(x | t) != k + 2) continue;
              found = U24Witness{closure(m, x), t};
              return false;
            }
          }
        }
      }
      return true;
    });
  }
  return found;
}

bool is_binary(const Matroid& m) { return !find_u24_minor(m).has_value(); }

void require_binary(const Matroid& m, const char* operation) {
  if (m.known_binary()) return;
  if (find_u24_minor(m)) {
    throw InputError(std::string(operation) + " requires a binary matroid (found a U(2,4) minor)");
  }
}

}  // namespace rainbow
