#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trigshear/window.hpp"

namespace trigshear {

enum class Orientation : std::uint8_t { horizontal, vertical };

char orientation_tag(Orientation o);             // 'h' / 'v'
Orientation orientation_from_tag(char c);        // throws InvalidParameter

/// (i, j, l): orientation, even scale j >= 0, shear |l| <= 2^{j/2}.
struct ShearletIndex {
  Orientation orientation = Orientation::horizontal;
  int scale = 0;
  std::int64_t shear = 0;

  static ShearletIndex h(int j, std::int64_t l) {
    return {Orientation::horizontal, j, l};
  }
  static ShearletIndex v(int j, std::int64_t l) {
    return {Orientation::vertical, j, l};
  }
  std::string str() const;
};

/// Throws InvalidIndex unless j is even, 0 <= j <= 40 and |l| <= 2^{j/2}.
void validate(const ShearletIndex& idx);

/// 2^{j/2} for even j.
std::int64_t half_scale(int j);

using ShearMatrix = Eigen::Matrix<std::int64_t, 2, 2>;

/// Horizontal [[2^j, l 2^{j/2}], [0, 2^{j/2}]], vertical [[2^{j/2}, 0],
/// [l 2^{j/2}, 2^j]]; determinant 2^{3j/2} exactly.
ShearMatrix shear_matrix(const ShearletIndex& idx);

/// arctan(l 2^{-j/2}) for horizontal, arccot(l 2^{-j/2}) for vertical.
double discrete_angle(const ShearletIndex& idx);

/// Bivariate symbol sample Psi^{(i)}_{j,l}(xi) in [0, 1].
double eval_symbol(const Window1D& g, const ShearletIndex& idx,
                   const Eigen::Vector2d& xi);

/// Nonzero integer-frequency samples of one symbol. The support is a
/// contiguous run of the inner coordinate for every outer coordinate
/// (horizontal: outer = k1, inner = k2), stored as per-row runs.
class SparseSymbol {
 public:
  struct Row {
    std::int32_t outer;        // k1 (horizontal) or k2 (vertical)
    std::int32_t inner_begin;  // first inner coordinate of the run
    std::int64_t offset;       // index of the run in values()
    std::int32_t count;
  };

  SparseSymbol() = default;
  SparseSymbol(ShearletIndex idx, std::vector<Row> rows,
               std::vector<double> values)
      : index_(idx), rows_(std::move(rows)), values_(std::move(values)) {}

  const ShearletIndex& index() const { return index_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<double>& values() const { return values_; }
  std::int64_t entry_count() const {
    return static_cast<std::int64_t>(values_.size());
  }
  bool empty() const { return values_.empty(); }

  /// Compensated sum of all stored samples.
  double sum_values() const;

  /// f(k1, k2, value) over all entries, row-major.
  template <class F>
  void for_each_entry(F&& f) const {
    const bool horizontal = index_.orientation == Orientation::horizontal;
    for (const Row& row : rows_) {
      const double* v = values_.data() + row.offset;
      for (std::int32_t i = 0; i < row.count; ++i) {
        const std::int64_t inner = row.inner_begin + i;
        if (horizontal) {
          f(static_cast<std::int64_t>(row.outer), inner, v[i]);
        } else {
          f(inner, static_cast<std::int64_t>(row.outer), v[i]);
        }
      }
    }
  }

 private:
  ShearletIndex index_;
  std::vector<Row> rows_;
  std::vector<double> values_;
};

/// Enumerates exactly the integer k with eval_symbol(k) above the denormal
/// guard. Requires j >= 2; throws ResourceError when the estimated entry
/// storage exceeds max_bytes.
SparseSymbol sample_symbol(const Window1D& g, const ShearletIndex& idx,
                           std::size_t max_bytes = std::size_t{1} << 30);

/// Membership of xi in the polar cone W_{j,l}^{(i)} of the symbol support.
/// Integral xi is decided in exact integer arithmetic.
bool cone_contains(const ShearletIndex& idx, const Eigen::Vector2d& xi);
bool cone_contains(const ShearletIndex& idx, std::int64_t k1, std::int64_t k2);

/// Translate lattice P(N_{j,l}) = N^{-1} Z^2 on the centered unit cell.
/// Independent of l; tensor product of dyadic progressions.
struct PatternGrid {
  Eigen::Vector2d step;                      // per axis
  Eigen::Matrix<std::int64_t, 2, 1> count;   // points per axis

  std::int64_t total() const { return count[0] * count[1]; }

  /// i1 in [0, count[0]), i2 in [0, count[1]) -> point in [-1/2, 1/2)^2.
  Eigen::Vector2d point(std::int64_t i1, std::int64_t i2) const {
    return {step[0] * static_cast<double>(i1 - count[0] / 2),
            step[1] * static_cast<double>(i2 - count[1] / 2)};
  }

  /// Nearest lattice point to y (componentwise round, clamped to the cell).
  Eigen::Vector2d round_to_grid(const Eigen::Vector2d& y) const;
};

PatternGrid pattern(const ShearletIndex& idx);

/// Orientation half-shift sigma: (2^{-j-1}, 0) horizontal, (0, 2^{-j-1})
/// vertical; the shifted translate is y - sigma.
Eigen::Vector2d half_shift(const ShearletIndex& idx);
Eigen::Vector2d shifted_translate(const Eigen::Vector2d& y,
                                  const ShearletIndex& idx);

/// psi_{j,l,y}(x) by direct summation over the stored symbol entries.
std::complex<double> eval_shearlet_spatial(const SparseSymbol& symbol,
                                           const Eigen::Vector2d& y,
                                           const Eigen::Vector2d& x);

/// Binary symbol dump (little-endian): header {i, j, l, count}, then
/// per-entry {k1:int32, k2:int32, value:float64}.
void save_symbol(const SparseSymbol& symbol, const std::filesystem::path& path);
SparseSymbol load_symbol(const std::filesystem::path& path);

}  // namespace trigshear
