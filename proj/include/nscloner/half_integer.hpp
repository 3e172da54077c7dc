#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace nscloner {

/// Half-integer carried as a doubled integer, so values like 3/2 stay exact
/// and index arithmetic never touches floating point.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int doubled) { return HalfInt{doubled}; }
  static constexpr HalfInt from_int(int value) { return HalfInt{2 * value}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return 0.5 * twice; }
  constexpr HalfInt operator-() const { return HalfInt{-twice}; }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

 private:
  constexpr explicit HalfInt(int doubled) : twice(doubled) {}
  friend struct TwiceJ;
};

/// Total pseudo-spin j = M/2 stored as 2j. The spin space has dimension
/// 2j + 1 and magnetic numbers m = j, j-1, ..., -j.
///
/// Basis ordering convention used throughout this library: index i of any
/// (2j+1)-dimensional vector or matrix corresponds to m = j - i (descending).
struct TwiceJ {
  int two_j = 1;

  constexpr TwiceJ() = default;
  explicit TwiceJ(int doubled) : two_j(doubled) {
    if (doubled < 1) throw std::domain_error("TwiceJ: 2j must be >= 1");
  }

  constexpr int dim() const { return two_j + 1; }
  /// Number of qubits M = 2j in the underlying symmetric space.
  constexpr int copies() const { return two_j; }
  constexpr double j() const { return 0.5 * two_j; }
  constexpr HalfInt max_m() const { return HalfInt{two_j}; }
  constexpr HalfInt min_m() const { return HalfInt{-two_j}; }

  /// m at basis index i (descending order).
  constexpr HalfInt m_at(int index) const { return HalfInt{two_j - 2 * index}; }

  constexpr bool valid_m(HalfInt m) const {
    return (m.twice + two_j) % 2 == 0 && m.twice >= -two_j && m.twice <= two_j;
  }

  /// Basis index of m; throws std::domain_error when m is not in
  /// {-j, ..., j} or has the wrong parity.
  int index_of(HalfInt m) const {
    if (!valid_m(m))
      throw std::domain_error("TwiceJ: m = " + m.str() + " invalid for 2j = " +
                              std::to_string(two_j));
    return (two_j - m.twice) / 2;
  }

  constexpr auto operator<=>(const TwiceJ&) const = default;
};

}  // namespace nscloner
