#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace griddom {

/// Size of the complete grid G_{n,m}: n columns, m rows.
struct GridDims {
  int n = 1;
  int m = 1;

  friend bool operator==(const GridDims&, const GridDims&) = default;

  [[nodiscard]] std::size_t vertex_count() const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  }
  /// Same grid with the shorter side first.
  [[nodiscard]] GridDims normalized() const { return n <= m ? *this : GridDims{m, n}; }
};

/// Grid vertex (i, j): column i, row j, both 1-based; (1,1) is bottom-left.
struct Vertex {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

[[nodiscard]] bool inside(const GridDims& dims, const Vertex& v);

/// Throws InputError unless n, m >= 1.
void validate(const GridDims& dims);

/// Set of vertices of a fixed grid, stored as a bitset indexed by (j-1)*n + (i-1).
class VertexSet {
 public:
  explicit VertexSet(GridDims dims);

  static VertexSet full(GridDims dims);
  static VertexSet from(GridDims dims, const std::vector<Vertex>& members);

  [[nodiscard]] const GridDims& dims() const { return dims_; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const;

  [[nodiscard]] bool contains(const Vertex& v) const;
  void insert(const Vertex& v);
  void erase(const Vertex& v);

  [[nodiscard]] std::size_t index_of(const Vertex& v) const;
  [[nodiscard]] Vertex vertex_at(std::size_t index) const;
  [[nodiscard]] bool test(std::size_t index) const;
  void set(std::size_t index, bool value = true);

  /// Members in index order (row by row, left to right).
  [[nodiscard]] std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_dims(const VertexSet& other) const;

  GridDims dims_;
  std::vector<std::uint64_t> bits_;
};

/// N[v] inside the grid.
[[nodiscard]] VertexSet closed_neighborhood(const GridDims& dims, const Vertex& v);
/// N[S] = union of N[v] over v in S.
[[nodiscard]] VertexSet closed_neighborhood(const VertexSet& set);
[[nodiscard]] bool is_dominating(const VertexSet& set);

/// 5|S| - |N[S]|. Never negative.
[[nodiscard]] long long loss(const VertexSet& set);

struct ExactGamma {
  int gamma = 0;
  VertexSet witness;
};

inline constexpr int kDefaultBruteForceVertexLimit = 30;
inline constexpr int kDefaultProfileWidthLimit = 12;

/// Exhaustive minimum dominating set. Grids above `vertex_limit` vertices
/// (hard ceiling 64) raise SizeError.
[[nodiscard]] ExactGamma gamma_bruteforce(const GridDims& dims,
                                          int vertex_limit = kDefaultBruteForceVertexLimit);

/// Exact domination number by column-to-column dynamic programming over
/// label words of the shorter side. Raises SizeError when min(n, m) exceeds
/// `width_limit` (hard ceiling 16).
[[nodiscard]] int gamma_profile_dp(const GridDims& dims,
                                   int width_limit = kDefaultProfileWidthLimit);

/// Rows top to bottom, '#' for members and '.' otherwise.
[[nodiscard]] std::string render_ascii(const VertexSet& set);

}  // namespace griddom
