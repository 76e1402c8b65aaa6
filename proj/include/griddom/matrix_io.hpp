#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "griddom/tropical.hpp"

namespace griddom {

/// Kind of matrix held in a cache file.
enum class MatrixTag : char {
  piece = 'C',       // C_p
  gluing = 'L',      // L
  transition = 'T',  // T
  glued = 'M',       // M_p = L (x) C_p
  folded = 'F',      // M'_p; export only, its entries can be negative
};

[[nodiscard]] std::optional<MatrixTag> tag_from_char(char c);

struct MatrixKey {
  int k = 0;
  MatrixTag tag = MatrixTag::piece;
  std::uint32_t p = 0;

  friend bool operator==(const MatrixKey&, const MatrixKey&) = default;
};

/// TMX1 layout, all little-endian:
///   "TMX1" | dim u32 | k u16 | tag u8 | p u32 | dim*dim u32 entries, row-major
/// with 0xFFFFFFFF standing for +inf.
inline constexpr std::size_t kTmxHeaderBytes = 15;

void write_tmx(std::ostream& out, const TropicalMatrix& m, const MatrixKey& key);
/// Throws CacheError on bad magic, unknown tag or truncated payload.
[[nodiscard]] std::pair<TropicalMatrix, MatrixKey> read_tmx(std::istream& in);

/// Writes to a temporary sibling and renames it into place.
void save_tmx(const std::filesystem::path& path, const TropicalMatrix& m, const MatrixKey& key);
[[nodiscard]] std::pair<TropicalMatrix, MatrixKey> load_tmx(const std::filesystem::path& path);

/// Comma-separated rows, "inf" for +inf.
void write_csv(std::ostream& out, const TropicalMatrix& m);

/// Directory of TMX1 files named by (k, tag, p).
class MatrixStore {
 public:
  explicit MatrixStore(std::filesystem::path dir);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] std::filesystem::path path_for(const MatrixKey& key) const;
  [[nodiscard]] bool contains(const MatrixKey& key) const;

  /// Throws CacheError when the file exists but is corrupt or its header
  /// disagrees with `key`.
  [[nodiscard]] std::optional<TropicalMatrix> load(const MatrixKey& key) const;
  void save(const MatrixKey& key, const TropicalMatrix& m) const;

  /// Loads when cached, otherwise computes and saves. `hit` reports which.
  TropicalMatrix get_or_compute(const MatrixKey& key,
                                const std::function<TropicalMatrix()>& compute,
                                bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

/// Cache directory from GRIDDOM_CACHE, else ".griddom-cache".
[[nodiscard]] std::filesystem::path default_cache_dir();

}  // namespace griddom
