#include "griddom/matrix_io.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "griddom/errors.hpp"

namespace griddom {
namespace {

constexpr std::array<char, 4> kMagic{'T', 'M', 'X', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    bytes[b] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * b)) & 0xFFU);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw CacheError("truncated TMX1 stream");
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) v |= std::uint64_t{bytes[b]} << (8 * b);
  return static_cast<T>(v);
}

const char* tag_name(MatrixTag tag) {
  switch (tag) {
    case MatrixTag::piece: return "C";
    case MatrixTag::gluing: return "L";
    case MatrixTag::transition: return "T";
    case MatrixTag::glued: return "M";
    case MatrixTag::folded: return "F";
  }
  return "?";
}

}  // namespace

std::optional<MatrixTag> tag_from_char(char c) {
  switch (c) {
    case 'C': return MatrixTag::piece;
    case 'L': return MatrixTag::gluing;
    case 'T': return MatrixTag::transition;
    case 'M': return MatrixTag::glued;
    case 'F': return MatrixTag::folded;
    default: return std::nullopt;
  }
}

void write_tmx(std::ostream& out, const TropicalMatrix& m, const MatrixKey& key) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(m.dim()));
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(key.k));
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(key.tag));
  put_le<std::uint32_t>(out, key.p);
  // Entries are written in bulk; the loop is only for big-endian hosts.
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(m.data().data()),
              static_cast<std::streamsize>(m.data().size() * sizeof(Entry)));
  } else {
    for (Entry e : m.data()) put_le<std::uint32_t>(out, e);
  }
  if (!out) throw CacheError("failed writing TMX1 stream");
}

std::pair<TropicalMatrix, MatrixKey> read_tmx(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw CacheError("bad TMX1 magic");
  const auto dim = get_le<std::uint32_t>(in);
  MatrixKey key;
  key.k = get_le<std::uint16_t>(in);
  const auto tag = tag_from_char(static_cast<char>(get_le<std::uint8_t>(in)));
  if (!tag) throw CacheError("unknown TMX1 matrix tag");
  key.tag = *tag;
  key.p = get_le<std::uint32_t>(in);

  TropicalMatrix m(dim);
  if constexpr (std::endian::native == std::endian::little) {
    const auto bytes = static_cast<std::streamsize>(m.data().size() * sizeof(Entry));
    in.read(reinterpret_cast<char*>(m.data().data()), bytes);
    if (in.gcount() != bytes) throw CacheError("truncated TMX1 payload");
  } else {
    for (Entry& e : m.data()) e = get_le<std::uint32_t>(in);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw CacheError("trailing bytes after TMX1 payload");
  return {std::move(m), key};
}

void save_tmx(const std::filesystem::path& path, const TropicalMatrix& m, const MatrixKey& key) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open " + tmp.string() + " for writing");
    write_tmx(out, m, key);
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw CacheError("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::pair<TropicalMatrix, MatrixKey> load_tmx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  try {
    return read_tmx(in);
  } catch (const CacheError& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
}

void write_csv(std::ostream& out, const TropicalMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out << ',';
      if (m(r, c) == kInf) {
        out << "inf";
      } else {
        out << m(r, c);
      }
    }
    out << '\n';
  }
}

MatrixStore::MatrixStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path MatrixStore::path_for(const MatrixKey& key) const {
  std::ostringstream name;
  name << "k" << key.k << "_" << tag_name(key.tag) << "_p" << key.p << ".tmx";
  return dir_ / name.str();
}

bool MatrixStore::contains(const MatrixKey& key) const {
  return std::filesystem::exists(path_for(key));
}

std::optional<TropicalMatrix> MatrixStore::load(const MatrixKey& key) const {
  const auto path = path_for(key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  auto [m, stored] = load_tmx(path);
  if (!(stored == key)) throw CacheError(path.string() + ": header does not match its file name");
  return std::move(m);
}

void MatrixStore::save(const MatrixKey& key, const TropicalMatrix& m) const {
  save_tmx(path_for(key), m, key);
}

TropicalMatrix MatrixStore::get_or_compute(const MatrixKey& key,
                                           const std::function<TropicalMatrix()>& compute,
                                           bool* hit) const {
  if (auto cached = load(key)) {
    if (hit) *hit = true;
    return std::move(*cached);
  }
  if (hit) *hit = false;
  TropicalMatrix m = compute();
  save(key, m);
  return m;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GRIDDOM_CACHE"); env != nullptr && *env != '\0') return env;
  return ".griddom-cache";
}

}  // namespace griddom
