#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "glrank/chartab.hpp"

namespace glrank {

// Writes to a sibling temp file, then renames over path.
void write_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// $GLRANK_CACHE_DIR, else $XDG_CACHE_HOME/glrank, else ~/.cache/glrank
std::filesystem::path default_cache_dir();

// kind-n-p-m-modulushash, e.g. "GL-3-3-1-00000000deadbeef"
std::string cache_key(GroupKind kind, int n, const FqField& f);

struct CacheEntry {
  std::string name;
  std::uintmax_t bytes = 0;
  bool valid = true;
  std::string problem;
};

// On-disk store of group tables (.grp) and character tables (.ctb).
// Unreadable or corrupted entries are deleted and recomputed.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }

  GroupPtr group(GroupKind kind, int n, int q, std::size_t cap = kDefaultGroupCap);
  CharacterTable table(GroupPtr g, int max_classes = kDefaultMaxClasses);

  // sorted by name; empty when the directory does not exist
  std::vector<CacheEntry> list() const;
  // checks every entry, deleting the corrupted ones
  std::vector<CacheEntry> verify();
  int clear();

 private:
  std::filesystem::path dir_;
};

}  // namespace glrank
