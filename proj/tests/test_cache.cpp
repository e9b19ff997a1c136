#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "glrank/cache.hpp"

using namespace glrank;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("glrank-test-" + std::to_string(::getpid()))) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("atomic write") {
  TempDir t;
  auto p = t.path / "sub" / "a.txt";
  write_atomic(p, "hello");
  write_atomic(p, "world");
  CHECK(read_file(p) == "world");
  int files = 0;
  for ([[maybe_unused]] auto& e : fs::directory_iterator(p.parent_path())) ++files;
  CHECK(files == 1);
}

TEST_CASE("cache lifecycle") {
  TempDir t;
  Cache c(t.path);
  CHECK(c.list().empty());
  auto g = c.group(GroupKind::SL, 2, 3);
  auto ct = c.table(g);
  CHECK(c.list().size() == 2);
  for (auto& e : c.verify()) CHECK(e.valid);
  std::string before = read_file(t.path / (cache_key(GroupKind::SL, 2, g->field()) + ".ctb"));

  // a second open reads the stored files
  auto g2 = c.group(GroupKind::SL, 2, 3);
  CHECK(g2->codes().size() == g->codes().size());
  CHECK(c.table(g2).dims == ct.dims);

  // flip a byte: verify deletes, the next load recomputes identically
  auto path = t.path / (cache_key(GroupKind::SL, 2, g->field()) + ".ctb");
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('\x7f');
  }
  auto rep = c.verify();
  int bad = 0;
  for (auto& e : rep) bad += !e.valid;
  CHECK(bad == 1);
  CHECK(!fs::exists(path));
  c.table(g);
  CHECK(read_file(path) == before);

  CHECK(c.clear() == 2);
  CHECK(c.list().empty());
  c.table(c.group(GroupKind::SL, 2, 3));
  CHECK(read_file(path) == before);
}
