#include "glrank/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <unistd.h>

#include "glrank/error.hpp"

namespace glrank {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) fail(ErrorKind::InvalidInput, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    fail(ErrorKind::InvalidInput, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("GLRANK_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "glrank";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "glrank";
  return fs::temp_directory_path() / "glrank-cache";
}

std::string cache_key(GroupKind kind, int n, const FqField& f) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(f.modulus_hash()));
  return to_string(kind) + "-" + std::to_string(n) + "-" + std::to_string(f.p()) + "-" +
         std::to_string(f.m()) + "-" + hash;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

GroupPtr Cache::group(GroupKind kind, int n, int q, std::size_t cap) {
  auto f = FqField::make(kind == GroupKind::Sym ? 2 : q);
  fs::path path = dir_ / (cache_key(kind, n, *f) + ".grp");
  if (fs::exists(path)) {
    try {
      auto g = deserialize_group(read_file(path));
      if (g.kind() == kind && g.n() == n && g.field().q() == f->q() && static_cast<std::size_t>(g.size()) <= cap)
        return std::make_shared<const GroupTable>(std::move(g));
    } catch (const Error&) {
    }
    fs::remove(path);
  }
  auto g = std::make_shared<const GroupTable>(kind == GroupKind::Sym ? symmetric_group(n, cap)
                                                                     : enumerate_group(kind, n, f, cap));
  write_atomic(path, serialize(*g));
  return g;
}

CharacterTable Cache::table(GroupPtr g, int max_classes) {
  fs::path path = dir_ / (cache_key(g->kind(), g->n(), g->field()) + ".ctb");
  if (fs::exists(path)) {
    try {
      auto ct = deserialize_table(read_file(path), g);
      if (ct.num_classes() <= max_classes) return ct;
    } catch (const Error&) {
    }
    fs::remove(path);
  }
  auto ct = character_table(g, max_classes);
  write_atomic(path, serialize(ct));
  return ct;
}

std::vector<CacheEntry> Cache::list() const {
  std::vector<CacheEntry> out;
  if (!fs::is_directory(dir_)) return out;
  for (auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file()) continue;
    auto ext = e.path().extension();
    if (ext != ".grp" && ext != ".ctb") continue;
    out.push_back({e.path().filename().string(), e.file_size(), true, {}});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.name < b.name; });
  return out;
}

std::vector<CacheEntry> Cache::verify() {
  auto entries = list();
  std::map<std::string, GroupPtr> groups;
  // groups first: tables are checked against them
  for (auto& e : entries) {
    fs::path p = dir_ / e.name;
    if (p.extension() != ".grp") continue;
    try {
      groups[p.stem().string()] = std::make_shared<const GroupTable>(deserialize_group(read_file(p)));
    } catch (const Error& err) {
      e.valid = false;
      e.problem = err.what();
    }
  }
  for (auto& e : entries) {
    fs::path p = dir_ / e.name;
    if (p.extension() != ".ctb") continue;
    auto it = groups.find(p.stem().string());
    if (it == groups.end()) {
      e.valid = false;
      e.problem = "no valid group table for this character table";
      continue;
    }
    try {
      deserialize_table(read_file(p), it->second);
    } catch (const Error& err) {
      e.valid = false;
      e.problem = err.what();
    }
  }
  for (auto& e : entries)
    if (!e.valid) fs::remove(dir_ / e.name);
  return entries;
}

int Cache::clear() {
  int n = 0;
  for (auto& e : list()) n += fs::remove(dir_ / e.name) ? 1 : 0;
  return n;
}

}  // namespace glrank
