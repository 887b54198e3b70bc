#pragma once

// Shared helpers for the test binaries: random graph generation, random
// strings and a scoped temporary directory.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "argmine/graph.hpp"

namespace argmine::test {

inline std::string random_text(std::mt19937_64& rng, std::size_t min_len = 3,
                               std::size_t max_len = 20,
                               std::size_t alphabet = 26) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && i % 5 == 4) {
      out.push_back(' ');
      continue;
    }
    out.push_back(static_cast<char>('a' + letter(rng)));
  }
  if (out.back() == ' ') out.back() = 'x';
  return out;
}

/// Random valid graph grown by attaching premises to random existing
/// I-nodes; with allow_multi_parent an attachment may fan out to several
/// parents the way the pairwise constructor can.
inline ArgumentGraph random_valid_graph(std::mt19937_64& rng,
                                        std::size_t inode_count,
                                        bool allow_multi_parent = false) {
  GraphBuilder builder;
  std::vector<std::string> inode_ids;
  inode_ids.push_back(builder.add_inode(random_text(rng)));
  builder.set_major_claim(inode_ids.front());

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 1; i < inode_count; ++i) {
    const std::string child = builder.add_inode(random_text(rng));
    std::uniform_int_distribution<std::size_t> pick(0, inode_ids.size() - 1);
    const Stance stance = unit(rng) < 0.7 ? Stance::Support : Stance::Attack;
    std::optional<double> probability;
    if (unit(rng) < 0.5) probability = 0.5 + 0.5 * unit(rng);
    builder.link(child, stance, probability, inode_ids[pick(rng)]);
    if (allow_multi_parent && inode_ids.size() > 1 && unit(rng) < 0.25) {
      std::size_t other = pick(rng);
      // A second parent, distinct from the child itself.
      builder.link(child, unit(rng) < 0.7 ? Stance::Support : Stance::Attack,
                   std::nullopt, inode_ids[other]);
    }
    inode_ids.push_back(child);
  }
  return builder.take();
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    base_ = std::filesystem::temp_directory_path() /
            ("argmine-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(base_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(base_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return base_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& content) const {
    const auto file = base_ / name;
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }

 private:
  std::filesystem::path base_;
};

}  // namespace argmine::test
