#pragma once

// Scratch copy of the reference tables, for tests that corrupt a line.

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nkt/golden.hpp"

namespace nkt::test_support {

class GoldenCopy {
 public:
  GoldenCopy()
      : dir_(std::filesystem::temp_directory_path() /
             ("nkt_golden_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++))) {
    std::filesystem::remove_all(dir_);
    std::filesystem::copy(golden_dir(), dir_);
  }
  ~GoldenCopy() { std::filesystem::remove_all(dir_); }
  GoldenCopy(const GoldenCopy&) = delete;
  GoldenCopy& operator=(const GoldenCopy&) = delete;

  void replace(const std::string& file, const std::string& from, const std::string& to) {
    std::ifstream in(dir_ / file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find(from);
    ASSERT_NE(pos, std::string::npos) << from;
    text.replace(pos, from.size(), to);
    std::ofstream(dir_ / file) << text;
  }
  std::string path() const { return dir_.string(); }

 private:
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::filesystem::path dir_;
};

}  // namespace nkt::test_support
