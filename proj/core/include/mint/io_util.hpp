//
// Copyright 2026 The Mintlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MINT_IO_UTIL_HPP_
#define MINT_IO_UTIL_HPP_

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "mint/errors.hpp"

namespace mint {

// Little-endian binary writer for the container formats. All multi-byte
// fields go through the explicit LE encoders so the files are byte-stable on
// any host.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    check_data(out_.good(), "io error: cannot open '", path, "' for writing");
  }

  void write_bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    check_data(out_.good(), "io error: short write to '", path_, "'");
  }

  void write_magic(const char (&magic)[9]) { write_bytes(magic, 8); }

  void write_u8(std::uint8_t v) { write_bytes(&v, 1); }

  void write_u32(std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    write_bytes(b, 4);
  }

  void write_i32(std::int32_t v) { write_u32(static_cast<std::uint32_t>(v)); }

  void write_u64(std::uint64_t v) {
    write_u32(static_cast<std::uint32_t>(v));
    write_u32(static_cast<std::uint32_t>(v >> 32));
  }

  void write_f32(float v) { write_u32(std::bit_cast<std::uint32_t>(v)); }

  void write_f32_array(std::span<const float> vs) {
    if constexpr (std::endian::native == std::endian::little) {
      write_bytes(vs.data(), vs.size() * sizeof(float));
    } else {
      for (float v : vs) write_f32(v);
    }
  }

  // u32 length prefix + raw bytes.
  void write_string(const std::string& s) {
    write_u32(static_cast<std::uint32_t>(s.size()));
    write_bytes(s.data(), s.size());
  }

  void close() {
    out_.close();
    check_data(!out_.fail(), "io error: failed to finish '", path_, "'");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

// Bounds-checked reader; reports the byte offset of any truncation so format
// errors point at the corruption site.
class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path) : path_(path) {
    std::ifstream in(path, std::ios::binary);
    check_data(in.good(), "io error: cannot open '", path, "' for reading");
    in.seekg(0, std::ios::end);
    buf_.resize(static_cast<std::size_t>(in.tellg()));
    in.seekg(0);
    in.read(reinterpret_cast<char*>(buf_.data()),
            static_cast<std::streamsize>(buf_.size()));
    check_data(in.good() || buf_.empty(), "io error: failed reading '", path,
               "'");
  }

  std::size_t offset() const { return pos_; }
  std::size_t size() const { return buf_.size(); }
  std::span<const unsigned char> bytes() const { return buf_; }

  void read_bytes(void* dst, std::size_t n) {
    check_data(pos_ + n <= buf_.size(), "format error: '", path_,
               "' truncated at offset ", pos_, " (needed ", n, " more bytes)");
    std::memcpy(dst, buf_.data() + pos_, n);
    pos_ += n;
  }

  void expect_magic(const char (&magic)[9]) {
    char got[8];
    read_bytes(got, 8);
    check_data(std::memcmp(got, magic, 8) == 0, "format error: '", path_,
               "' has wrong magic (expected ", magic, ")");
  }

  std::uint8_t read_u8() {
    std::uint8_t v;
    read_bytes(&v, 1);
    return v;
  }

  std::uint32_t read_u32() {
    unsigned char b[4];
    read_bytes(b, 4);
    return static_cast<std::uint32_t>(b[0]) |
           (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
  }

  std::int32_t read_i32() { return static_cast<std::int32_t>(read_u32()); }

  std::uint64_t read_u64() {
    const std::uint64_t lo = read_u32();
    const std::uint64_t hi = read_u32();
    return lo | (hi << 32);
  }

  float read_f32() { return std::bit_cast<float>(read_u32()); }

  void read_f32_array(std::span<float> dst) {
    if constexpr (std::endian::native == std::endian::little) {
      read_bytes(dst.data(), dst.size() * sizeof(float));
    } else {
      for (float& v : dst) v = read_f32();
    }
  }

  std::string read_string() {
    const std::uint32_t n = read_u32();
    std::string s(n, '\0');
    read_bytes(s.data(), n);
    return s;
  }

  void expect_end() {
    check_data(pos_ == buf_.size(), "format error: '", path_, "' has ",
               buf_.size() - pos_, " trailing bytes at offset ", pos_);
  }

 private:
  std::string path_;
  std::vector<unsigned char> buf_;
  std::size_t pos_ = 0;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mint

#endif  // MINT_IO_UTIL_HPP_
