#ifndef CIRCPACK_IO_H_
#define CIRCPACK_IO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "circpack/packing.h"

namespace circpack {

// Malformed JSON, missing fields, lossy numbers or an invalid instance.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"bin": {"w", "h"}, "circles": [...], "gamma", "r"}; circle k gets id k.
struct InstanceFile {
  Instance instance;
  std::optional<Rational> gamma;
  std::optional<int> r;

  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    return a.instance.w == b.instance.w && a.instance.h == b.instance.h && a.instance.circles == b.instance.circles &&
           a.gamma == b.gamma && a.r == b.r;
  }
};

struct PackingMeta {
  std::optional<std::uint64_t> seed;
  std::string backend;
  std::map<std::string, std::string> parameters;  // sorted, so output is stable
  std::optional<Rational> achieved_height;

  friend bool operator==(const PackingMeta&, const PackingMeta&) = default;
};

struct PackingFile {
  Packing packing;
  PackingMeta meta;

  friend bool operator==(const PackingFile&, const PackingFile&) = default;
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

PackingFile parse_packing(std::string_view text);
std::string serialize_packing(const PackingFile& file);

// Whole file, or ParseError mentioning the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace circpack

#endif  // CIRCPACK_IO_H_
