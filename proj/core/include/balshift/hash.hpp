#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace balshift {

// FNV-1a, used for seed derivation and cache keys. Stable across platforms;
// never fed to anything security-sensitive.
class Fnv1a {
 public:
  Fnv1a& update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      state_ ^= bytes[i];
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  Fnv1a& update(std::string_view text) { return update(text.data(), text.size()); }

  Fnv1a& update(std::uint64_t value) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
    return update(buf, 8);
  }

  Fnv1a& update(double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, 8);
    return update(bits);
  }

  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

namespace detail {
inline void hash_append(Fnv1a&) {}
template <typename First, typename... Rest>
void hash_append(Fnv1a& h, const First& first, const Rest&... rest) {
  h.update(first);
  hash_append(h, rest...);
}
}  // namespace detail

// Stable seed derivation: every independent RNG stream in the project is
// seeded by hashing (parent seed, labels...) so streams never collide and
// never depend on evaluation order.
template <typename... Parts>
std::uint64_t derive_seed(const Parts&... parts) {
  Fnv1a h;
  detail::hash_append(h, parts...);
  return h.digest();
}

inline std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace balshift
