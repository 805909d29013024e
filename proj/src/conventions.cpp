#include "twk/conventions.hpp"

#include <cstdio>

namespace twk {

const std::vector<std::pair<std::string, std::string>>& convention_registry() {
  static const std::vector<std::pair<std::string, std::string>> registry{
      {"hasse", "product over i < j of (a_i, a_j)_v"},
      {"super-brauer", "(s - r) mod 8 for e_i^2 = +1 (i <= r), -1 (i > r)"},
      {"heisenberg",
       "(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'); (pi(a,b,c) f)(x) = psi(c + b x) f(x + a); "
       "psi(t) = exp(2 pi i t / N); SL(2) acts on column vectors"},
      {"degree", "winding of g with s_north = g s_south; the Pauli +1 eigenline has degree +1"},
      {"quaternionic-line", "HP^1 is the quotient by left scalars; GL(2,H) acts on row vectors from the right"},
  };
  return registry;
}

std::uint64_t convention_hash() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [name, value] : convention_registry()) feed(name + "=" + value + "\n");
  return h;
}

std::string convention_hash_hex() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(convention_hash()));
  return buf;
}

}  // namespace twk
