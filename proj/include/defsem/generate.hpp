#pragma once

// Framework generators for property campaigns.

#include <cstdint>
#include <iterator>
#include <random>
#include <string>

#include "defsem/af.hpp"
#include "defsem/errors.hpp"

namespace defsem {

struct GeneratorSpec {
  std::size_t argument_count = 1;
  double attack_density = 0.0;
  double self_attack_rate = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Names a1..an.
inline Argument generated_argument(std::size_t i) { return Argument("a" + std::to_string(i + 1)); }

// Uniform double in [0,1) from the top 53 bits of one engine draw. Avoids
// std::uniform_real_distribution so output is identical across standard
// libraries.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Pairs are visited source-major over a1..an; every pair costs one draw.
inline ArgumentationFramework generate_af(const GeneratorSpec& spec) {
  if (spec.argument_count == 0) throw PreconditionError("argument_count must be at least 1");
  std::mt19937_64 rng(spec.seed);
  ArgumentSet args;
  for (std::size_t i = 0; i < spec.argument_count; ++i) args.insert(generated_argument(i));
  AttackSet atts;
  for (std::size_t i = 0; i < spec.argument_count; ++i)
    for (std::size_t j = 0; j < spec.argument_count; ++j) {
      double p = i == j ? spec.self_attack_rate : spec.attack_density;
      if (unit_draw(rng) < p) atts.insert(Attack{generated_argument(i), generated_argument(j)});
    }
  return ArgumentationFramework(std::move(args), std::move(atts));
}

inline constexpr std::size_t kMaxExhaustiveArguments = 4;

// Framework number `code` on n arguments: bit i*n+j set iff ai attacks aj.
inline ArgumentationFramework af_from_code(std::size_t n, std::uint64_t code) {
  ArgumentSet args;
  for (std::size_t i = 0; i < n; ++i) args.insert(generated_argument(i));
  AttackSet atts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1) atts.insert(Attack{generated_argument(i), generated_argument(j)});
  return ArgumentationFramework(std::move(args), std::move(atts));
}

// Every framework on {a1..an}, in code order.
class AllFrameworks {
 public:
  explicit AllFrameworks(std::size_t n) : n_(n) {
    if (n == 0) throw PreconditionError("n must be at least 1");
    if (n > kMaxExhaustiveArguments)
      throw InstanceTooLarge("exhaustive framework enumeration", n, kMaxExhaustiveArguments);
  }

  class iterator {
   public:
    using value_type = ArgumentationFramework;
    using difference_type = std::ptrdiff_t;
    iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
    ArgumentationFramework operator*() const { return af_from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    std::size_t n_;
    std::uint64_t code_;
  };

  std::uint64_t size() const { return std::uint64_t{1} << (n_ * n_); }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, size()}; }

 private:
  std::size_t n_;
};

inline AllFrameworks enumerate_all_afs(std::size_t n) { return AllFrameworks(n); }

}  // namespace defsem
