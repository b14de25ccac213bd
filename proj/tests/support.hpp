// Shared generators for the test binaries: exhaustive small universes and
// seeded random instances.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "taba/taba.hpp"

namespace taba::testing {

using Ints = ValueList<int>;

/// Every list of length <= max_len over {0, ..., alphabet - 1}, shortest first.
inline std::vector<Ints> all_lists(std::size_t max_len, int alphabet) {
  std::vector<Ints> out{Ints{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int a = 0; a < alphabet; ++a) {
        Ints next = out[i];
        next.push_back(a);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  int in_range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return below(2) == 0; }

  Ints list(std::size_t max_len, int alphabet) {
    Ints out(below(max_len + 1));
    for (int& x : out) x = in_range(0, alphabet - 1);
    return out;
  }

  /// A tree with between 1 and max_leaves leaves. Biased toward balanced
  /// shapes so both answers of balancedp show up often.
  BinTree tree(std::size_t max_leaves) {
    std::size_t leaves = 1 + below(max_leaves);
    if (coin()) return mobile(leaves, static_cast<std::uint64_t>(in_range(1, 4)));
    return arbitrary(leaves);
  }

  template <class Rep>
  Term<Rep> term(std::size_t budget) {
    using T = Term<Rep>;
    std::size_t pick = budget == 0 ? below(2) : below(4);
    switch (pick) {
      case 0:
        if constexpr (std::same_as<Rep, NamedRep>)
          return T::var("v" + std::to_string(below(4)));
        else
          return T::var(below(4));
      case 1:
        if constexpr (std::same_as<Rep, NamedRep>)
          return T::exp("p" + std::to_string(below(3)));
        else
          return T::exp();
      case 2:
        if constexpr (std::same_as<Rep, NamedRep>)
          return T::lam("v" + std::to_string(below(4)), term<Rep>(budget - 1));
        else
          return T::lam(term<Rep>(budget - 1));
      default: {
        T f = term<Rep>(budget / 2);
        return T::app(std::move(f), term<Rep>(budget / 2));
      }
    }
  }

  /// A core that cannot extend an eta redex built around it: anything but a
  /// lambda.
  template <class Rep>
  Term<Rep> core(std::size_t budget) {
    for (;;) {
      Term<Rep> t = term<Rep>(budget);
      if (!t.is_lam()) return t;
    }
  }

  std::mt19937& engine() { return gen_; }

 private:
  BinTree mobile(std::size_t leaves, std::uint64_t unit) {
    if (leaves <= 1) return BinTree::leaf(unit);
    BinTree half = mobile(leaves / 2, unit);
    switch (below(3)) {
      case 0: return BinTree::node(half, half);
      case 1: return BinTree::node(half, BinTree::leaf(tree_weight(half)));
      default: return BinTree::node(BinTree::leaf(tree_weight(half)), half);
    }
  }
  BinTree arbitrary(std::size_t leaves) {
    if (leaves <= 1) return BinTree::leaf(static_cast<std::uint64_t>(in_range(0, 5)));
    std::size_t left = 1 + below(leaves - 1);
    BinTree l = arbitrary(left);
    return BinTree::node(std::move(l), arbitrary(leaves - left));
  }

  std::mt19937 gen_;
};

inline const std::equal_to<> eq{};

/// Rewrites the argument of the `target`-th spine application (0 is the
/// innermost) of a depth-`depth` redex to the variable `fresh`.
template <class Rep>
Term<Rep> mutate_spine(const Term<Rep>& t, std::size_t depth, std::size_t target,
                       typename Rep::Var fresh) {
  using T = Term<Rep>;
  if (t.is_lam()) {
    if constexpr (std::same_as<Rep, NamedRep>)
      return T::lam(t.binder(), mutate_spine(t.body(), depth, target, fresh));
    else
      return T::lam(mutate_spine(t.body(), depth, target, fresh));
  }
  std::function<T(const T&, std::size_t)> walk = [&](const T& e, std::size_t level) -> T {
    if (level == 0) return e;
    T fun = walk(e.fun(), level - 1);
    T arg = level - 1 == target ? T::var(fresh) : e.arg();
    return T::app(std::move(fun), std::move(arg));
  };
  return walk(t, depth);
}


}  // namespace taba::testing
