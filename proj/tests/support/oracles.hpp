#pragma once

// Slow reference evaluators used only by tests. They follow a different route
// from the library (operator words reordered one commutator at a time) and
// must not call the library's action functions.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "vira/vira.hpp"

namespace vira::testing {

/// [x, y] in the Witt algebra, expanded term by term.
inline WittVector witt_bracket_termwise(const WittVector& x, const WittVector& y) {
  std::map<Index, Scalar> acc;
  for (const auto& [m, a] : x.terms()) {
    for (const auto& [n, b] : y.terms()) acc[m + n] += a * b * Scalar{m - n};
  }
  WittVector out;
  for (const auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

/// Evaluates words J(a_1) ... J(a_r) |alpha> using only
/// [J(a), J(b)] = a delta(a,-b), J(0) = alpha on the vacuum and J(a>0)|alpha> = 0.
/// Words act right to left.
class HeisenbergWords {
 public:
  explicit HeisenbergWords(Scalar alpha) : alpha_(std::move(alpha)) {}

  FockVector eval(std::vector<Index> word) const {
    PartitionVector out;
    walk(std::move(word), Scalar{1}, out);
    return FockVector(alpha_, std::move(out));
  }

  /// Word of the basis monomial of a partition.
  static std::vector<Index> word_of(const Partition& p) {
    std::vector<Index> w;
    for (int part : p.parts()) w.push_back(-part);
    return w;
  }

  FockVector act(Index k, const FockVector& v) const {
    FockVector out(alpha_);
    for (const auto& [lambda, c] : v.terms()) {
      auto w = word_of(lambda);
      w.insert(w.begin(), k);
      out.add_scaled(c, eval(w));
    }
    return out;
  }

  FockVector normal_pair(Index k, Index l, const FockVector& v) const {
    return k <= l ? act(k, act(l, v)) : act(l, act(k, v));
  }

  /// 1/2 sum_{k=-window}^{window} :J(n-k) J(k): v.
  FockVector sugawara(Index n, const FockVector& v, Index window) const {
    FockVector out(alpha_);
    for (Index k = -window; k <= window; ++k) out += normal_pair(n - k, k, v);
    return Scalar(1, 2) * out;
  }

 private:
  // Moves the rightmost non-creation operator to the vacuum.
  void walk(std::vector<Index> word, Scalar coeff, PartitionVector& out) const {
    if (coeff.is_zero()) return;
    std::size_t pos = word.size();
    for (std::size_t i = word.size(); i-- > 0;) {
      if (word[i] >= 0) {
        pos = i;
        break;
      }
    }
    if (pos == word.size()) {
      std::vector<int> parts;
      for (Index a : word) parts.push_back(static_cast<int>(-a));
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add_term(Partition(parts), coeff);
      return;
    }
    const Index a = word[pos];
    if (pos + 1 == word.size()) {
      word.pop_back();
      if (a == 0) walk(std::move(word), coeff * alpha_, out);
      return;
    }
    const Index b = word[pos + 1];
    if (a + b == 0) {
      std::vector<Index> contracted = word;
      contracted.erase(contracted.begin() + static_cast<long>(pos),
                       contracted.begin() + static_cast<long>(pos) + 2);
      walk(std::move(contracted), coeff * Scalar{a}, out);
    }
    std::swap(word[pos], word[pos + 1]);
    walk(std::move(word), coeff, out);
  }

  Scalar alpha_;
};

/// Evaluates words L(a_1) ... L(a_r) |c,h> by bubble-sorting the word into
/// increasing index order with
///   L(a) L(b) = L(b) L(a) + (a-b) L(a+b) + delta(a,-b) (a^3-a)/12 c,
/// then letting L(0) act by h and L(a>0) annihilate |c,h>.
class VirasoroWords {
 public:
  VirasoroWords(Scalar c, Scalar h) : c_(std::move(c)), h_(std::move(h)) {}

  VermaVector eval(const std::vector<Index>& word) const {
    return VermaVector(c_, h_, reduce(word));
  }

  static std::vector<Index> word_of(const Partition& p) {
    std::vector<Index> w;
    for (int part : p.parts()) w.push_back(-part);
    return w;
  }

  VermaVector act(Index a, const VermaVector& v) const {
    VermaVector out(c_, h_);
    for (const auto& [lambda, coeff] : v.terms()) {
      auto w = word_of(lambda);
      w.insert(w.begin(), a);
      out.add_scaled(coeff, eval(w));
    }
    return out;
  }

 private:
  PartitionVector reduce(const std::vector<Index>& word) const {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    PartitionVector out;
    if (word.empty()) {
      out.add_term(Partition{}, Scalar{1});
    } else if (word.back() > 0) {
      // annihilates |c,h>
    } else if (word.back() == 0) {
      std::vector<Index> shorter(word.begin(), word.end() - 1);
      out.add_scaled(h_, reduce(shorter));
    } else {
      std::size_t i = 0;
      while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
      if (i + 1 == word.size()) {
        // sorted increasing and all negative: a basis monomial
        std::vector<int> parts;
        for (Index a : word) parts.push_back(static_cast<int>(-a));
        out.add_term(Partition(parts), Scalar{1});
      } else {
        const Index a = word[i];
        const Index b = word[i + 1];
        std::vector<Index> swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        out += reduce(swapped);
        std::vector<Index> merged = word;
        merged[i] = a + b;
        merged.erase(merged.begin() + static_cast<long>(i) + 1);
        out.add_scaled(Scalar{a - b}, reduce(merged));
        if (a + b == 0) {
          std::vector<Index> removed = word;
          removed.erase(removed.begin() + static_cast<long>(i),
                        removed.begin() + static_cast<long>(i) + 2);
          const Scalar sa{a};
          out.add_scaled((sa * sa * sa - sa) / Scalar{12} * c_, reduce(removed));
        }
      }
    }
    memo_.emplace(word, out);
    return out;
  }

  Scalar c_;
  Scalar h_;
  mutable std::map<std::vector<Index>, PartitionVector> memo_;
};

}  // namespace vira::testing
