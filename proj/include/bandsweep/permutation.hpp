#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "bandsweep/band.hpp"
#include "bandsweep/error.hpp"

namespace bandsweep {

// Permutation of {1..n}.  Strands are 1-based throughout; image_of(i) is the
// image of strand i.
class Permutation {
 public:
  explicit Permutation(int n) : images_(static_cast<std::size_t>(check(n))) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  Permutation(int n, std::vector<int> images) : images_(std::move(images)) {
    check(n);
    if (static_cast<int>(images_.size()) != n) fail(errc::out_of_range, "image table size must equal n");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
      if (v < 1 || v > n) fail(errc::out_of_range, "image " + std::to_string(v) + " outside 1..n");
      if (seen[static_cast<std::size_t>(v - 1)]) fail(errc::out_of_range, "images are not a bijection");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 1 || a > n || b < 1 || b > n) fail(errc::out_of_range, "transposition strand outside 1..n");
    p.images_[static_cast<std::size_t>(a - 1)] = b;
    p.images_[static_cast<std::size_t>(b - 1)] = a;
    return p;
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }

  int image_of(int strand) const {
    if (strand < 1 || strand > size()) fail(errc::out_of_range, "strand outside 1..n");
    return images_[static_cast<std::size_t>(strand - 1)];
  }

  int operator()(int strand) const { return image_of(strand); }

  const std::vector<int>& images() const noexcept { return images_; }

  // Composite "this first, then next":  result(x) = next(this(x)).
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) fail(errc::strand_mismatch, "composing permutations of different sizes");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[i] = next.images_[static_cast<std::size_t>(images_[i] - 1)];
    return Permutation(size(), std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(size(), std::move(out));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(images_[j] - 1);
      }
    }
    return cycles;
  }

  // True iff the permutation is a single n-cycle.
  bool is_full_cycle() const { return cycle_count() == 1; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  static int check(int n) {
    if (n < 1) fail(errc::out_of_range, "permutation size must be >= 1");
    return n;
  }

  std::vector<int> images_;
};

// Apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) { return p.then(q); }

// Underlying permutation of the word under a(t,s) -> (t s), letters acting
// left to right: the first letter acts first.
inline Permutation permutation(const BandWord& w) {
  Permutation p(w.strands());
  for (const auto& g : w.letters()) p = p.then(Permutation::transposition(w.strands(), g.t(), g.s()));
  return p;
}

// Same convention with sigma_i -> (i, i+1); signs are irrelevant here.
inline Permutation permutation(const ArtinWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters()) p = p.then(Permutation::transposition(w.strands(), l.index, l.index + 1));
  return p;
}

// Invariants of the closed braid and its Bennequin surface: the surface is
// n discs joined by k bands, so chi = n - k; the closure has one link
// component per permutation cycle.
struct ClosureInvariants {
  int components;
  int euler;
  int exponent_sum;

  friend bool operator==(const ClosureInvariants&, const ClosureInvariants&) = default;
};

inline ClosureInvariants closure_invariants(const BandWord& w) {
  return ClosureInvariants{
      permutation(w).cycle_count(),
      w.strands() - w.length(),
      w.exponent_sum(),
  };
}

// The closure is the unknot exactly when the Bennequin surface is a disc:
// k = n - 1 bands (chi = 1) with connected boundary.
inline bool is_unknot_presentation(const BandWord& w) {
  return w.length() == w.strands() - 1 && permutation(w).is_full_cycle();
}

}  // namespace bandsweep
