// Copyright 2026 The Omega Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OMEGA_PERIODIC_HPP
#define OMEGA_PERIODIC_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "omega/errors.hpp"
#include "omega/rational.hpp"
#include "omega/scalar.hpp"

namespace omega {

/// A union of finitely many cosets of a rational lattice:
/// { modulus * k + r : k in ZZ, r in residues }.
///
/// Canonical form: residues sorted and reduced into [0, modulus), and the
/// modulus is the smallest period of the set.
class PeriodicSet {
 public:
  PeriodicSet() = default;

  /// ZZ itself.
  static PeriodicSet integers() { return PeriodicSet(Rat(1), {Rat(0)}); }

  PeriodicSet(const Rat& modulus, std::vector<Rat> residues) : modulus_(modulus) {
    if (modulus <= 0) fail(ErrorKind::InvalidArgument, "lattice modulus must be positive");
    for (Rat& r : residues) r = rat_mod(r, modulus_);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    residues_ = std::move(residues);
    minimize();
  }

  const Rat& modulus() const { return modulus_; }
  const std::vector<Rat>& residues() const { return residues_; }
  bool empty() const { return residues_.empty(); }

  bool contains(const Rat& x) const {
    if (residues_.empty()) return false;
    return std::binary_search(residues_.begin(), residues_.end(), rat_mod(x, modulus_));
  }
  bool contains(const Scalar& x) const { return x.is_rational() && contains(x.rational()); }

  /// The same set written over a multiple of the current modulus.
  std::vector<Rat> residues_over(const Rat& big) const {
    std::vector<Rat> out;
    Rat copies = big / modulus_;
    if (copies.get_den() != 1)
      fail(ErrorKind::InvalidArgument, "modulus is not a multiple of the period");
    long n = copies.get_num().get_si();
    for (long k = 0; k < n; ++k)
      for (const Rat& r : residues_) out.push_back(r + modulus_ * k);
    return out;
  }

  /// { a * x + b : x in this }
  PeriodicSet affine(const Rat& a, const Rat& b) const {
    std::vector<Rat> rs;
    for (const Rat& r : residues_) rs.push_back(a * r + b);
    return PeriodicSet(rat_abs(a) * modulus_, std::move(rs));
  }

  /// Elements in the open interval (lo, hi); throws if more than `limit`.
  std::vector<Rat> points_between(const Rat& lo, const Rat& hi,
                                  std::size_t limit = 10000) const {
    std::vector<Rat> out;
    if (residues_.empty() || !(lo < hi)) return out;
    BigInt k = floor_of(Rat(lo / modulus_));
    for (;; ++k) {
      Rat base = modulus_ * Rat(k);
      if (base >= hi) break;
      for (const Rat& r : residues_) {
        Rat x = base + r;
        if (x > lo && x < hi) {
          out.push_back(x);
          if (out.size() > limit)
            fail(ErrorKind::UnsupportedCombination,
                 "lattice trace on a bounded interval exceeds " + std::to_string(limit) +
                     " points");
        }
      }
    }
    return out;
  }

  /// Largest distance between consecutive elements.
  Rat max_gap() const {
    if (residues_.empty()) return Rat(0);
    Rat best = residues_.front() + modulus_ - residues_.back();
    for (std::size_t i = 1; i < residues_.size(); ++i)
      best = std::max(best, Rat(residues_[i] - residues_[i - 1]));
    return best;
  }

  bool operator==(const PeriodicSet& o) const {
    return modulus_ == o.modulus_ && residues_ == o.residues_;
  }

  /// DSL rendering as a union of affine images of ZZ.
  std::string str() const {
    if (residues_.empty()) return "EMPTY";
    std::string out;
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      if (i) out += " | ";
      out += to_string(modulus_) + "*ZZ+" + to_string(residues_[i]);
    }
    return residues_.size() > 1 ? "(" + out + ")" : out;
  }

 private:
  void minimize() {
    if (residues_.empty()) {
      modulus_ = Rat(1);
      return;
    }
    std::size_t n = residues_.size();
    for (std::size_t parts = n; parts > 1; --parts) {
      if (n % parts) continue;
      Rat shift = modulus_ / static_cast<long>(parts);
      bool invariant = true;
      for (const Rat& r : residues_)
        if (!std::binary_search(residues_.begin(), residues_.end(),
                                rat_mod(Rat(r + shift), modulus_))) {
          invariant = false;
          break;
        }
      if (invariant) {
        std::vector<Rat> reduced;
        for (const Rat& r : residues_)
          if (r < shift) reduced.push_back(r);
        modulus_ = shift;
        residues_ = std::move(reduced);
        minimize();
        return;
      }
    }
  }

  Rat modulus_{1};
  std::vector<Rat> residues_;
};

/// Pointwise Boolean combination of membership in two periodic sets, where
/// a non-member of either set takes the value `outside_*`.
/// Returns (periodic exception set, value off the exception set).
struct PeriodicMask {
  PeriodicSet exceptions;
  bool rest = false;
};

inline PeriodicMask combine_periodic(const PeriodicSet* a, bool a_in, bool a_out,
                                     const PeriodicSet* b, bool b_in, bool b_out,
                                     const std::function<bool(bool, bool)>& op) {
  bool rest = op(a_out, b_out);
  Rat modulus(1);
  if (a && !a->empty()) modulus = a->modulus();
  if (b && !b->empty()) modulus = (a && !a->empty()) ? rat_lcm(modulus, b->modulus()) : b->modulus();
  std::vector<Rat> candidates;
  if (a && !a->empty())
    for (const Rat& r : a->residues_over(modulus)) candidates.push_back(r);
  if (b && !b->empty())
    for (const Rat& r : b->residues_over(modulus)) candidates.push_back(r);
  std::vector<Rat> keep;
  for (const Rat& r : candidates) {
    bool va = (a && a->contains(r)) ? a_in : a_out;
    bool vb = (b && b->contains(r)) ? b_in : b_out;
    if (op(va, vb) != rest) keep.push_back(r);
  }
  return {PeriodicSet(modulus, std::move(keep)), rest};
}

}  // namespace omega

#endif  // OMEGA_PERIODIC_HPP
