#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wappell/rational.hpp"

namespace wappell {

// Integer partition: a weakly decreasing sequence of positive parts. The empty
// partition is the default value. Construction strips zero parts, rejects
// negative parts, and rejects sequences that are not weakly decreasing.
//
// Ordering (used by every std::map keyed on Partition and by enumeration
// helpers): graded, then reverse-lexicographic inside a grade, so iteration
// visits e.g. (3) before (2,1) before (1,1,1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "5,3,2". Both "" and "0" denote the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                          // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based row length; zero beyond the last row.
  int part(int i) const;
  // Componentwise containment mu <= lambda (Young diagram inclusion).
  bool contains(const Partition& mu) const;

  // "5,3,2"; the empty partition renders as "0".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return b.parts_ <=> a.parts_;  // reverse-lex within a grade
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Transposed diagram.
Partition conjugate(const Partition& lambda);

// Partitions obtained by removing one corner cell, sorted canonically.
std::vector<Partition> covers_down(const Partition& lambda);

// Partitions obtained by adding one corner cell, sorted canonically.
// Cardinality is always (number of distinct part values) + 1.
std::vector<Partition> covers_up(const Partition& lambda);

// Hook length of cell (i, j), 1-based. Throws std::invalid_argument with
// "cell not in diagram" when (i, j) lies outside lambda.
int hook_length(const Partition& lambda, int i, int j);

// Product of all hook lengths H(lambda); H(empty) = 1.
Int hook_product(const Partition& lambda);

// Strictly increasing degree sequence (lambda_r, lambda_{r-1}+1, ...,
// lambda_1+r-1) attached to a partition with r parts.
std::vector<int> degree_vector(const Partition& lambda);

// prod_{i<j} (n_j - n_i); 1 for fewer than two entries.
Int vandermonde(const std::vector<int>& n);

// Number of standard Young tableaux, |lambda|! / H(lambda).
Int syt_count(const Partition& lambda);

// Number of standard tableaux of skew shape outer/inner, counted as saturated
// chains in Young's lattice; zero when inner is not contained in outer.
Int skew_syt_count(const Partition& outer, const Partition& inner);

// A border strip: outer/inner is edge-connected, contains no 2x2 block, and
// has |outer| - |inner| = size cells; height = (occupied rows) - 1.
struct RimHook {
  Partition outer;
  Partition inner;
  int size = 0;
  int height = 0;

  friend bool operator==(const RimHook&, const RimHook&) = default;
};

// Definitional test that outer/inner is a rim hook (used as an independent
// validator for the enumerations below).
bool is_rim_hook(const Partition& outer, const Partition& inner);

// All rim hooks of the given size that can be removed from lambda. The
// removable hooks of size k are in bijection with cells of hook length k.
std::vector<RimHook> rim_hooks_down(const Partition& lambda, int size);

// All rim hooks of the given size that can be added to lambda. The cap
// parameter is advisory only (a hint big callers may pass); it never changes
// the result, which is finite regardless.
std::vector<RimHook> rim_hooks_up(const Partition& lambda, int size,
                                  std::optional<int> cap = std::nullopt);

// All partitions of n in reverse-lexicographic order, e.g.
// partitions_of(3) = [(3), (2,1), (1,1,1)].
std::vector<Partition> partitions_of(int n);

// All partitions of 0..n, graded then reverse-lexicographic.
std::vector<Partition> partitions_up_to(int n);

}  // namespace wappell
