#include "wappell/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wappell/error.hpp"

namespace wappell {

Partition::Partition(std::vector<int> parts) {
  parts_.reserve(parts.size());
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition: negative part");
    if (p == 0) continue;
    if (!parts_.empty() && parts_.back() < p) {
      throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    parts_.push_back(p);
    size_ += p;
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // Trim surrounding whitespace.
    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) {
      throw std::invalid_argument("partition: empty part in '" + text + "'");
    }
    const auto e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: cannot parse part '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("partition: cannot parse part '" + token + "'");
    }
    parts.push_back(value);
  }
  return Partition(parts);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition: row index must be positive");
  if (i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  return out.str();
}

Partition conjugate(const Partition& lambda) {
  const auto& parts = lambda.parts();
  if (parts.empty()) return Partition();
  std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
  for (int p : parts) {
    for (int j = 0; j < p; ++j) conj[static_cast<std::size_t>(j)] += 1;
  }
  return Partition(conj);
}

std::vector<Partition> covers_down(const Partition& lambda) {
  std::vector<Partition> result;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool corner =
        (i + 1 == parts.size()) || (parts[i] > parts[i + 1]);
    if (!corner) continue;
    std::vector<int> next(parts);
    next[i] -= 1;
    result.emplace_back(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Partition> covers_up(const Partition& lambda) {
  std::vector<Partition> result;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    const bool addable =
        (i == 0) || (i < parts.size() ? parts[i] < parts[i - 1]
                                      : true);
    if (!addable) continue;
    std::vector<int> next(parts);
    if (i == parts.size()) {
      next.push_back(1);
    } else {
      next[i] += 1;
    }
    result.emplace_back(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

int hook_length(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || i > lambda.length() || j > lambda.part(i)) {
    throw std::invalid_argument("cell not in diagram");
  }
  const Partition conj = conjugate(lambda);
  return lambda.part(i) - j + conj.part(j) - i + 1;
}

Int hook_product(const Partition& lambda) {
  Int prod(1);
  const Partition conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      prod *= lambda.part(i) - j + conj.part(j) - i + 1;
    }
  }
  return prod;
}

std::vector<int> degree_vector(const Partition& lambda) {
  const int r = lambda.length();
  std::vector<int> n(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    n[static_cast<std::size_t>(i - 1)] = lambda.part(r + 1 - i) + i - 1;
  }
  return n;
}

Int vandermonde(const std::vector<int>& n) {
  Int prod(1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      prod *= n[j] - n[i];
    }
  }
  return prod;
}

Int syt_count(const Partition& lambda) {
  const Int h = hook_product(lambda);
  const Int fact = factorial(lambda.size());
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), fact.get_mpz_t(), h.get_mpz_t());
  if (r != 0) {
    throw InternalError("syt_count: hook product does not divide |lambda|!");
  }
  return q;
}

Int skew_syt_count(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return 0;
  // Chain count from inner up to nu, memoized over the interval [inner, outer].
  std::map<Partition, Int> memo;
  memo.emplace(inner, 1);
  // Work grade by grade so every dependency is already present.
  auto count = [&](auto&& self, const Partition& nu) -> Int {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    Int total(0);
    for (const Partition& mu : covers_down(nu)) {
      if (mu.contains(inner)) total += self(self, mu);
    }
    memo.emplace(nu, total);
    return total;
  };
  return count(count, outer);
}

bool is_rim_hook(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  if (outer.size() == inner.size()) return false;
  int first_row = 0, last_row = 0;  // 1-based occupied band
  for (int i = 1; i <= outer.length(); ++i) {
    if (outer.part(i) > inner.part(i)) {
      if (first_row == 0) first_row = i;
      last_row = i;
    }
  }
  for (int i = first_row; i <= last_row; ++i) {
    if (outer.part(i) <= inner.part(i)) return false;  // gap row
  }
  // Adjacent occupied rows must overlap in exactly one column: connectivity
  // demands >= 1 and the no-2x2 condition demands <= 1.
  for (int i = first_row; i < last_row; ++i) {
    if (outer.part(i + 1) != inner.part(i) + 1) return false;
  }
  return true;
}

std::vector<RimHook> rim_hooks_down(const Partition& lambda, int size) {
  if (size < 1) throw std::invalid_argument("rim_hooks_down: size must be positive");
  std::vector<RimHook> result;
  const Partition conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int hook = lambda.part(i) - j + conj.part(j) - i + 1;
      if (hook != size) continue;
      // The rim hook determined by cell (i, j) spans rows i..s where s is the
      // lowest row with a cell in column j.
      const int s = conj.part(j);
      std::vector<int> inner;
      inner.reserve(static_cast<std::size_t>(lambda.length()));
      for (int a = 1; a <= lambda.length(); ++a) {
        if (a < i || a > s) {
          inner.push_back(lambda.part(a));
        } else if (a < s) {
          inner.push_back(lambda.part(a + 1) - 1);
        } else {
          inner.push_back(j - 1);
        }
      }
      result.push_back(RimHook{lambda, Partition(inner), size, s - i});
    }
  }
  std::sort(result.begin(), result.end(), [](const RimHook& a, const RimHook& b) {
    return a.inner < b.inner;
  });
  return result;
}

std::vector<RimHook> rim_hooks_up(const Partition& lambda, int size,
                                  std::optional<int> /*cap: advisory only*/) {
  if (size < 1) throw std::invalid_argument("rim_hooks_up: size must be positive");
  std::vector<RimHook> result;
  const int len = lambda.length();
  // A hook added to lambda occupying rows i..s is forced below its top row:
  // row b in (i, s] extends to lambda_{b-1} + 1. Row i takes the remaining
  // cells. Enumerate the (i, s) band and keep the shapes that stay partitions.
  for (int s = 1; s <= len + size; ++s) {
    for (int i = std::max(1, s - size + 1); i <= s; ++i) {
      // Cells forced into rows (i, s]: telescoping lambda_i - lambda_s + (s-i).
      const int forced = lambda.part(i) - lambda.part(s) + (s - i);
      const int row_i_cells = size - forced;
      if (row_i_cells < 1) continue;
      const int new_row_i = lambda.part(i) + row_i_cells;
      if (i > 1 && new_row_i > lambda.part(i - 1)) continue;
      std::vector<int> outer;
      outer.reserve(static_cast<std::size_t>(std::max(len, s)));
      for (int a = 1; a <= std::max(len, s); ++a) {
        if (a < i || a > s) {
          outer.push_back(lambda.part(a));
        } else if (a == i) {
          outer.push_back(new_row_i);
        } else {
          outer.push_back(lambda.part(a - 1) + 1);
        }
      }
      result.push_back(RimHook{Partition(outer), lambda, size, s - i});
    }
  }
  std::sort(result.begin(), result.end(), [](const RimHook& a, const RimHook& b) {
    return a.outer < b.outer;
  });
  return result;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace wappell
