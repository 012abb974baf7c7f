#include "skewlines/triple_table.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "skewlines/error.hpp"

namespace skewlines {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TripleTable::TripleTable(int n) : n_(n), signs_(static_cast<std::size_t>(binomial(n, 3)), 1) {}

TripleTable TripleTable::from_signs(int n, std::vector<std::int8_t> signs) {
  if (n < 0 || static_cast<std::int64_t>(signs.size()) != binomial(n, 3)) {
    throw Error(ErrorCode::InvalidTable, "expected " + std::to_string(binomial(n, 3)) +
                                             " entries, got " + std::to_string(signs.size()));
  }
  for (auto s : signs) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidTable, "entries must be +1 or -1");
  }
  TripleTable t(n, std::move(signs));
  if (auto bad = t.lemma_violation()) {
    throw Error(ErrorCode::InvalidTable, "four-line product identity fails",
                {(*bad)[0] + 1, (*bad)[1] + 1, (*bad)[2] + 1, (*bad)[3] + 1});
  }
  return t;
}

TripleTable TripleTable::from_configuration(const Configuration& c) {
  const int n = c.size();
  // Pairwise signs once; orientation choice cancels in each triple product.
  std::vector<int> pair(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pair[static_cast<std::size_t>(i * n + j)] = lk_pair(c.line(i), c.line(j));
  }
  std::vector<std::int8_t> signs;
  signs.reserve(static_cast<std::size_t>(binomial(n, 3)));
  for_each_triple(n, [&](int i, int j, int k) {
    signs.push_back(static_cast<std::int8_t>(pair[static_cast<std::size_t>(i * n + j)] *
                                             pair[static_cast<std::size_t>(i * n + k)] *
                                             pair[static_cast<std::size_t>(j * n + k)]));
  });
  return TripleTable(n, std::move(signs));
}

int TripleTable::at(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  return signs_[static_cast<std::size_t>(triple_rank(i, j, k))];
}

std::optional<std::array<int, 4>> TripleTable::lemma_violation() const {
  for (int d = 3; d < n_; ++d) {
    for (int c = 2; c < d; ++c) {
      for (int b = 1; b < c; ++b) {
        for (int a = 0; a < b; ++a) {
          if (at(a, b, c) * at(a, b, d) * at(a, c, d) * at(b, c, d) != 1) {
            return std::array<int, 4>{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

TripleTable TripleTable::negated() const {
  auto s = signs_;
  for (auto& e : s) e = static_cast<std::int8_t>(-e);
  return TripleTable(n_, std::move(s));
}

TripleTable TripleTable::relabeled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw Error(ErrorCode::SizeMismatch, "relabeling has wrong length");
  }
  std::vector<std::int8_t> s(signs_.size());
  for_each_triple(n_, [&](int i, int j, int k) {
    int a = new_label[static_cast<std::size_t>(i)];
    int b = new_label[static_cast<std::size_t>(j)];
    int c = new_label[static_cast<std::size_t>(k)];
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    s[static_cast<std::size_t>(triple_rank(a, b, c))] = signs_[static_cast<std::size_t>(triple_rank(i, j, k))];
  });
  return TripleTable(n_, std::move(s));
}

TripleTable TripleTable::restricted(std::span<const int> labels) const {
  const int m = static_cast<int>(labels.size());
  std::vector<std::int8_t> s;
  s.reserve(static_cast<std::size_t>(binomial(m, 3)));
  for_each_triple(m, [&](int i, int j, int k) {
    s.push_back(static_cast<std::int8_t>(at(labels[static_cast<std::size_t>(i)],
                                            labels[static_cast<std::size_t>(j)],
                                            labels[static_cast<std::size_t>(k)])));
  });
  return TripleTable(m, std::move(s));
}

std::uint64_t TripleTable::key() const {
  if (n_ > 8) throw Error(ErrorCode::TooLarge, "table key needs n <= 8");
  std::uint64_t k = 0;
  for (std::size_t r = 0; r < signs_.size(); ++r) {
    if (signs_[r] < 0) k |= std::uint64_t{1} << r;
  }
  return k;
}

}  // namespace skewlines
