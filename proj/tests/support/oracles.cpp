#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

Tape rotate(const Tape& x, long k) {
  const long n = static_cast<long>(x.size());
  Tape r(x.size());
  for (long i = 0; i < n; ++i) r[i] = x[((i + k) % n + n) % n];
  return r;
}

Tape placed(const Tape& u, std::size_t n, long start) {
  Tape t(n, 0);
  const long N = static_cast<long>(n);
  for (std::size_t i = 0; i < u.size(); ++i) t[((start + static_cast<long>(i)) % N + N) % N] = u[i];
  return t;
}

std::optional<Tape> safety_collision(const std::vector<Tape>& words, std::size_t n) {
  std::map<Tape, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tape t = placed(words[i], n, static_cast<long>(j));
      auto [it, fresh] = seen.emplace(t, std::make_pair(i, j));
      if (!fresh) return t;
    }
  return std::nullopt;
}

bool safe(const std::vector<Tape>& words, std::size_t n0) {
  std::size_t maxlen = 0;
  for (const auto& w : words) maxlen = std::max(maxlen, w.size());
  if (maxlen > n0) return false;
  for (std::size_t n = n0; n <= std::max(n0, 2 * maxlen - 1); ++n)
    if (safety_collision(words, n)) return false;
  return true;
}

Tape afo(const std::vector<Tape>& words, const std::vector<std::size_t>& pi, const std::vector<long>& offsets,
         std::size_t n0, const Tape& x) {
  const std::size_t n = x.size();
  if (n < n0) return x;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (placed(words[i], n, static_cast<long>(j)) == x)
        return placed(words[pi[i]], n, static_cast<long>(j) + offsets[i]);
  return x;
}

Tape block_code(const Tape& x, int left, int right, std::uint32_t q, const std::vector<std::uint32_t>& table) {
  const long n = static_cast<long>(x.size());
  Tape y(x.size());
  for (long i = 0; i < n; ++i) {
    std::uint64_t idx = 0;
    for (int d = left; d <= right; ++d) idx = idx * q + x[((i + d) % n + n) % n];
    y[i] = table.at(idx);
  }
  return y;
}

ZwrZ zwrz(const beltca::GroupWord& w) {
  ZwrZ e;
  // Letters act rightmost first.
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->generator == 0) {
      e.s += it->exponent;
    } else {
      long& v = e.f[-e.s];
      v += it->exponent;
      if (v == 0) e.f.erase(-e.s);
    }
  }
  return e;
}

Lamplighter lamplighter(const beltca::GroupWord& w, std::size_t T, std::size_t F) {
  Lamplighter e;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->generator == T) {
      e.cursor -= it->exponent;
    } else if (it->generator == F) {
      if (std::abs(it->exponent) % 2 == 1 && !e.lamps.erase(e.cursor)) e.lamps.insert(e.cursor);
    } else {
      throw std::invalid_argument("lamplighter oracle: unknown generator");
    }
  }
  return e;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

Perm power(const Perm& a, long e) {
  Perm base = e < 0 ? inverse(a) : a;
  Perm r(a.size());
  std::iota(r.begin(), r.end(), 0u);
  for (long i = 0; i < std::abs(e); ++i) r = compose(base, r);
  return r;
}

bool is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != x) return false;
  return true;
}

std::uint64_t order(const Perm& a) {
  std::uint64_t o = 1;
  Perm p = a;
  while (!is_identity(p)) {
    p = compose(a, p);
    ++o;
  }
  return o;
}

Perm cycle(std::size_t n, const std::vector<std::uint32_t>& points) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

}  // namespace oracle
