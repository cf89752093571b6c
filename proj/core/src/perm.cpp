#include "beltca/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace beltca {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw std::invalid_argument("bad cycle notation");
      used[c[i]] = true;
      p.img_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[o.img_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Permutation r = identity(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ')';
  }
  return s;
}

Permutation conjugate(const Permutation& x, const Permutation& y) { return y.inverse() * x * y; }

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

PermGroup::PermGroup(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    add_generator(g);
  }
}

void PermGroup::rebuild_orbit(Level& lv) const {
  lv.transversal_idx.assign(degree_, -1);
  lv.transversal.clear();
  lv.transversal.push_back(Permutation::identity(degree_));
  lv.transversal_idx[lv.base] = 0;
  for (std::size_t i = 0; i < lv.transversal.size(); ++i) {
    const std::uint32_t p = lv.transversal[i](lv.base);
    for (const auto& s : lv.strong) {
      const std::uint32_t q = s(p);
      if (lv.transversal_idx[q] < 0) {
        lv.transversal_idx[q] = static_cast<std::int64_t>(lv.transversal.size());
        lv.transversal.push_back(s * lv.transversal[i]);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(const Permutation& g, std::size_t from) const {
  Permutation h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    const std::uint32_t p = h(lv.base);
    if (lv.transversal_idx[p] < 0) return {h, i};
    h = lv.transversal[static_cast<std::size_t>(lv.transversal_idx[p])].inverse() * h;
  }
  return {h, levels_.size()};
}

void PermGroup::insert_strong(const Permutation& h, std::size_t j) {
  // h fixes the base points of levels < j; it becomes a strong generator of
  // every level up to and including j.
  if (j == levels_.size()) {
    Level lv;
    std::uint32_t moved = 0;
    while (h(moved) == moved) ++moved;
    lv.base = moved;
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = 0; l <= j; ++l) {
    bool fixes = true;
    for (std::size_t b = 0; b < l; ++b) fixes = fixes && h(levels_[b].base) == levels_[b].base;
    if (fixes) {
      levels_[l].strong.push_back(h);
      rebuild_orbit(levels_[l]);
    }
  }
}

void PermGroup::close_from(std::size_t start) {
  // Standard deterministic Schreier-Sims: check all Schreier generators at
  // level i, descending once a level is complete.
  long i = static_cast<long>(start);
  while (i >= 0) {
    auto& lv = levels_[static_cast<std::size_t>(i)];
    bool changed = false;
    for (std::size_t t = 0; !changed && t < lv.transversal.size(); ++t) {
      const Permutation& u = lv.transversal[t];
      const std::uint32_t p = u(lv.base);
      for (std::size_t si = 0; !changed && si < lv.strong.size(); ++si) {
        const Permutation& s = lv.strong[si];
        const std::uint32_t q = s(p);
        const auto& uq = lv.transversal[static_cast<std::size_t>(lv.transversal_idx[q])];
        Permutation schreier = uq.inverse() * s * u;
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(schreier, static_cast<std::size_t>(i) + 1);
        if (!h.is_identity()) {
          insert_strong(h, j);
          i = static_cast<long>(j);
          changed = true;
        }
      }
    }
    if (!changed) --i;
  }
}

void PermGroup::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  auto [h, j] = strip(g, 0);
  gens_.push_back(g);
  if (h.is_identity()) return;
  insert_strong(h, j);
  close_from(j);
}

std::optional<std::uint64_t> PermGroup::order() const {
  unsigned __int128 o = 1;
  for (const auto& lv : levels_) {
    o *= lv.transversal.size();
    if (o > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(o);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g, 0).first.is_identity();
}

bool PermGroup::is_trivial() const { return levels_.empty(); }

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  PermGroup h(g.degree(), {});
  std::vector<Permutation> queue;
  for (const auto& x : s)
    if (!h.contains(x)) {
      h.add_generator(x);
      queue.push_back(x);
    }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& y : g.generators()) {
      for (const auto& c : {conjugate(queue[i], y), conjugate(queue[i], y.inverse())}) {
        if (!h.contains(c)) {
          h.add_generator(c);
          queue.push_back(c);
        }
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g, std::size_t max_steps) {
  std::vector<PermGroup> out{g};
  for (std::size_t k = 0; k < max_steps && !out.back().is_trivial(); ++k) {
    PermGroup next = derived_subgroup(out.back());
    bool same = next.order() == out.back().order();
    out.push_back(std::move(next));
    if (same) break;
  }
  return out;
}

}  // namespace beltca
