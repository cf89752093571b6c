#include "beltca/block_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace beltca {

int Window::radius() const { return std::max(std::abs(left), std::abs(right)); }

SlidingBlockCode::SlidingBlockCode(AlphabetRef alphabet, Window window, Rule rule)
    : alphabet_(std::move(alphabet)), window_(window), rule_(std::move(rule)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (window_.left > window_.right) throw std::invalid_argument("empty window");
  if (!rule_) throw std::invalid_argument("null rule");
}

SlidingBlockCode SlidingBlockCode::from_table(AlphabetRef alphabet, Window window,
                                              std::vector<Symbol> table) {
  std::uint64_t expected = 1;
  for (int i = 0; i < window.size(); ++i) {
    expected *= alphabet->size();
    if (expected > (1ull << 32)) throw std::invalid_argument("table too large");
  }
  if (table.size() != expected) throw std::invalid_argument("table size does not match window");
  for (Symbol s : table)
    if (!alphabet->contains(s)) throw std::invalid_argument("table entry out of range");
  auto shared = std::make_shared<const std::vector<Symbol>>(std::move(table));
  std::uint32_t q = alphabet->size();
  SlidingBlockCode code(alphabet, window, [shared, q](std::span<const Symbol> w) {
    std::uint64_t idx = 0;
    for (Symbol s : w) idx = idx * q + s;
    return (*shared)[idx];
  });
  code.table_ = shared;
  return code;
}

SlidingBlockCode SlidingBlockCode::identity(AlphabetRef alphabet) {
  return SlidingBlockCode(std::move(alphabet), {0, 0}, [](std::span<const Symbol> w) { return w[0]; });
}

SlidingBlockCode SlidingBlockCode::shift(AlphabetRef alphabet, int k) {
  return SlidingBlockCode(std::move(alphabet), {k, k}, [](std::span<const Symbol> w) { return w[0]; });
}

SlidingBlockCode SlidingBlockCode::cellwise(AlphabetRef alphabet, std::vector<Symbol> map) {
  if (map.size() != alphabet->size()) throw std::invalid_argument("cellwise map size mismatch");
  return from_table(std::move(alphabet), {0, 0}, std::move(map));
}

Symbol SlidingBlockCode::local(std::span<const Symbol> w) const {
  if (static_cast<int>(w.size()) != window_.size()) throw std::invalid_argument("window size mismatch");
  return rule_(w);
}

void SlidingBlockCode::apply_cyclic(std::span<const Symbol> in, std::span<Symbol> out, int dilation) const {
  const auto n = static_cast<long>(in.size());
  if (out.size() != in.size()) throw std::invalid_argument("output size mismatch");
  if (n == 0) return;
  const int w = window_.size();
  std::vector<Symbol> buf(static_cast<std::size_t>(w));
  for (long i = 0; i < n; ++i) {
    for (int j = 0; j < w; ++j) {
      long p = (i + static_cast<long>(dilation) * (window_.left + j)) % n;
      if (p < 0) p += n;
      buf[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(p)];
    }
    out[static_cast<std::size_t>(i)] = rule_(buf);
  }
}

PeriodicConfig SlidingBlockCode::apply(const PeriodicConfig& x) const {
  require_same_alphabet(alphabet_, x.alphabet(), "apply_periodic");
  std::vector<Symbol> out(x.period());
  apply_cyclic(x.cells(), out);
  return PeriodicConfig(x.alphabet(), std::move(out));
}

bool SlidingBlockCode::maps_zero_to_zero() const {
  std::vector<Symbol> w(static_cast<std::size_t>(window_.size()), alphabet_->zero());
  return rule_(w) == alphabet_->zero();
}

FiniteConfig SlidingBlockCode::apply(const FiniteConfig& x) const {
  require_same_alphabet(alphabet_, x.alphabet(), "apply_finite");
  if (!maps_zero_to_zero()) throw std::invalid_argument("apply_finite: code does not fix zero");
  if (x.is_zero()) return x;
  const long from = x.offset() - window_.right;
  const long to = x.end() - window_.left;
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(to - from));
  std::vector<Symbol> buf(static_cast<std::size_t>(window_.size()));
  for (long i = from; i < to; ++i) {
    for (int j = 0; j < window_.size(); ++j) buf[static_cast<std::size_t>(j)] = x.at(i + window_.left + j);
    out.push_back(rule_(buf));
  }
  return FiniteConfig(x.alphabet(), from, std::move(out));
}

SlidingBlockCode SlidingBlockCode::widened(Window w) const {
  if (w.left > window_.left || w.right < window_.right) throw std::invalid_argument("widened: window shrinks");
  if (w.left == window_.left && w.right == window_.right) return *this;
  auto rule = rule_;
  const auto skip = static_cast<std::size_t>(window_.left - w.left);
  const auto len = static_cast<std::size_t>(window_.size());
  return SlidingBlockCode(alphabet_, w, [rule, skip, len](std::span<const Symbol> s) {
    return rule(s.subspan(skip, len));
  });
}

std::optional<std::uint64_t> window_count(const SlidingBlockCode& code, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (int i = 0; i < code.window().size(); ++i) {
    n *= code.alphabet()->size();
    if (n > cap) return std::nullopt;
  }
  return n;
}

namespace {
// Odometer over all windows; `visit` returns false to stop.
template <class F>
void for_each_window(std::uint32_t q, std::size_t w, F visit) {
  std::vector<Symbol> buf(w, 0);
  while (true) {
    if (!visit(std::span<const Symbol>(buf))) return;
    std::size_t i = w;
    while (i > 0) {
      --i;
      if (++buf[i] < q) break;
      buf[i] = 0;
      if (i == 0) return;
    }
    if (w == 0) return;
  }
}
}  // namespace

std::optional<SlidingBlockCode> SlidingBlockCode::tabulate(std::uint64_t max_entries) const {
  if (table_) return *this;
  auto n = window_count(*this, max_entries);
  if (!n) return std::nullopt;
  std::vector<Symbol> table;
  table.reserve(*n);
  for_each_window(alphabet_->size(), static_cast<std::size_t>(window_.size()),
                  [&](std::span<const Symbol> w) {
                    table.push_back(rule_(w));
                    return true;
                  });
  return from_table(alphabet_, window_, std::move(table));
}

SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g) {
  require_same_alphabet(f.alphabet(), g.alphabet(), "compose");
  const Window wf = f.window(), wg = g.window();
  const Window w{wf.left + wg.left, wf.right + wg.right};
  const auto fs = static_cast<std::size_t>(wf.size());
  const auto gs = static_cast<std::size_t>(wg.size());
  return SlidingBlockCode(f.alphabet(), w, [f, g, fs, gs](std::span<const Symbol> s) {
    std::vector<Symbol> mid(fs);
    for (std::size_t j = 0; j < fs; ++j) mid[j] = g.local(s.subspan(j, gs));
    return f.local(mid);
  });
}

IdentityCheck is_identity(const SlidingBlockCode& code, std::uint64_t budget) {
  IdentityCheck out;
  const Window w = code.window();
  const Window wide{std::min(w.left, 0), std::max(w.right, 0)};
  SlidingBlockCode c = code.widened(wide);
  auto n = window_count(c, budget);
  if (!n) {
    out.verdict = IdentityVerdict::BudgetExceeded;
    return out;
  }
  const auto centre = static_cast<std::size_t>(-wide.left);
  out.verdict = IdentityVerdict::Identity;
  for_each_window(c.alphabet()->size(), static_cast<std::size_t>(wide.size()),
                  [&](std::span<const Symbol> s) {
                    ++out.windows_checked;
                    if (c.local(s) != s[centre]) {
                      out.verdict = IdentityVerdict::NotIdentity;
                      out.witness.assign(s.begin(), s.end());
                      return false;
                    }
                    return true;
                  });
  return out;
}

}  // namespace beltca
