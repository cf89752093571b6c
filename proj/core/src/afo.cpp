#include "beltca/afo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "beltca/enumerate.hpp"

namespace beltca {

namespace {

void validate_words(const Alphabet& a, const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("safe word set needs at least one word");
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (w.empty()) throw std::invalid_argument("safe word set: empty word");
    for (Symbol s : w)
      if (!a.contains(s)) throw std::invalid_argument("safe word set: symbol out of range");
    if (w.front() == a.zero() || w.back() == a.zero())
      throw std::invalid_argument("safe word set: words must begin and end with a nonzero symbol");
    for (std::size_t j = 0; j < i; ++j)
      if (words[j] == w) throw std::invalid_argument("safe word set: duplicate word");
  }
}

std::size_t max_len(const std::vector<Word>& words) {
  std::size_t m = 0;
  for (const auto& w : words) m = std::max(m, w.size());
  return m;
}

std::vector<Symbol> placed(const Alphabet& a, const Word& w, std::size_t start, std::size_t n) {
  std::vector<Symbol> tape(n, a.zero());
  for (std::size_t q = 0; q < w.size(); ++q) tape[(start + q) % n] = w[q];
  return tape;
}

}  // namespace

SafetyResult check_safety(const Alphabet& alphabet, const std::vector<Word>& words, std::size_t n0) {
  validate_words(alphabet, words);
  const std::size_t m = max_len(words);
  if (m > n0) throw std::invalid_argument("safe word set: a word is longer than the threshold");
  const std::size_t top = std::max(n0, 2 * m - 1);
  for (std::size_t n = n0; n <= top; ++n) {
    std::map<std::vector<Symbol>, std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t p = 0; p < n; ++p) {
        auto tape = placed(alphabet, words[i], p, n);
        auto [it, fresh] = seen.emplace(tape, std::make_pair(i, p));
        if (!fresh)
          return {false, SafetyCollision{n, it->second.first, it->second.second, i, p, std::move(tape)}};
      }
    }
  }
  return {true, std::nullopt};
}

std::size_t minimal_safe_threshold(const Alphabet& alphabet, const std::vector<Word>& words) {
  validate_words(alphabet, words);
  const std::size_t m = max_len(words);
  for (std::size_t n0 = m;; ++n0)
    if (check_safety(alphabet, words, n0).safe) return n0;
}

SafeWordSet::SafeWordSet(AlphabetRef alphabet, std::vector<Word> words, std::size_t threshold)
    : alphabet_(std::move(alphabet)), words_(std::move(words)), threshold_(threshold) {
  if (threshold_ == 0) throw std::invalid_argument("safe word set: threshold must be positive");
  auto r = check_safety(*alphabet_, words_, threshold_);
  if (!r.safe) {
    const auto& c = *r.collision;
    throw std::invalid_argument("word set is not " + std::to_string(threshold_) + "-safe: placements (" +
                                std::to_string(c.word_a + 1) + "," + std::to_string(c.start_a) + ") and (" +
                                std::to_string(c.word_b + 1) + "," + std::to_string(c.start_b) +
                                ") coincide at length " + std::to_string(c.period));
  }
}

std::size_t SafeWordSet::max_length() const { return max_len(words_); }

std::optional<Placement> find_placement(const SafeWordSet& set, std::span<const Symbol> tape) {
  const std::size_t n = tape.size();
  if (n < set.threshold()) return std::nullopt;
  const Symbol z = set.alphabet()->zero();
  std::size_t nonzero = 0;
  for (Symbol s : tape) nonzero += s != z;
  if (nonzero == 0) return std::nullopt;
  const auto& words = set.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (w.size() > n) continue;
    std::size_t wz = 0;
    for (Symbol s : w) wz += s != z;
    if (wz != nonzero) continue;
    for (std::size_t p = 0; p < n; ++p) {
      if (tape[p] != w.front()) continue;
      bool ok = true;
      for (std::size_t q = 1; q < w.size() && ok; ++q) ok = tape[(p + q) % n] == w[q];
      if (ok) return Placement{i, p};
    }
  }
  return std::nullopt;
}

AfoSpec::AfoSpec(SafeWordSet safe, std::vector<std::size_t> pi, std::vector<long> offsets, std::string name)
    : safe_(std::move(safe)), pi_(std::move(pi)), offsets_(std::move(offsets)), name_(std::move(name)) {
  const std::size_t k = safe_.words().size();
  if (pi_.size() != k || offsets_.size() != k) throw std::invalid_argument("AFO: pi and offsets need one entry per word");
  std::vector<bool> hit(k, false);
  for (auto v : pi_) {
    if (v >= k || hit[v]) throw std::invalid_argument("AFO: pi is not a permutation");
    hit[v] = true;
  }
}

long AfoSpec::max_abs_offset() const {
  long m = 0;
  for (long o : offsets_) m = std::max(m, o < 0 ? -o : o);
  return m;
}

void AfoSpec::apply(std::span<const Symbol> in, std::span<Symbol> out) const {
  std::copy(in.begin(), in.end(), out.begin());
  auto pl = find_placement(safe_, in);
  if (!pl) return;
  const auto n = static_cast<long>(in.size());
  std::fill(out.begin(), out.end(), alphabet()->zero());
  const auto& w = safe_.words()[pi_[pl->word]];
  long start = (static_cast<long>(pl->start) + offsets_[pl->word]) % n;
  if (start < 0) start += n;
  for (std::size_t q = 0; q < w.size(); ++q) out[(static_cast<std::size_t>(start) + q) % in.size()] = w[q];
}

PeriodicConfig apply_afo(const AfoSpec& afo, const PeriodicConfig& x) {
  require_same_alphabet(afo.alphabet(), x.alphabet(), "apply_afo");
  std::vector<Symbol> out(x.period());
  afo.apply(x.cells(), out);
  return PeriodicConfig(x.alphabet(), std::move(out));
}

AfoSpec afo_inverse(const AfoSpec& afo) {
  const std::size_t k = afo.word_count();
  std::vector<std::size_t> inv(k);
  std::vector<long> off(k);
  for (std::size_t i = 0; i < k; ++i) {
    inv[afo.pi()[i]] = i;
    off[afo.pi()[i]] = -afo.offsets()[i];
  }
  std::string n = afo.name();
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0)
    n.resize(n.size() - 3);
  else
    n += "^-1";
  return AfoSpec(afo.safe(), std::move(inv), std::move(off), std::move(n));
}

std::uint64_t moved_count(const AfoSpec& afo, std::size_t n) {
  if (n < afo.safe().threshold()) return 0;
  std::uint64_t moved = 0;
  const auto& a = *afo.alphabet();
  std::vector<Symbol> out(n);
  for (const auto& w : afo.safe().words()) {
    if (w.size() > n) continue;
    for (std::size_t p = 0; p < n; ++p) {
      auto tape = placed(a, w, p, n);
      afo.apply(tape, out);
      moved += !std::equal(out.begin(), out.end(), tape.begin());
    }
  }
  return moved;
}

AfoSpec doubled(const AfoSpec& afo) {
  std::vector<Word> words;
  const Symbol z = afo.alphabet()->zero();
  for (const auto& w : afo.safe().words()) {
    Word d;
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (q) d.push_back(z);
      d.push_back(w[q]);
    }
    words.push_back(std::move(d));
  }
  std::vector<long> off;
  for (long o : afo.offsets()) off.push_back(2 * o);
  return AfoSpec(SafeWordSet(afo.alphabet(), std::move(words), 2 * afo.safe().threshold()), afo.pi(), std::move(off),
                 afo.name());
}

std::vector<std::size_t> parse_cycle_notation(std::string_view text, std::size_t k) {
  std::vector<std::size_t> pi(k);
  for (std::size_t i = 0; i < k; ++i) pi[i] = i;
  std::vector<bool> used(k, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<std::size_t> cyc;
    while (true) {
      skip();
      if (pos >= text.size()) throw std::invalid_argument("cycle notation: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw std::invalid_argument("cycle notation: expected index");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (v < 1 || v > k) throw std::invalid_argument("cycle notation: index out of range");
      if (used[v - 1]) throw std::invalid_argument("cycle notation: repeated index");
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) pi[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip();
  }
  return pi;
}

std::string format_cycle_notation(const std::vector<std::size_t>& pi) {
  std::string s;
  std::vector<bool> seen(pi.size(), false);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i] || pi[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = pi[j]) {
      if (j != i) s += ' ';
      s += std::to_string(j + 1);
      seen[j] = true;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Generator as_generator(const AfoSpec& afo) {
  AfoSpec inv = afo_inverse(afo);
  return Generator{afo.name(), afo.alphabet(),
                   [afo](std::span<const Symbol> x) {
                     std::vector<Symbol> y(x.size());
                     afo.apply(x, y);
                     return y;
                   },
                   [inv](std::span<const Symbol> x) {
                     std::vector<Symbol> y(x.size());
                     inv.apply(x, y);
                     return y;
                   },
                   false};
}

RetractionCount retraction_count(const std::vector<ProductFactor>& factors, std::size_t n) {
  if (factors.empty()) throw std::invalid_argument("retraction_count: empty product");
  AlphabetRef alpha = std::visit([](const auto& f) { return f.alphabet(); }, factors.front());
  for (const auto& f : factors)
    require_same_alphabet(alpha, std::visit([](const auto& g) { return g.alphabet(); }, f), "retraction_count");
  RetractionCount rc;
  for (const auto& f : factors)
    if (const auto* a = std::get_if<AfoSpec>(&f)) {
      rc.moved_bound += moved_count(*a, n);
      rc.kn_bound += a->word_count() * n;
    }
  std::vector<Symbol> full(n), free(n), tmp(n);
  for_each_word(alpha->size(), n, [&](std::span<const Symbol> x) {
    ++rc.total;
    std::copy(x.begin(), x.end(), full.begin());
    std::copy(x.begin(), x.end(), free.begin());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (const auto* a = std::get_if<Automorphism>(&*it)) {
        a->forward().apply_cyclic(full, tmp);
        full.swap(tmp);
        a->forward().apply_cyclic(free, tmp);
        free.swap(tmp);
      } else {
        std::get<AfoSpec>(*it).apply(full, tmp);
        full.swap(tmp);
      }
    }
    rc.differing += full != free;
    return true;
  });
  return rc;
}

}  // namespace beltca
