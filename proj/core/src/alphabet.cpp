#include "beltca/alphabet.hpp"

#include <charconv>
#include <stdexcept>

namespace beltca {

AlphabetRef Alphabet::plain(std::uint32_t size, Symbol zero) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return labelled(std::move(labels), zero, "plain(" + std::to_string(size) + (zero ? ";zero=" + std::to_string(zero) : "") + ")");
}

AlphabetRef Alphabet::labelled(std::vector<std::string> labels, Symbol zero, std::string description) {
  if (labels.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  if (zero >= labels.size()) throw std::invalid_argument("zero index out of range");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (l.empty() || l.front() == '#')
      throw std::invalid_argument("bad symbol label '" + l + "'");
    for (char c : l)
      if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n')
        throw std::invalid_argument("bad symbol label '" + l + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (labels[j] == l) throw std::invalid_argument("duplicate symbol label '" + l + "'");
  }
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  a->size_ = static_cast<std::uint32_t>(labels.size());
  a->zero_ = zero;
  if (description.empty()) {
    description = "labels(";
    for (std::size_t i = 0; i < labels.size(); ++i) description += (i ? "," : "") + labels[i];
    if (zero) description += ";zero=" + labels[zero];
    description += ")";
  }
  a->labels_ = std::move(labels);
  a->description_ = std::move(description);
  return a;
}

AlphabetRef Alphabet::product(const std::vector<AlphabetRef>& factors) {
  std::vector<AlphabetRef> flat;
  for (const auto& f : factors) {
    if (!f) throw std::invalid_argument("null factor alphabet");
    if (f->has_tracks())
      flat.insert(flat.end(), f->tracks_.begin(), f->tracks_.end());
    else
      flat.push_back(f);
  }
  if (flat.empty()) throw std::invalid_argument("product of no alphabets");
  if (flat.size() == 1) return flat.front();

  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  std::uint64_t size = 1;
  bool compact = true;
  for (const auto& f : flat) {
    a->strides_.push_back(static_cast<std::uint32_t>(size));
    size *= f->size();
    if (size > (1ull << 31)) throw std::invalid_argument("product alphabet too large");
    for (Symbol s = 0; s < f->size(); ++s) compact = compact && f->label(s).size() == 1;
  }
  a->size_ = static_cast<std::uint32_t>(size);
  a->tracks_ = flat;
  a->description_ = "product(";
  for (std::size_t t = 0; t < flat.size(); ++t) a->description_ += (t ? "," : "") + flat[t]->description();
  a->description_ += ")";
  std::vector<Symbol> zeros;
  for (const auto& f : flat) zeros.push_back(f->zero());
  a->zero_ = a->encode(zeros);
  a->labels_.reserve(a->size_);
  for (Symbol s = 0; s < a->size_; ++s) {
    std::string l;
    for (std::size_t t = 0; t < flat.size(); ++t) {
      if (!compact && t) l += '.';
      l += flat[t]->label(a->track_value(s, t));
    }
    a->labels_.push_back(std::move(l));
  }
  return a;
}

const std::string& Alphabet::label(Symbol s) const {
  if (s >= size_) throw std::out_of_range("symbol out of range");
  return labels_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view text) const {
  if (!text.empty() && text.front() == '#') {
    Symbol v = 0;
    auto [p, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size() || v >= size_) return std::nullopt;
    return v;
  }
  for (Symbol s = 0; s < size_; ++s)
    if (labels_[s] == text) return s;
  return std::nullopt;
}

void Alphabet::check_track(std::size_t t) const {
  if (t >= tracks_.size()) throw std::out_of_range("track index out of range");
}

Symbol Alphabet::track_value(Symbol s, std::size_t t) const {
  check_track(t);
  return (s / strides_[t]) % tracks_[t]->size();
}

Symbol Alphabet::with_track(Symbol s, std::size_t t, Symbol v) const {
  check_track(t);
  Symbol old = (s / strides_[t]) % tracks_[t]->size();
  return s - old * strides_[t] + v * strides_[t];
}

Symbol Alphabet::encode(std::span<const Symbol> values) const {
  if (values.size() != tracks_.size()) throw std::invalid_argument("tuple arity mismatch");
  Symbol s = 0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (values[t] >= tracks_[t]->size()) throw std::invalid_argument("track value out of range");
    s += values[t] * strides_[t];
  }
  return s;
}

std::vector<Symbol> Alphabet::decode(Symbol s) const {
  std::vector<Symbol> out(tracks_.size());
  for (std::size_t t = 0; t < tracks_.size(); ++t) out[t] = (s / strides_[t]) % tracks_[t]->size();
  return out;
}

std::uint32_t Alphabet::track_range_size(std::size_t first, std::size_t count) const {
  if (first + count > tracks_.size()) throw std::out_of_range("track range out of range");
  std::uint32_t n = 1;
  for (std::size_t t = first; t < first + count; ++t) n *= tracks_[t]->size();
  return n;
}

Symbol Alphabet::track_range_value(Symbol s, std::size_t first, std::size_t count) const {
  return (s / strides_.at(first)) % track_range_size(first, count);
}

Symbol Alphabet::with_track_range(Symbol s, std::size_t first, std::size_t count, Symbol v) const {
  std::uint32_t n = track_range_size(first, count);
  Symbol old = (s / strides_[first]) % n;
  return s - old * strides_[first] + v * strides_[first];
}

bool Alphabet::operator==(const Alphabet& o) const {
  if (size_ != o.size_ || zero_ != o.zero_ || labels_ != o.labels_) return false;
  if (tracks_.size() != o.tracks_.size()) return false;
  for (std::size_t t = 0; t < tracks_.size(); ++t)
    if (!(*tracks_[t] == *o.tracks_[t])) return false;
  return true;
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_alphabet(const AlphabetRef& a, const AlphabetRef& b, const char* where) {
  if (!same_alphabet(a, b)) throw std::invalid_argument(std::string(where) + ": alphabet mismatch");
}

}  // namespace beltca
