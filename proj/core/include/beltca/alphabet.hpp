#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beltca {

using Symbol = std::uint32_t;

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

/// Finite symbol set with a designated zero.
///
/// Symbols are the indices 0..size()-1. Every symbol carries a text label
/// (the decimal index unless given). A product alphabet stores a tuple as
/// mixed-radix digits with track 0 least significant; products are flattened,
/// so tracks are always atomic factors.
class Alphabet {
 public:
  static AlphabetRef plain(std::uint32_t size, Symbol zero = 0);
  /// `description` overrides the default `labels(...)` text form.
  static AlphabetRef labelled(std::vector<std::string> labels, Symbol zero = 0, std::string description = {});
  static AlphabetRef product(const std::vector<AlphabetRef>& factors);

  std::uint32_t size() const { return size_; }
  Symbol zero() const { return zero_; }
  /// Text form accepted by parse_alphabet().
  const std::string& description() const { return description_; }
  bool contains(Symbol s) const { return s < size_; }

  const std::string& label(Symbol s) const;
  /// Label lookup; also accepts `#<index>`.
  std::optional<Symbol> find(std::string_view text) const;

  bool has_tracks() const { return !tracks_.empty(); }
  std::size_t track_count() const { return tracks_.size(); }
  const AlphabetRef& track(std::size_t t) const { return tracks_.at(t); }

  Symbol track_value(Symbol s, std::size_t t) const;
  Symbol with_track(Symbol s, std::size_t t, Symbol v) const;
  Symbol encode(std::span<const Symbol> values) const;
  std::vector<Symbol> decode(Symbol s) const;

  /// Tracks [first, first+count) read as one symbol of their sub-product.
  Symbol track_range_value(Symbol s, std::size_t first, std::size_t count) const;
  Symbol with_track_range(Symbol s, std::size_t first, std::size_t count, Symbol v) const;
  std::uint32_t track_range_size(std::size_t first, std::size_t count) const;

  bool operator==(const Alphabet& other) const;

 private:
  Alphabet() = default;
  void check_track(std::size_t t) const;

  std::uint32_t size_ = 0;
  Symbol zero_ = 0;
  std::vector<std::string> labels_;
  std::string description_;
  std::vector<AlphabetRef> tracks_;
  std::vector<std::uint32_t> strides_;
};

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);
void require_same_alphabet(const AlphabetRef& a, const AlphabetRef& b, const char* where);

}  // namespace beltca
