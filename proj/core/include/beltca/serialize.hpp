#pragma once

#include <string>
#include <string_view>

#include "beltca/config.hpp"

namespace beltca {

// Text forms
//   alphabet : plain(N[;zero=K]) | labels(l1,...,lN[;zero=l]) | product(A,B,...) | belt(A)
//   periodic : [period=N] cells=[c0,c1,...]
//   finite   : offset=K word=[c0,c1,...]
// A cell is a symbol label, or #index for the raw index.

AlphabetRef parse_alphabet(std::string_view text);

std::string format_periodic(const PeriodicConfig& x);
PeriodicConfig parse_periodic(std::string_view text, const AlphabetRef& alphabet);

std::string format_finite(const FiniteConfig& x);
FiniteConfig parse_finite(std::string_view text, const AlphabetRef& alphabet);

}  // namespace beltca
