#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlcm/semigroup.hpp"
#include "rlcm/star_calculus.hpp"
#include "rlcm/zappa_szep.hpp"

namespace rlcm {

class UnknownSelector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// free:k | nat | frac | nxn | zxz | bs:c,d | ftheta:m,n | zs:<name>, where
/// <name> is bs:c,d | nxn | zxz | odo:n | ftheta:m,n.
SemigroupDescriptor semigroup_for(std::string_view selector);

/// Zappa-Szep data behind a zs:<name> selector; nullopt for plain selectors.
std::optional<ZSDescriptor> zs_for(std::string_view selector);

/// The t(...) and s(...) conventions for star-calculus words.
WordContext word_context(std::string_view selector);

Element parse_element(std::string_view selector, std::string_view text);

/// Every selector exercised by the round-trip checks.
std::vector<std::string> registered_selectors();

/// The Zappa-Szep example selectors.
std::vector<std::string> zs_example_selectors();

}  // namespace rlcm
