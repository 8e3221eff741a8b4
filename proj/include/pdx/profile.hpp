// Theory profiles: which sorts exist, the PTS axioms and product rules,
// impredicativity, stratification, and the elimination policy.
#ifndef PDX_PROFILE_HPP
#define PDX_PROFILE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pdx/term.hpp"

namespace pdx {

struct Profile {
  enum class Family { CIC, SystemU };

  std::string name;
  Family family = Family::CIC;
  bool stratified = true;        // false = type-in-type
  bool impredicative_set = false;
  bool cumulativity = true;
  bool singleton_elimination = true;

  // SystemU product rules (s1, s2, s3): a product over a domain in s1 with
  // codomain in s2 lives in s3.  Empty for CIC profiles.
  std::vector<std::array<Sort::Kind, 3>> rules;

  bool is_cic() const { return family == Family::CIC; }
  std::optional<Sort::Kind> rule_for(Sort::Kind domain, Sort::Kind codomain) const;
};

// Built-in profiles: cic, cic-impredicative-set, type-in-type, system-u,
// system-u-minus, plus the test profile cic-no-singleton-elim.
const Profile* find_profile(const std::string& name);
std::vector<std::string> profile_names();

}  // namespace pdx

#endif
