#include "pdx/profile.hpp"

namespace pdx {

std::optional<Sort::Kind> Profile::rule_for(Sort::Kind domain, Sort::Kind codomain) const {
  for (const auto& r : rules) {
    if (r[0] == domain && r[1] == codomain) return r[2];
  }
  return std::nullopt;
}

namespace {

using K = Sort::Kind;

std::vector<Profile> build_profiles() {
  std::vector<Profile> ps;

  Profile cic;
  cic.name = "cic";
  cic.family = Profile::Family::CIC;
  ps.push_back(cic);

  Profile imp = cic;
  imp.name = "cic-impredicative-set";
  imp.impredicative_set = true;
  ps.push_back(imp);

  Profile tit = cic;
  tit.name = "type-in-type";
  tit.stratified = false;
  ps.push_back(tit);

  Profile nosing = cic;
  nosing.name = "cic-no-singleton-elim";
  nosing.singleton_elimination = false;
  ps.push_back(nosing);

  Profile uminus;
  uminus.name = "system-u-minus";
  uminus.family = Profile::Family::SystemU;
  uminus.cumulativity = false;
  uminus.rules = {{K::Star, K::Star, K::Star},
                  {K::Box, K::Star, K::Star},
                  {K::Box, K::Box, K::Box},
                  {K::Triangle, K::Box, K::Box}};
  ps.push_back(uminus);

  Profile u = uminus;
  u.name = "system-u";
  u.rules.push_back({K::Triangle, K::Star, K::Star});
  ps.push_back(u);

  return ps;
}

const std::vector<Profile>& profiles() {
  static const std::vector<Profile> ps = build_profiles();
  return ps;
}

}  // namespace

const Profile* find_profile(const std::string& name) {
  for (const auto& p : profiles()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::vector<std::string> profile_names() {
  std::vector<std::string> names;
  for (const auto& p : profiles()) names.push_back(p.name);
  return names;
}

}  // namespace pdx
