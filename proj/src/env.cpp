#include "pdx/env.hpp"

#include <algorithm>

namespace pdx {

std::string recursor_name(const std::string& ind, Sort::Kind target) {
  switch (target) {
    case Sort::Kind::Prop: return ind + "_ind";
    case Sort::Kind::Set: return ind + "_rec";
    default: return ind + "_rect";
  }
}

const ConstInfo* GlobalEnv::lookup(const std::string& name) const {
  auto it = consts_.find(name);
  return it == consts_.end() ? nullptr : &it->second;
}

const InductiveInfo* GlobalEnv::lookup_inductive(const std::string& name) const {
  auto it = inductives_.find(name);
  return it == inductives_.end() ? nullptr : &it->second;
}

const RecursorInfo* GlobalEnv::lookup_recursor(const std::string& name) const {
  auto it = recursors_.find(name);
  return it == recursors_.end() ? nullptr : &it->second;
}

const CtorInfo* GlobalEnv::lookup_ctor(const std::string& name) const {
  auto it = ctors_.find(name);
  return it == ctors_.end() ? nullptr : &it->second;
}

void GlobalEnv::add_const(const std::string& name, ConstInfo info) {
  if (consts_.count(name)) {
    CheckError err(ErrorKind::DuplicateName, "name '" + name + "' is already declared");
    throw err;
  }
  consts_.emplace(name, std::move(info));
  order_.push_back(name);
}

void GlobalEnv::add_inductive_meta(const std::string& name, InductiveInfo info) {
  inductives_[name] = std::move(info);
}

void GlobalEnv::add_recursor_meta(const std::string& name, RecursorInfo info) {
  recursors_[name] = std::move(info);
}

void GlobalEnv::add_ctor_meta(const std::string& name, CtorInfo info) {
  ctors_[name] = std::move(info);
}

void GlobalEnv::remove_const(const std::string& name) {
  consts_.erase(name);
  inductives_.erase(name);
  recursors_.erase(name);
  ctors_.erase(name);
  order_.erase(std::remove(order_.begin(), order_.end(), name), order_.end());
}

void GlobalEnv::replace_const(const std::string& name, ConstInfo info) {
  consts_[name] = std::move(info);
}

std::vector<std::string> GlobalEnv::visible_section_vars() const {
  std::vector<std::string> out;
  for (const auto& frame : sections_) {
    for (const auto& v : frame.vars) out.push_back(v);
  }
  return out;
}

LevelId GlobalEnv::fresh_type_level(const Origin& origin) {
  LevelId l = graph_.fresh_level(origin);
  if (profile_->is_cic() && profile_->cumulativity) {
    graph_.add_constraint(Constraint{kLevelSet, ConstraintKind::Le, l,
                                     Origin{origin.file, origin.line,
                                            "Set sits below every Type level"}});
  }
  return l;
}

void GlobalEnv::require_constraint(const Constraint& c) {
  if (auto report = graph_.add_constraint(c)) {
    CheckError err(ErrorKind::UniverseInconsistency,
                   "universe inconsistency:\n" + report->render(graph_));
    err.cycle = std::move(*report);
    throw err;
  }
}

}  // namespace pdx
