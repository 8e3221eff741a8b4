#include <fstream>
#include <sstream>

#include "pdx/corpus.hpp"

namespace pdx {

bool FileReport::all_accepted() const {
  if (!parse_ok) return false;
  for (const auto& d : decls) {
    if (!d.accepted) return false;
  }
  return true;
}

const DeclOutcome* FileReport::find(const std::string& name) const {
  for (const auto& d : decls) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

namespace {

std::string command_display_name(const Vernacular& cmd) {
  switch (cmd.kind) {
    case Vernacular::Kind::Check:
      return "Check@" + std::to_string(cmd.pos.line);
    case Vernacular::Kind::Normalize:
      return "Normalize@" + std::to_string(cmd.pos.line);
    default:
      return cmd.name;
  }
}

// Resolve binder groups progressively, extending `locals`.
std::vector<Binder> resolve_binders(GlobalEnv& env, std::vector<std::string>& locals,
                                    const std::vector<BinderGroup>& groups) {
  std::vector<Binder> out;
  for (const auto& g : groups) {
    for (const auto& n : g.names) {
      TermPtr ty = resolve(env, locals, g.type);
      out.push_back(Binder{n, ty});
      locals.push_back(n);
    }
  }
  return out;
}

void run_command(GlobalEnv& env, const Vernacular& cmd, const CheckOptions& opts,
                 DeclOutcome& outcome) {
  std::vector<std::string> locals;
  switch (cmd.kind) {
    case Vernacular::Kind::Definition: {
      std::vector<Binder> binders = resolve_binders(env, locals, cmd.binders);
      TermPtr type;
      if (cmd.type) {
        type = resolve(env, locals, cmd.type);
        for (std::size_t i = binders.size(); i-- > 0;)
          type = mk_pi(binders[i].hint, binders[i].type, type);
      }
      TermPtr body = resolve(env, locals, cmd.body);
      for (std::size_t i = binders.size(); i-- > 0;)
        body = mk_lam(binders[i].hint, binders[i].type, body);
      declare_definition(env, cmd.name, type, body, cmd.opaque);
      outcome.rendered_type = print_term(env, env.lookup(cmd.name)->type);
      return;
    }
    case Vernacular::Kind::Inductive: {
      InductiveDecl decl;
      decl.name = cmd.name;
      decl.params = resolve_binders(env, locals, cmd.params);
      decl.arity = resolve(env, locals, cmd.arity);
      // The constructors mention the inductive; give the name a placeholder
      // entry just for resolution, then declare properly.
      ConstInfo placeholder;
      placeholder.kind = ConstInfo::Kind::Inductive;
      placeholder.type = mk_prop();
      env.add_const(cmd.name, placeholder);
      for (const auto& [cname, ctype] : cmd.ctors)
        decl.ctors.emplace_back(cname, resolve(env, locals, ctype));
      env.remove_const(cmd.name);
      declare_inductive(env, decl);
      outcome.rendered_type = print_term(env, env.lookup(cmd.name)->type);
      return;
    }
    case Vernacular::Kind::Section:
      begin_section(env, cmd.name);
      return;
    case Vernacular::Kind::End:
      end_section(env, cmd.name);
      return;
    case Vernacular::Kind::Variable: {
      TermPtr type = resolve(env, locals, cmd.type);
      declare_variable(env, cmd.name, type, cmd.binder_kind);
      outcome.rendered_type = print_term(env, type);
      return;
    }
    case Vernacular::Kind::Check: {
      TermPtr t = resolve(env, locals, cmd.body);
      TermPtr ty = infer_type(env, {}, t);
      outcome.info = print_term(env, ty);
      outcome.rendered_type = outcome.info;
      return;
    }
    case Vernacular::Kind::Normalize: {
      TermPtr t = resolve(env, locals, cmd.body);
      infer_type(env, {}, t);  // only well-typed terms are normalized
      std::uint64_t fuel = cmd.fuel.value_or(opts.fuel);
      std::ostringstream trace;
      auto cb = opts.trace
                    ? std::function<void(std::uint64_t, StepKind, const std::string&)>(
                          [&trace](std::uint64_t n, StepKind k, const std::string& h) {
                            const char* kind = k == StepKind::Beta    ? "beta"
                                               : k == StepKind::Delta ? "delta"
                                                                      : "iota";
                            trace << "  step " << n << " " << kind;
                            if (!h.empty()) trace << " " << h;
                            trace << "\n";
                          })
                    : nullptr;
      NormalizationResult r = normalize(env, t, fuel, cb);
      std::ostringstream info;
      if (r.normal)
        info << "normal form after " << r.steps
             << " steps: " << print_term(env, r.term);
      else
        info << "fuel exhausted after " << r.steps << " steps";
      if (opts.trace) info << "\n" << trace.str();
      outcome.info = info.str();
      return;
    }
  }
}

}  // namespace

FileReport check_text(GlobalEnv& env, const std::string& text, const std::string& path,
                      const CheckOptions& opts) {
  FileReport report;
  report.path = path;
  std::vector<Vernacular> cmds;
  try {
    cmds = parse_file(text, path);
  } catch (const CheckError& err) {
    report.parse_ok = false;
    report.parse_error = err.detail;
    return report;
  }
  for (const auto& cmd : cmds) {
    DeclOutcome outcome;
    outcome.name = command_display_name(cmd);
    outcome.pos = cmd.pos;
    env.current_origin = Origin{path, cmd.pos.line, "while checking " + outcome.name};
    GlobalEnv snapshot = env;
    try {
      run_command(env, cmd, opts, outcome);
      outcome.accepted = true;
    } catch (const CheckError& err) {
      env = snapshot;
      outcome.accepted = false;
      outcome.kind = err.kind;
      outcome.message = err.detail;
      outcome.cycle = err.cycle;
    }
    report.decls.push_back(std::move(outcome));
  }
  return report;
}

FileReport check_file(GlobalEnv& env, const std::string& path, const CheckOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    FileReport report;
    report.path = path;
    report.parse_ok = false;
    report.parse_error = "cannot open file " + path;
    return report;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return check_text(env, buf.str(), path, opts);
}

}  // namespace pdx
