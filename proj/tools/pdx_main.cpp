// Command-line front door: check files under a profile, run the corpus
// suite, normalize terms with fuel.
//
// Exit codes: 0 all accepted / all expectations pass, 1 rejection or
// expectation failure, 2 usage, parse or manifest errors.
#include <iostream>

#include "CLI11.hpp"
#include "pdx/corpus.hpp"

namespace {

using namespace pdx;

struct OutputOptions {
  std::string format = "text";
};

void print_decl_line(const FileReport& report, const DeclOutcome& d,
                     const OutputOptions& out) {
  if (out.format == "lines") {
    std::string kind = d.accepted ? "-" : error_kind_name(d.kind);
    std::string digest = d.cycle ? trace_digest(*d.cycle) : "-";
    std::cout << report.path << "\t" << d.name << "\t"
              << (d.accepted ? "ok" : "rejected") << "\t" << kind << "\t" << digest
              << "\n";
    return;
  }
  if (d.accepted) {
    if (!d.info.empty())
      std::cout << "ok " << d.name << ": " << d.info << "\n";
    else if (!d.rendered_type.empty())
      std::cout << "ok " << d.name << " : " << d.rendered_type << "\n";
    else
      std::cout << "ok " << d.name << "\n";
  } else {
    std::cout << "rejected " << d.name << ": " << error_kind_name(d.kind) << "\n";
    if (!d.message.empty()) std::cout << "  " << d.message << "\n";
  }
}

int cmd_check(const std::vector<std::string>& paths, const std::string& profile_name,
              const std::string& corpus_dir, const CheckOptions& opts,
              const OutputOptions& out) {
  const Profile* profile = find_profile(profile_name);
  if (!profile) {
    std::cerr << "unknown profile '" << profile_name << "'\n";
    return 2;
  }
  GlobalEnv env(profile);
  bool any_rejected = false;
  bool target_is_prelude = false;
  for (const auto& p : paths) {
    if (p.size() >= 11 && p.substr(p.size() - 11) == "prelude.pdx")
      target_is_prelude = true;
  }
  if (profile->is_cic() && !target_is_prelude) {
    FileReport prelude = check_file(env, corpus_dir + "/prelude.pdx", opts);
    if (!prelude.all_accepted()) {
      std::cerr << "prelude failed to check: " << corpus_dir << "/prelude.pdx\n";
      if (!prelude.parse_ok) std::cerr << prelude.parse_error << "\n";
      for (const auto& d : prelude.decls) {
        if (!d.accepted)
          std::cerr << "  rejected " << d.name << ": " << d.message << "\n";
      }
      return 2;
    }
  }
  for (const auto& path : paths) {
    FileReport report = check_file(env, path, opts);
    if (!report.parse_ok) {
      std::cerr << report.parse_error << "\n";
      return 2;
    }
    for (const auto& d : report.decls) {
      print_decl_line(report, d, out);
      if (!d.accepted) any_rejected = true;
    }
  }
  return any_rejected ? 1 : 0;
}

int cmd_corpus(const std::string& dir, const std::string& tier,
               const CheckOptions& opts, const OutputOptions& out) {
  std::vector<CorpusEntry> entries;
  try {
    entries = load_corpus(dir);
  } catch (const CheckError& err) {
    std::cerr << err.detail << "\n";
    return 2;
  }
  bool mandatory_failed = false;
  bool requested_failed = false;
  std::size_t widest = 0;
  for (const auto& e : entries)
    widest = std::max(widest, e.path.size() + e.profile.size());
  for (const auto& entry : entries) {
    bool requested = tier == "all" || entry.tier == tier;
    if (!requested && entry.tier == "stretch") continue;
    EntryResult r;
    try {
      r = evaluate_entry(entry, dir, opts);
    } catch (const CheckError& err) {
      std::cerr << err.detail << "\n";
      return 2;
    }
    if (!r.passed) {
      if (entry.tier == "mandatory") mandatory_failed = true;
      if (requested) requested_failed = true;
    }
    if (out.format == "lines") {
      std::cout << entry.path << "\t" << entry.profile << "\t" << entry.tier << "\t"
                << (r.passed ? "pass" : "fail") << "\n";
    } else {
      std::string label = entry.path + " [" + entry.profile + "]";
      std::cout << label << std::string(widest + 4 - std::min(widest + 4, label.size()), ' ')
                << (r.passed ? "pass" : "FAIL") << "  (" << entry.tier << ")\n";
    }
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
  }
  if (tier == "mandatory") return mandatory_failed ? 1 : 0;
  return requested_failed || mandatory_failed ? 1 : 0;
}

int cmd_normalize(const std::string& path, const std::string& name,
                  const std::string& profile_name, const std::string& corpus_dir,
                  const CheckOptions& opts) {
  const Profile* profile = find_profile(profile_name);
  if (!profile) {
    std::cerr << "unknown profile '" << profile_name << "'\n";
    return 2;
  }
  GlobalEnv env(profile);
  if (profile->is_cic()) {
    FileReport prelude = check_file(env, corpus_dir + "/prelude.pdx", opts);
    if (!prelude.all_accepted()) {
      std::cerr << "prelude failed to check\n";
      return 2;
    }
  }
  FileReport report = check_file(env, path, opts);
  if (!report.parse_ok) {
    std::cerr << report.parse_error << "\n";
    return 2;
  }
  const ConstInfo* info = env.lookup(name);
  if (!info || !info->body) {
    std::cerr << "unknown name '" << name << "' (or it has no body) in " << path << "\n";
    return 2;
  }
  auto trace_cb = opts.trace
                      ? std::function<void(std::uint64_t, StepKind, const std::string&)>(
                            [](std::uint64_t n, StepKind k, const std::string& h) {
                              const char* kind = k == StepKind::Beta    ? "beta"
                                                 : k == StepKind::Delta ? "delta"
                                                                        : "iota";
                              std::cout << "step " << n << " " << kind;
                              if (!h.empty()) std::cout << " " << h;
                              std::cout << "\n";
                            })
                      : nullptr;
  NormalizationResult r = normalize(env, info->body, opts.fuel, trace_cb);
  if (r.normal)
    std::cout << "normal form after " << r.steps << " steps: "
              << print_term(env, r.term) << "\n";
  else
    std::cout << "fuel exhausted after " << r.steps << " steps\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary-kernel proof checker for a family of pure type systems"};
  app.require_subcommand(1);

  std::string profile = "cic";
  std::string corpus_dir = default_corpus_dir();
  std::string tier = "mandatory";
  std::string format = "text";
  std::uint64_t fuel = 1000000;
  bool trace = false;
  std::vector<std::string> paths;
  std::string norm_file;
  std::string name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--profile", profile, "theory profile")->capture_default_str();
    sub->add_option("--fuel", fuel, "normalization step budget")->capture_default_str();
    sub->add_flag("--trace", trace, "emit per-step reduction traces");
    sub->add_option("--format", format, "text|lines")->capture_default_str();
    sub->add_option("--corpus-dir", corpus_dir,
                    "corpus directory (prelude + manifest); also PARADOX_CORPUS_DIR");
  };

  CLI::App* check = app.add_subcommand("check", "check .pdx files under a profile");
  check->add_option("files", paths, "files to check")->required();
  add_common(check);

  CLI::App* corpus = app.add_subcommand("corpus", "evaluate the corpus manifest");
  corpus->add_option("--tier", tier, "mandatory|stretch|all")->capture_default_str();
  add_common(corpus);

  CLI::App* norm = app.add_subcommand("normalize", "normalize a checked definition");
  norm->add_option("file", norm_file, "file to check first")->required();
  norm->add_option("name", name, "definition to normalize")->required();
  add_common(norm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pdx::CheckOptions opts;
  opts.fuel = fuel;
  opts.trace = trace;
  OutputOptions out;
  out.format = format;
  if (format != "text" && format != "lines") {
    std::cerr << "unknown format '" << format << "'\n";
    return 2;
  }

  if (app.got_subcommand(check)) return cmd_check(paths, profile, corpus_dir, opts, out);
  if (app.got_subcommand(corpus)) return cmd_corpus(corpus_dir, tier, opts, out);
  if (app.got_subcommand(norm))
    return cmd_normalize(norm_file, name, profile, corpus_dir, opts);
  return 2;
}
