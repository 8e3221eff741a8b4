#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdx/corpus.hpp"

namespace pdx {

std::string error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::RuleViolation: return "RuleViolation";
    case ErrorKind::UniverseInconsistency: return "UniverseInconsistency";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::EliminationRestriction: return "EliminationRestriction";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NoOpenSection: return "NoOpenSection";
    case ErrorKind::ManifestError: return "ManifestError";
  }
  return "UnknownError";
}

std::optional<ErrorKind> error_kind_from_name(const std::string& name) {
  static const ErrorKind kinds[] = {
      ErrorKind::ParseError,        ErrorKind::UnknownIdentifier,
      ErrorKind::UnboundVariable,   ErrorKind::TypeMismatch,
      ErrorKind::RuleViolation,     ErrorKind::UniverseInconsistency,
      ErrorKind::PositivityViolation, ErrorKind::EliminationRestriction,
      ErrorKind::DuplicateName,     ErrorKind::NoOpenSection,
      ErrorKind::ManifestError};
  for (ErrorKind k : kinds) {
    if (error_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("PARADOX_CORPUS_DIR")) return env;
#ifdef PDX_DEFAULT_CORPUS_DIR
  return PDX_DEFAULT_CORPUS_DIR;
#else
  return "corpus";
#endif
}

namespace {

[[noreturn]] void manifest_fail(const std::string& message) {
  throw CheckError(ErrorKind::ManifestError, message);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Expectation parse_expectation(const std::string& tok, const std::string& where) {
  std::size_t eq = tok.find('=');
  if (eq == std::string::npos)
    manifest_fail(where + ": expectation '" + tok + "' is missing '='");
  Expectation exp;
  exp.decl = tok.substr(0, eq);
  std::string rest = tok.substr(eq + 1);
  if (rest == "Accepted") {
    exp.accepted = true;
    return exp;
  }
  if (rest.rfind("Rejected", 0) == 0) {
    exp.accepted = false;
    std::size_t c1 = rest.find(':');
    if (c1 == std::string::npos)
      manifest_fail(where + ": rejection '" + tok + "' needs an error kind");
    std::string kind_and_sub = rest.substr(c1 + 1);
    std::size_t c2 = kind_and_sub.find(':');
    std::string kind_name =
        c2 == std::string::npos ? kind_and_sub : kind_and_sub.substr(0, c2);
    auto kind = error_kind_from_name(kind_name);
    if (!kind) manifest_fail(where + ": unknown error kind '" + kind_name + "'");
    exp.kind = *kind;
    if (c2 != std::string::npos) exp.substring = kind_and_sub.substr(c2 + 1);
    return exp;
  }
  manifest_fail(where + ": expectation '" + tok + "' must be Accepted or Rejected:...");
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::string manifest_path = dir + "/manifest.txt";
  std::ifstream in(manifest_path);
  if (!in) manifest_fail("cannot open manifest " + manifest_path);
  std::vector<CorpusEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = manifest_path + ":" + std::to_string(lineno);
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      std::size_t bar = t.find('|', start);
      if (bar == std::string::npos) manifest_fail(where + ": expected 4 '|' separated fields");
      fields.push_back(trim(t.substr(start, bar - start)));
      start = bar + 1;
    }
    fields.push_back(trim(t.substr(start)));
    CorpusEntry entry;
    entry.path = fields[0];
    entry.profile = fields[1];
    entry.tier = fields[2];
    if (entry.tier != "mandatory" && entry.tier != "stretch")
      manifest_fail(where + ": tier must be mandatory or stretch, got '" + entry.tier + "'");
    if (!find_profile(entry.profile))
      manifest_fail(where + ": unknown profile '" + entry.profile + "'");
    for (const auto& tok : split_ws(fields[3]))
      entry.expectations.push_back(parse_expectation(tok, where));
    if (!std::filesystem::exists(dir + "/" + entry.path))
      manifest_fail(where + ": corpus file " + entry.path + " does not exist");
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) manifest_fail(manifest_path + ": manifest lists no entries");
  return entries;
}

EntryResult evaluate_entry(const CorpusEntry& entry, const std::string& dir,
                           const CheckOptions& opts) {
  EntryResult result;
  result.entry = entry;
  const Profile* profile = find_profile(entry.profile);
  if (!profile) manifest_fail("unknown profile '" + entry.profile + "'");
  auto env = std::make_shared<GlobalEnv>(profile);

  if (profile->is_cic() && entry.path != "prelude.pdx") {
    FileReport prelude = check_file(*env, dir + "/prelude.pdx", opts);
    if (!prelude.all_accepted()) {
      result.prelude_ok = false;
      result.failures.push_back("prelude did not check cleanly under profile " +
                                entry.profile);
    }
  }

  result.report = check_file(*env, dir + "/" + entry.path, opts);
  result.final_env = env;

  if (!result.report.parse_ok)
    result.failures.push_back("parse error: " + result.report.parse_error);

  for (const auto& exp : entry.expectations) {
    const DeclOutcome* outcome = result.report.find(exp.decl);
    if (!outcome) {
      result.failures.push_back("declaration " + exp.decl + " not found in " + entry.path);
      continue;
    }
    if (exp.accepted != outcome->accepted) {
      result.failures.push_back(
          exp.decl + ": expected " + (exp.accepted ? "Accepted" : "Rejected") +
          ", observed " +
          (outcome->accepted ? "Accepted"
                             : "Rejected:" + error_kind_name(outcome->kind) +
                                   " (" + outcome->message + ")"));
      continue;
    }
    if (!exp.accepted) {
      if (outcome->kind != exp.kind) {
        result.failures.push_back(exp.decl + ": expected rejection kind " +
                                  error_kind_name(exp.kind) + ", observed " +
                                  error_kind_name(outcome->kind) + " (" +
                                  outcome->message + ")");
        continue;
      }
      if (!exp.substring.empty() &&
          outcome->message.find(exp.substring) == std::string::npos) {
        result.failures.push_back(exp.decl + ": rejection trace does not contain '" +
                                  exp.substring + "': " + outcome->message);
      }
    }
  }
  result.passed = result.failures.empty();
  return result;
}

std::vector<std::string> closed_false_inhabitants(const GlobalEnv& env) {
  std::vector<std::string> out;
  for (const auto& name : env.declaration_order()) {
    const ConstInfo* info = env.lookup(name);
    if (!info) continue;
    bool inhabitant = info->kind == ConstInfo::Kind::Axiom ||
                      (info->kind == ConstInfo::Kind::Definition && info->body);
    if (!inhabitant) continue;
    if (auto c = info->type->as_const()) {
      if (c->name == "False") out.push_back(name);
    }
  }
  return out;
}

std::string trace_digest(const InconsistencyReport& report) {
  std::vector<std::string> parts;
  for (const auto& e : report.cycle) {
    parts.push_back(std::to_string(e.from) + (e.weight >= 1 ? "<" : "<=") +
                    std::to_string(e.to));
  }
  std::sort(parts.begin(), parts.end());
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& p : parts) {
    for (char c : p) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    h ^= '|';
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%08llx", static_cast<unsigned long long>(h & 0xffffffffull));
  return buf;
}

}  // namespace pdx
