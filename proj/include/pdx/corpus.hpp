// Checking driver (file -> per-declaration outcomes) and the corpus layer:
// manifest loading and expectation evaluation.
#ifndef PDX_CORPUS_HPP
#define PDX_CORPUS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdx/env.hpp"
#include "pdx/syntax.hpp"

namespace pdx {

struct CheckOptions {
  std::uint64_t fuel = 1000000;
  bool trace = false;
};

struct DeclOutcome {
  std::string name;
  SourcePos pos;
  bool accepted = false;
  ErrorKind kind = ErrorKind::TypeMismatch;  // valid when rejected
  std::string message;                       // error detail, incl. any trace
  std::optional<InconsistencyReport> cycle;
  std::string rendered_type;  // accepted value-level declarations
  std::string info;           // Check / Normalize output
};

struct FileReport {
  std::string path;
  bool parse_ok = true;
  std::string parse_error;
  std::vector<DeclOutcome> decls;

  bool all_accepted() const;
  const DeclOutcome* find(const std::string& name) const;
};

// Checks every command of the file against env, one rollback per rejected
// declaration, so checking continues past failures.
FileReport check_file(GlobalEnv& env, const std::string& path, const CheckOptions& opts);
FileReport check_text(GlobalEnv& env, const std::string& text, const std::string& path,
                      const CheckOptions& opts);

struct Expectation {
  std::string decl;
  bool accepted = true;
  ErrorKind kind = ErrorKind::TypeMismatch;
  std::string substring;  // optional trace substring for rejections
};

struct CorpusEntry {
  std::string path;     // relative to the corpus directory
  std::string profile;
  std::string tier;     // "mandatory" | "stretch"
  std::vector<Expectation> expectations;
};

// Reads <dir>/manifest.txt; ManifestError on malformed or missing content.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct EntryResult {
  CorpusEntry entry;
  bool prelude_ok = true;
  FileReport report;
  std::vector<std::string> failures;
  bool passed = false;
  std::shared_ptr<GlobalEnv> final_env;
};

EntryResult evaluate_entry(const CorpusEntry& entry, const std::string& dir,
                           const CheckOptions& opts);

// Constants whose type is literally False (closed, hypothesis-free), i.e.
// proved or assumed inhabitants of the empty type.
std::vector<std::string> closed_false_inhabitants(const GlobalEnv& env);

// Short stable digest of a cycle's edge multiset, for structured output.
std::string trace_digest(const InconsistencyReport& report);

std::string default_corpus_dir();

}  // namespace pdx

#endif
