// Weak-head and full normalization (beta, delta on transparent constants,
// iota on recursors) and conversion with cumulativity.
#ifndef PDX_REDUCE_HPP
#define PDX_REDUCE_HPP

#include <functional>
#include <string>

#include "pdx/env.hpp"
#include "pdx/term.hpp"

namespace pdx {

TermPtr whnf(const GlobalEnv& env, const TermPtr& t);

enum class StepKind { Beta, Delta, Iota };

struct NormalizationResult {
  bool normal = false;  // false = fuel exhausted
  TermPtr term;
  std::uint64_t steps = 0;
};

// Leftmost-outermost reduction, one fuel unit per contraction.  The optional
// trace callback sees (step number, redex kind, head constant if any).
NormalizationResult normalize(
    const GlobalEnv& env, const TermPtr& t, std::uint64_t fuel,
    const std::function<void(std::uint64_t, StepKind, const std::string&)>& trace = nullptr);

enum class ConvMode { Conv, CumulLeftLe };

// Definitional equality (Conv) or cumulative subtyping t <= u (CumulLeftLe).
// Sort comparisons feed constraints straight into env's universe graph, so a
// failed constraint surfaces as CheckError(UniverseInconsistency).
bool convertible(GlobalEnv& env, const TermPtr& t, const TermPtr& u, ConvMode mode);

}  // namespace pdx

#endif
