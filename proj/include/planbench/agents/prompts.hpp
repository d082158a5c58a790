#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planbench/agents/client.hpp"

namespace planbench::agents {

struct UnboundPlaceholder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Role { Solver, Verifier, HeuristicRanker };
enum class Mode { Direct, CoT, ZeroShot, FewShot, OneShot };

const char* to_string(Role r);
const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

// A prompt is a data file: template body with <<name>> placeholders, an
// "---OUTPUT---" separator line, then the answer-format instructions that
// are appended verbatim at render time.
struct PromptTemplate {
  Role role = Role::Solver;
  Mode mode = Mode::Direct;
  std::string template_text;
  std::string output_schema;
};

PromptTemplate load_template(const std::string& path, Role role, Mode mode);

// Looks up "<env>_<role>_<mode>.txt" under `dir` (e.g.
// "fitness_solver_cot.txt").
PromptTemplate load_template(const std::string& dir, const std::string& environment,
                             Role role, Mode mode);

// Substitutes every <<name>> from `bindings` and appends the schema block.
// Unknown placeholders in the template throw UnboundPlaceholder; unused
// bindings are fine. Rendering is byte-deterministic.
std::vector<ChatMessage> render_prompt(const PromptTemplate& tmpl,
                                       const std::map<std::string, std::string>& bindings);

// FNV-1a over role, mode and both text parts; recorded alongside results so
// every outcome is attributable to exact prompt text.
std::string template_hash(const PromptTemplate& tmpl);

}  // namespace planbench::agents
