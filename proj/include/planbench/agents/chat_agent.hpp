#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "planbench/agents/client.hpp"
#include "planbench/agents/parse.hpp"
#include "planbench/agents/prompts.hpp"
#include "planbench/eval/tasks.hpp"
#include "planbench/fitness/episode.hpp"

namespace planbench::agents {

// Full record of one exchange: prompt messages, raw reply, parsed answer.
struct AgentTranscript {
  std::vector<ChatMessage> messages;  // prompt plus assistant turns
  ParsedAnswer answer;
  std::optional<TokenUsage> usage;
  std::string prompt_hash;
  bool transport_failed = false;
  std::string failure;  // endpoint error description if any
};

// Renders, sends, parses. A malformed answer counts as one graded failure;
// with allow_reask a single clarification round-trip is permitted first.
// Endpoint errors are captured in the transcript, never thrown.
AgentTranscript ask(ChatClient& client, const PromptTemplate& tmpl,
                    const std::map<std::string, std::string>& bindings,
                    AnswerKind kind, bool allow_reask = false);

// "Candidate A: ...\nCandidate B: ..." labeling; answers refer to candidates
// by letter.
std::string label_candidates(const std::vector<std::string>& candidate_texts);

// Maps parsed labels back to candidate indices; nullopt on unknown or
// duplicated labels.
std::optional<std::vector<std::size_t>> labels_to_order(
    const std::vector<std::string>& labels, std::size_t n_candidates);

// Solver-role agent for the interactive fitness loop, one completion per
// iteration. Transcripts accumulate per episode for persistence.
class ChatFitnessSolver final : public fitness::SolverAgent {
 public:
  ChatFitnessSolver(std::shared_ptr<ChatClient> client, PromptTemplate tmpl,
                    bool allow_reask = false);

  std::string name() const override;
  std::optional<fitness::FitnessPlan> propose(const fitness::SolverView& view) override;

  const std::vector<AgentTranscript>& transcripts() const { return transcripts_; }

 private:
  std::shared_ptr<ChatClient> client_;
  PromptTemplate template_;
  bool allow_reask_;
  std::vector<AgentTranscript> transcripts_;
};

// Bindings shared by the fitness prompt family.
std::map<std::string, std::string> fitness_solver_bindings(const fitness::SolverView& view);

}  // namespace planbench::agents
