#include "planbench/agents/chat_agent.hpp"

#include <set>

#include "planbench/fitness/render.hpp"

namespace planbench::agents {

AgentTranscript ask(ChatClient& client, const PromptTemplate& tmpl,
                    const std::map<std::string, std::string>& bindings,
                    AnswerKind kind, bool allow_reask) {
  AgentTranscript transcript;
  transcript.prompt_hash = template_hash(tmpl);
  transcript.messages = render_prompt(tmpl, bindings);

  const auto exchange = [&]() -> bool {
    try {
      const CompletionResult result = client.complete(transcript.messages);
      transcript.messages.push_back({"assistant", result.text});
      if (result.usage) {
        if (!transcript.usage) transcript.usage = TokenUsage{};
        transcript.usage->prompt_tokens += result.usage->prompt_tokens;
        transcript.usage->completion_tokens += result.usage->completion_tokens;
      }
      transcript.answer = parse_answer(kind, result.text);
      return true;
    } catch (const ClientError& e) {
      transcript.transport_failed = true;
      transcript.failure = e.what();
      transcript.answer = ParsedAnswer{};
      transcript.answer.parse_errors.push_back(std::string("endpoint error: ") + e.what());
      return false;
    }
  };

  if (!exchange()) return transcript;
  if (!transcript.answer.ok() && allow_reask) {
    transcript.messages.push_back(
        {"user",
         "That answer could not be parsed. Reply again with only the required "
         "answer block and nothing else."});
    exchange();
  }
  return transcript;
}

std::string label_candidates(const std::vector<std::string>& candidate_texts) {
  std::string out;
  for (std::size_t i = 0; i < candidate_texts.size(); ++i) {
    out += "Candidate ";
    out += static_cast<char>('A' + i);
    out += ": " + candidate_texts[i] + "\n";
  }
  return out;
}

std::optional<std::vector<std::size_t>> labels_to_order(
    const std::vector<std::string>& labels, std::size_t n_candidates) {
  std::vector<std::size_t> order;
  std::set<std::size_t> seen;
  for (const auto& label : labels) {
    if (label.size() != 1) return std::nullopt;
    const char c = label[0];
    if (c < 'A' || static_cast<std::size_t>(c - 'A') >= n_candidates) return std::nullopt;
    const auto idx = static_cast<std::size_t>(c - 'A');
    if (!seen.insert(idx).second) return std::nullopt;
    order.push_back(idx);
  }
  if (order.empty()) return std::nullopt;
  return order;
}

std::map<std::string, std::string> fitness_solver_bindings(const fitness::SolverView& view) {
  fitness::UserProfile shell;
  shell.available_time_minutes = view.available_time_minutes;
  shell.gym_access = view.gym_access;
  shell.stamina = view.stamina;
  shell.max_reps = view.max_reps;
  shell.excluded_muscle_groups = view.excluded_muscle_groups;

  fitness::EpisodeState state;
  state.plan_history = *view.plan_history;
  state.feedback_history = *view.feedback_history;

  std::string emergencies = "none so far";
  if (!view.active_emergencies->empty()) {
    emergencies.clear();
    for (const auto& em : *view.active_emergencies)
      emergencies += fitness::render_emergency(em) + "\n";
    emergencies.pop_back();
  }

  std::string history = fitness::render_history(state, *view.bank);
  if (history.empty()) history = "(no plans yet; this is the first day)";

  return {{"bank", fitness::render_bank(*view.bank)},
          {"constraints", fitness::render_constraints(shell)},
          {"history", history},
          {"emergencies", emergencies}};
}

ChatFitnessSolver::ChatFitnessSolver(std::shared_ptr<ChatClient> client,
                                     PromptTemplate tmpl, bool allow_reask)
    : client_(std::move(client)), template_(std::move(tmpl)), allow_reask_(allow_reask) {}

std::string ChatFitnessSolver::name() const {
  return "endpoint:" + client_->config().model_name;
}

std::optional<fitness::FitnessPlan> ChatFitnessSolver::propose(
    const fitness::SolverView& view) {
  AgentTranscript transcript = ask(*client_, template_, fitness_solver_bindings(view),
                                   AnswerKind::FitnessPlan, allow_reask_);
  const bool ok = transcript.answer.ok() && transcript.answer.fitness_plan.has_value();
  std::optional<fitness::FitnessPlan> result;
  if (ok) {
    fitness::FitnessPlan plan;
    plan.reps.assign(view.bank->size(), 0);
    bool names_ok = true;
    for (const auto& [exercise, reps] : *transcript.answer.fitness_plan) {
      bool found = false;
      for (std::size_t i = 0; i < view.bank->size(); ++i) {
        if ((*view.bank)[i].name == exercise) {
          plan.reps[i] = reps;
          found = true;
          break;
        }
      }
      if (!found) {
        names_ok = false;
        transcript.answer.parse_errors.push_back("unknown exercise: " + exercise);
        break;
      }
    }
    if (names_ok) result = std::move(plan);
  }
  transcripts_.push_back(std::move(transcript));
  return result;
}

}  // namespace planbench::agents
