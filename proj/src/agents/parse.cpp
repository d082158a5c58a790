#include "planbench/agents/parse.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

namespace planbench::agents {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Last ``` fenced block, language tag stripped.
std::optional<std::string> last_fenced_block(const std::string& text) {
  std::optional<std::string> found;
  std::size_t pos = 0;
  while (true) {
    const auto open = text.find("```", pos);
    if (open == std::string::npos) break;
    auto body_start = open + 3;
    const auto newline = text.find('\n', body_start);
    const auto close = text.find("```", body_start);
    if (close == std::string::npos) break;
    if (newline != std::string::npos && newline < close) body_start = newline + 1;
    found = text.substr(body_start, close - body_start);
    pos = close + 3;
  }
  return found;
}

// Last balanced {...} region in the text; tolerant of surrounding prose.
std::optional<std::string> last_json_object(const std::string& text) {
  std::optional<std::string> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '{') continue;
    int depth = 0;
    bool in_string = false;
    for (std::size_t j = i; j < text.size(); ++j) {
      const char c = text[j];
      if (in_string) {
        if (c == '\\') {
          ++j;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') in_string = true;
      if (c == '{') ++depth;
      if (c == '}') {
        --depth;
        if (depth == 0) {
          found = text.substr(i, j - i + 1);
          i = j;
          break;
        }
      }
    }
  }
  return found;
}

std::optional<json> try_parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

// Collects candidate JSON payloads in priority order: fenced block first,
// bare object second.
std::vector<json> json_candidates(const std::string& raw) {
  std::vector<json> out;
  if (const auto fenced = last_fenced_block(raw)) {
    if (auto j = try_parse_json(*fenced)) {
      out.push_back(std::move(*j));
    } else if (const auto inner = last_json_object(*fenced)) {
      if (auto j2 = try_parse_json(*inner)) out.push_back(std::move(*j2));
    }
  }
  if (const auto object = last_json_object(raw)) {
    if (auto j = try_parse_json(*object)) out.push_back(std::move(*j));
  }
  return out;
}

bool parse_fitness(const json& j, ParsedAnswer& answer) {
  const json* plan = &j;
  if (j.is_object() && j.contains("plan") && j["plan"].is_object()) plan = &j["plan"];
  if (!plan->is_object()) return false;
  std::map<std::string, int> reps;
  for (const auto& [name, value] : plan->items()) {
    if (!value.is_number_integer() && !value.is_number_unsigned()) return false;
    const int r = value.get<int>();
    if (r < 0) return false;
    reps[name] = r;
  }
  answer.fitness_plan = std::move(reps);
  return true;
}

bool parse_course(const json& j, ParsedAnswer& answer) {
  if (!j.is_object()) return false;
  const json* plan = &j;
  if (j.contains("plan") && j["plan"].is_object()) plan = &j["plan"];
  std::map<std::string, std::string> assignment;
  for (const auto& [key, value] : plan->items()) {
    if (value.is_string()) {
      assignment[key] = value.get<std::string>();
    } else if (value.is_object()) {
      // Nested {"Course 1": {"Section 2": "classroom 1"}} or solution-style
      // {"Section 2": {"room": "classroom 1"}}.
      for (const auto& [section, room] : value.items()) {
        if (room.is_string()) {
          assignment[key + " " + section] = room.get<std::string>();
        } else if (room.is_object() && room.contains("room") && room["room"].is_string()) {
          assignment[key + " " + section] = room["room"].get<std::string>();
        } else {
          return false;
        }
      }
    } else {
      return false;
    }
  }
  if (assignment.empty()) return false;
  answer.course_assignment = std::move(assignment);
  return true;
}

bool parse_verdict_json(const json& j, ParsedAnswer& answer) {
  if (!j.is_object()) return false;
  bool any = false;
  for (const char* key : {"admissible", "feasible", "valid"}) {
    if (j.contains(key) && j[key].is_boolean()) {
      answer.verdict_feasible = j[key].get<bool>();
      any = true;
      break;
    }
  }
  if (j.contains("optimal") && j["optimal"].is_boolean()) {
    answer.verdict_optimal = j["optimal"].get<bool>();
    any = true;
  }
  return any;
}

// Word-boundary occurrences of `word`, excluding ones directly preceded by
// "not ".
std::size_t last_plain_occurrence(const std::string& text, const std::string& word) {
  std::size_t best = std::string::npos;
  std::size_t pos = 0;
  while (true) {
    const auto at = text.find(word, pos);
    if (at == std::string::npos) break;
    pos = at + 1;
    const bool left_ok =
        at == 0 || !std::isalpha(static_cast<unsigned char>(text[at - 1]));
    const bool right_ok = at + word.size() >= text.size() ||
                          !std::isalpha(static_cast<unsigned char>(text[at + word.size()]));
    const bool negated = at >= 4 && text.compare(at - 4, 4, "not ") == 0;
    if (left_ok && right_ok && !negated) best = at;
  }
  return best;
}

bool parse_verdict_text(const std::string& raw, ParsedAnswer& answer) {
  const std::string text = lower(raw);

  std::size_t last_negative = std::string::npos;
  for (const char* w : {"inadmissible", "not admissible", "infeasible", "not feasible",
                        "invalid", "not valid"}) {
    const auto at = text.rfind(w);
    if (at != std::string::npos && (last_negative == std::string::npos || at > last_negative))
      last_negative = at;
  }
  const auto no_at = last_plain_occurrence(text, "no");
  if (no_at != std::string::npos && (last_negative == std::string::npos || no_at > last_negative))
    last_negative = no_at;

  std::size_t last_positive = std::string::npos;
  for (const char* w : {"admissible", "feasible", "valid", "yes"}) {
    const auto at = last_plain_occurrence(text, w);
    if (at != std::string::npos && (last_positive == std::string::npos || at > last_positive))
      last_positive = at;
  }

  if (last_positive == std::string::npos && last_negative == std::string::npos) return false;
  // A negation engulfs the positive word it contains, so on a tie the
  // negative started earlier and the positive index is larger; require the
  // positive to start strictly after the negative span instead.
  if (last_negative == std::string::npos) {
    answer.verdict_feasible = true;
  } else if (last_positive == std::string::npos) {
    answer.verdict_feasible = false;
  } else {
    answer.verdict_feasible = last_positive > last_negative + 4;
  }

  const auto opt_plain = last_plain_occurrence(text, "optimal");
  std::size_t opt_negative = text.rfind("not optimal");
  const auto subopt = text.rfind("suboptimal");
  if (subopt != std::string::npos &&
      (opt_negative == std::string::npos || subopt > opt_negative))
    opt_negative = subopt;
  if (opt_plain != std::string::npos || opt_negative != std::string::npos) {
    if (opt_negative == std::string::npos) {
      answer.verdict_optimal = true;
    } else if (opt_plain == std::string::npos) {
      answer.verdict_optimal = false;
    } else {
      answer.verdict_optimal = opt_plain > opt_negative + 4;
    }
  }
  return true;
}

bool parse_ranking_json(const json& j, ParsedAnswer& answer) {
  const json* list = nullptr;
  if (j.is_array()) {
    list = &j;
  } else if (j.is_object() && j.contains("ranking") && j["ranking"].is_array()) {
    list = &j["ranking"];
  } else if (j.is_object() && j.contains("order") && j["order"].is_array()) {
    list = &j["order"];
  }
  if (list == nullptr) return false;
  std::vector<std::string> labels;
  for (const auto& item : *list) {
    if (!item.is_string()) return false;
    labels.push_back(item.get<std::string>());
  }
  if (labels.empty()) return false;
  answer.ranking_labels = std::move(labels);
  return true;
}

// "B > A > D > C" or "B, A, D, C" made of single-letter labels; the last
// such run in the text wins.
bool parse_ranking_text(const std::string& raw, ParsedAnswer& answer) {
  std::vector<std::string> best;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (!std::isupper(static_cast<unsigned char>(raw[i])) ||
        (i > 0 && std::isalnum(static_cast<unsigned char>(raw[i - 1])))) {
      ++i;
      continue;
    }
    if (i + 1 < raw.size() && std::isalnum(static_cast<unsigned char>(raw[i + 1]))) {
      ++i;
      continue;
    }
    std::vector<std::string> run = {std::string(1, raw[i])};
    std::size_t j = i + 1;
    while (j < raw.size()) {
      std::size_t k = j;
      bool saw_separator = false;
      while (k < raw.size() &&
             (raw[k] == ' ' || raw[k] == '>' || raw[k] == ',' || raw[k] == ';')) {
        if (raw[k] == '>' || raw[k] == ',' || raw[k] == ';') saw_separator = true;
        ++k;
      }
      if (!saw_separator || k >= raw.size() ||
          !std::isupper(static_cast<unsigned char>(raw[k])))
        break;
      if (k + 1 < raw.size() && std::isalnum(static_cast<unsigned char>(raw[k + 1]))) break;
      run.push_back(std::string(1, raw[k]));
      j = k + 1;
    }
    if (run.size() >= 2) best = run;
    i = j;
  }
  if (best.size() < 2) return false;
  answer.ranking_labels = std::move(best);
  return true;
}

}  // namespace

ParsedAnswer parse_answer(AnswerKind kind, const std::string& raw_text) {
  ParsedAnswer answer;
  if (raw_text.empty()) {
    answer.parse_errors.push_back("no answer found: empty response");
    return answer;
  }

  const std::vector<json> payloads = json_candidates(raw_text);
  switch (kind) {
    case AnswerKind::FitnessPlan:
      for (const auto& j : payloads)
        if (parse_fitness(j, answer)) return answer;
      answer.parse_errors.push_back("no exercise/reps object found");
      return answer;
    case AnswerKind::CourseAssignment:
      for (const auto& j : payloads)
        if (parse_course(j, answer)) return answer;
      answer.parse_errors.push_back("no section/room assignment object found");
      return answer;
    case AnswerKind::Verdict:
      for (const auto& j : payloads)
        if (parse_verdict_json(j, answer)) return answer;
      if (parse_verdict_text(raw_text, answer)) return answer;
      answer.parse_errors.push_back("no admissibility verdict found");
      return answer;
    case AnswerKind::Ranking:
      for (const auto& j : payloads)
        if (parse_ranking_json(j, answer)) return answer;
      if (parse_ranking_text(raw_text, answer)) return answer;
      answer.parse_errors.push_back("no candidate ordering found");
      return answer;
  }
  answer.parse_errors.push_back("unknown answer kind");
  return answer;
}

}  // namespace planbench::agents
