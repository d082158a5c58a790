#include "planbench/agents/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace planbench::agents {

namespace {

constexpr const char* kSchemaMarker = "---OUTPUT---";

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

const char* to_string(Role r) {
  switch (r) {
    case Role::Solver: return "solver";
    case Role::Verifier: return "verifier";
    case Role::HeuristicRanker: return "ranker";
  }
  return "solver";
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Direct: return "direct";
    case Mode::CoT: return "cot";
    case Mode::ZeroShot: return "zeroshot";
    case Mode::FewShot: return "fewshot";
    case Mode::OneShot: return "oneshot";
  }
  return "direct";
}

Mode mode_from_string(const std::string& s) {
  const std::string v = lower(s);
  if (v == "direct") return Mode::Direct;
  if (v == "cot") return Mode::CoT;
  if (v == "zeroshot" || v == "zero-shot") return Mode::ZeroShot;
  if (v == "fewshot" || v == "few-shot") return Mode::FewShot;
  if (v == "oneshot" || v == "one-shot") return Mode::OneShot;
  throw std::invalid_argument("unknown mode: " + s);
}

PromptTemplate load_template(const std::string& path, Role role, Mode mode) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open prompt template " + path);
  PromptTemplate tmpl;
  tmpl.role = role;
  tmpl.mode = mode;
  std::string line;
  bool in_schema = false;
  std::string body, schema;
  while (std::getline(in, line)) {
    if (line == kSchemaMarker) {
      in_schema = true;
      continue;
    }
    (in_schema ? schema : body) += line + "\n";
  }
  // Trim one trailing newline so rendering controls spacing.
  if (!body.empty() && body.back() == '\n') body.pop_back();
  if (!schema.empty() && schema.back() == '\n') schema.pop_back();
  tmpl.template_text = body;
  tmpl.output_schema = schema;
  return tmpl;
}

PromptTemplate load_template(const std::string& dir, const std::string& environment,
                             Role role, Mode mode) {
  const std::string path = dir + "/" + environment + "_" + to_string(role) + "_" +
                           to_string(mode) + ".txt";
  return load_template(path, role, mode);
}

std::vector<ChatMessage> render_prompt(const PromptTemplate& tmpl,
                                       const std::map<std::string, std::string>& bindings) {
  std::string text = tmpl.template_text;
  std::string rendered;
  rendered.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto open = text.find("<<", pos);
    if (open == std::string::npos) {
      rendered.append(text, pos, std::string::npos);
      break;
    }
    const auto close = text.find(">>", open + 2);
    if (close == std::string::npos) {
      rendered.append(text, pos, std::string::npos);
      break;
    }
    rendered.append(text, pos, open - pos);
    const std::string name = text.substr(open + 2, close - open - 2);
    const auto it = bindings.find(name);
    if (it == bindings.end())
      throw UnboundPlaceholder("placeholder <<" + name + ">> has no binding");
    rendered += it->second;
    pos = close + 2;
  }

  if (!tmpl.output_schema.empty()) rendered += "\n\n" + tmpl.output_schema;
  return {ChatMessage{"user", rendered}};
}

std::string template_hash(const PromptTemplate& tmpl) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  feed(to_string(tmpl.role));
  feed(to_string(tmpl.mode));
  feed(tmpl.template_text);
  feed(tmpl.output_schema);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace planbench::agents
