#include "planbench/agents/client.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <thread>

#include "planbench/rng.hpp"

// httplib must see its config macros before inclusion anywhere else; this is
// the only translation unit that talks HTTP.
#include <httplib.h>

namespace planbench::agents {

namespace {

using nlohmann::json;

struct SplitUrl {
  std::string host_port;  // scheme://host[:port]
  std::string path_prefix;
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw ClientError("base_url must include a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  std::string prefix = url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path_start), prefix};
}

}  // namespace

HttpTransport make_http_transport() {
  return [](const HttpRequest& request) -> HttpResult {
    const auto path_split = request.url.find('/', request.url.find("://") + 3);
    const std::string host = request.url.substr(0, path_split);
    const std::string path =
        path_split == std::string::npos ? "/" : request.url.substr(path_split);

    httplib::Client client(host);
    client.set_connection_timeout(request.timeout_seconds);
    client.set_read_timeout(request.timeout_seconds);
    client.set_write_timeout(request.timeout_seconds);

    httplib::Headers headers;
    for (const auto& [k, v] : request.headers) headers.emplace(k, v);

    auto response = client.Post(path, headers, request.body, "application/json");
    HttpResult result;
    if (!response) {
      result.transport_ok = false;
      const auto err = response.error();
      result.timed_out = err == httplib::Error::ConnectionTimeout ||
                         err == httplib::Error::Read || err == httplib::Error::Write;
      result.error = httplib::to_string(err);
      return result;
    }
    result.transport_ok = true;
    result.status = response->status;
    result.body = response->body;
    return result;
  };
}

ChatClient::ChatClient(ChatEndpointConfig config)
    : config_(std::move(config)),
      transport_(make_http_transport()),
      sleep_([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }),
      clock_([] { return std::chrono::steady_clock::now(); }),
      jitter_state_(Rng::mix(config_.jitter_seed)) {}

std::chrono::milliseconds ChatClient::backoff_delay(int attempt, double jitter) {
  const double base_ms = 1000.0 * std::pow(2.0, attempt - 1);
  const double clamped = std::clamp(jitter, -0.5, 0.5);
  return std::chrono::milliseconds(static_cast<long>(base_ms * (1.0 + clamped)));
}

std::string ChatClient::resolve_api_key() const {
  if (config_.api_key_env.empty()) return "";
  const char* value = std::getenv(config_.api_key_env.c_str());
  if (value == nullptr || *value == '\0')
    throw AuthError("environment variable " + config_.api_key_env +
                    " is not set; no request was sent");
  return value;
}

void ChatClient::pace() {
  if (!config_.requests_per_minute) return;
  const double rpm = static_cast<double>(*config_.requests_per_minute);
  std::chrono::milliseconds wait{0};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto now = clock_();
    if (!bucket_started_) {
      bucket_started_ = true;
      bucket_tokens_ = rpm;  // a full bucket at startup allows a burst
      bucket_refilled_ = now;
    }
    const double elapsed_s =
        std::chrono::duration<double>(now - bucket_refilled_).count();
    bucket_tokens_ = std::min(rpm, bucket_tokens_ + elapsed_s * rpm / 60.0);
    bucket_refilled_ = now;
    if (bucket_tokens_ >= 1.0) {
      bucket_tokens_ -= 1.0;
    } else {
      const double deficit_s = (1.0 - bucket_tokens_) * 60.0 / rpm;
      wait = std::chrono::milliseconds(static_cast<long>(deficit_s * 1000.0) + 1);
      bucket_tokens_ = 0.0;
      bucket_refilled_ = now + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(deficit_s));
    }
  }
  if (wait.count() > 0) sleep_(wait);
}

CompletionResult ChatClient::complete(const std::vector<ChatMessage>& messages) {
  if (messages.empty()) throw ClientError("complete: empty message list");
  const std::string api_key = resolve_api_key();

  json request_body;
  request_body["model"] = config_.model_name;
  request_body["temperature"] = config_.temperature;
  request_body["max_tokens"] = config_.max_tokens;
  request_body["messages"] = json::array();
  for (const auto& m : messages)
    request_body["messages"].push_back({{"role", m.role}, {"content", m.content}});

  const SplitUrl url = split_url(config_.base_url);
  HttpRequest request;
  request.url = url.host_port + url.path_prefix + "/chat/completions";
  request.body = request_body.dump();
  request.timeout_seconds = config_.timeout_seconds;
  if (!api_key.empty()) request.headers.push_back({"Authorization", "Bearer " + api_key});

  int retries = 0;
  bool last_was_timeout = false;
  std::string last_error;

  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      double jitter;
      {
        std::lock_guard<std::mutex> lock(mutex_);
        jitter_state_ = Rng::mix(jitter_state_);
        jitter = static_cast<double>(jitter_state_ >> 11) * 0x1.0p-53 - 0.5;
      }
      sleep_(backoff_delay(attempt, jitter));
      ++retries;
    }
    pace();

    const HttpResult result = transport_(request);
    if (!result.transport_ok) {
      last_was_timeout = result.timed_out;
      last_error = result.error.empty() ? "transport failure" : result.error;
      continue;
    }
    if (result.status == 401 || result.status == 403) {
      throw AuthError("endpoint rejected credentials (HTTP " +
                      std::to_string(result.status) + ")");
    }
    if (result.status == 429 || result.status >= 500) {
      last_was_timeout = false;
      last_error = "HTTP " + std::to_string(result.status);
      continue;
    }
    if (result.status != 200) {
      throw MalformedResponse("unexpected HTTP " + std::to_string(result.status) +
                              ": " + result.body.substr(0, 200));
    }

    json body;
    try {
      body = json::parse(result.body);
    } catch (const json::parse_error&) {
      throw MalformedResponse("response body is not JSON");
    }
    if (!body.contains("choices") || !body["choices"].is_array() ||
        body["choices"].empty() ||
        !body["choices"][0].contains("message") ||
        !body["choices"][0]["message"].contains("content")) {
      throw MalformedResponse("response lacks choices[0].message.content");
    }

    CompletionResult completion;
    completion.text = body["choices"][0]["message"]["content"].get<std::string>();
    completion.retries = retries;
    if (body.contains("usage")) {
      TokenUsage usage;
      usage.prompt_tokens = body["usage"].value("prompt_tokens", 0);
      usage.completion_tokens = body["usage"].value("completion_tokens", 0);
      completion.usage = usage;
    }
    return completion;
  }

  if (last_was_timeout)
    throw Timeout("request timed out after " + std::to_string(retries) + " retries");
  throw RetriesExhausted("gave up after " + std::to_string(retries) +
                         " retries; last error: " + last_error);
}

}  // namespace planbench::agents
