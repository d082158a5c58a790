#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planbench::agents {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct ChatEndpointConfig {
  std::string base_url = "http://127.0.0.1:8080/v1";
  std::string model_name = "stub-model";
  std::string api_key_env = "PLANBENCH_API_KEY";  // empty: send no auth header
  double temperature = 0.0;
  int max_tokens = 1024;
  int timeout_seconds = 60;
  int max_retries = 3;
  std::optional<int> requests_per_minute;
  std::uint64_t jitter_seed = 0;  // backoff jitter stream
};

struct ClientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AuthError : ClientError {
  using ClientError::ClientError;
};
struct Timeout : ClientError {
  using ClientError::ClientError;
};
struct RetriesExhausted : ClientError {
  using ClientError::ClientError;
};
struct MalformedResponse : ClientError {
  using ClientError::ClientError;
};

struct TokenUsage {
  int prompt_tokens = 0;
  int completion_tokens = 0;
};

struct CompletionResult {
  std::string text;
  std::optional<TokenUsage> usage;
  int retries = 0;  // attempts beyond the first
};

// Raw HTTP layer, injectable so every retry/backoff path is testable with
// scripted responses and no sockets.
struct HttpResult {
  bool transport_ok = false;
  bool timed_out = false;
  int status = 0;
  std::string body;
  std::string error;  // transport-level description
};

struct HttpRequest {
  std::string url;  // absolute
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
  int timeout_seconds = 60;
};

using HttpTransport = std::function<HttpResult(const HttpRequest&)>;
using SleepFn = std::function<void(std::chrono::milliseconds)>;
using ClockFn = std::function<std::chrono::steady_clock::time_point()>;

// Chat-completion client: message list in, assistant text out. Retries
// transport failures, 429 and 5xx with exponential backoff (1s base, factor
// 2, jitter within +/-50%); paces request starts through a token bucket when
// requests_per_minute is set. Thread-safe; any number of calls may be in
// flight.
class ChatClient {
 public:
  explicit ChatClient(ChatEndpointConfig config);

  CompletionResult complete(const std::vector<ChatMessage>& messages);

  const ChatEndpointConfig& config() const { return config_; }

  // Test hooks; production code never calls these.
  void set_transport(HttpTransport transport) { transport_ = std::move(transport); }
  void set_sleep(SleepFn sleep) { sleep_ = std::move(sleep); }
  void set_clock(ClockFn clock) { clock_ = std::move(clock); }

  // Backoff delay before retry `attempt` (1-based), jitter factor in
  // [-0.5, 0.5].
  static std::chrono::milliseconds backoff_delay(int attempt, double jitter);

 private:
  std::string resolve_api_key() const;
  void pace();

  ChatEndpointConfig config_;
  HttpTransport transport_;
  SleepFn sleep_;
  ClockFn clock_;

  std::mutex mutex_;  // guards bucket and jitter state
  double bucket_tokens_ = 0.0;
  std::chrono::steady_clock::time_point bucket_refilled_{};
  bool bucket_started_ = false;
  std::uint64_t jitter_state_ = 0;
};

// Default transport backed by a real HTTP stack.
HttpTransport make_http_transport();

}  // namespace planbench::agents
