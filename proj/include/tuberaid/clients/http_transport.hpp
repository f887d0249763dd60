#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tuberaid::clients {

struct HttpRequest {
  std::string method = "GET";
  std::string url; // absolute, with query string
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// One blocking request per call. Implementations throw TransportError when
// no response arrives at all; HTTP error statuses are returned, not thrown.
class HttpTransport {
public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse send(const HttpRequest &request) = 0;
};

// HTTPS client over cpp-httplib.
std::unique_ptr<HttpTransport> make_http_transport(
    std::chrono::seconds timeout = std::chrono::seconds(30));

// "a b&c" -> "a%20b%26c"
std::string url_encode(std::string_view text);

} // namespace tuberaid::clients
