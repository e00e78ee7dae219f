/*
 * Copyright 2026 The dqot Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dqot/harness/transport.h"

#include <errno.h>
#include <fcntl.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <deque>
#include <map>
#include <utility>

#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

class InProcessTransport final : public Transport {
 public:
  absl::Status Send(const Envelope& envelope) override {
    queue_.push_back(envelope);
    return absl::OkStatus();
  }

  absl::StatusOr<std::optional<Envelope>> Next() override {
    if (queue_.empty()) return std::optional<Envelope>();
    Envelope next = std::move(queue_.front());
    queue_.pop_front();
    return std::optional<Envelope>(std::move(next));
  }

 private:
  std::deque<Envelope> queue_;
};

absl::Status ErrnoError(const char* what) {
  return absl::InternalError(std::string(what) + ": " + std::strerror(errno));
}

// A non-blocking socket pair. Bytes that do not fit the kernel buffer wait in
// `pending` and are flushed while the reader pulls, so a single thread can
// drive both ends without deadlock.
class Edge {
 public:
  Edge() = default;
  Edge(const Edge&) = delete;
  Edge& operator=(const Edge&) = delete;
  ~Edge() {
    if (fds_[0] >= 0) close(fds_[0]);
    if (fds_[1] >= 0) close(fds_[1]);
  }

  absl::Status Open() {
    if (socketpair(AF_UNIX, SOCK_STREAM, 0, fds_) != 0) {
      return ErrnoError("socketpair");
    }
    for (int fd : fds_) {
      int flags = fcntl(fd, F_GETFL, 0);
      if (flags < 0 || fcntl(fd, F_SETFL, flags | O_NONBLOCK) != 0) {
        return ErrnoError("fcntl");
      }
    }
    return absl::OkStatus();
  }

  absl::Status Write(const std::vector<uint8_t>& frame) {
    pending_.insert(pending_.end(), frame.begin(), frame.end());
    return Flush();
  }

  absl::StatusOr<std::vector<uint8_t>> ReadFrame() {
    std::vector<uint8_t> header;
    RETURN_IF_ERROR(ReadExactly(4, header));
    size_t length = (size_t{header[0]} << 24) | (size_t{header[1]} << 16) |
                    (size_t{header[2]} << 8) | size_t{header[3]};
    std::vector<uint8_t> body;
    RETURN_IF_ERROR(ReadExactly(length, body));
    return body;
  }

 private:
  absl::Status Flush() {
    while (!pending_.empty()) {
      ssize_t n = write(fds_[0], pending_.data(), pending_.size());
      if (n < 0) {
        if (errno == EAGAIN || errno == EWOULDBLOCK) return absl::OkStatus();
        if (errno == EINTR) continue;
        return ErrnoError("write");
      }
      pending_.erase(pending_.begin(), pending_.begin() + n);
    }
    return absl::OkStatus();
  }

  absl::Status ReadExactly(size_t n, std::vector<uint8_t>& out) {
    out.resize(n);
    size_t got = 0;
    while (got < n) {
      ssize_t r = read(fds_[1], out.data() + got, n - got);
      if (r > 0) {
        got += static_cast<size_t>(r);
        continue;
      }
      if (r == 0) return absl::InternalError("socket closed mid-frame");
      if (errno == EINTR) continue;
      if (errno != EAGAIN && errno != EWOULDBLOCK) return ErrnoError("read");
      if (pending_.empty()) {
        return absl::InternalError("frame announced but never written");
      }
      RETURN_IF_ERROR(Flush());
    }
    return absl::OkStatus();
  }

  int fds_[2] = {-1, -1};
  std::vector<uint8_t> pending_;
};

class SocketTransport final : public Transport {
 public:
  absl::Status Send(const Envelope& envelope) override {
    auto key = std::make_pair(envelope.from, envelope.to);
    auto it = edges_.find(key);
    if (it == edges_.end()) {
      auto edge = std::make_unique<Edge>();
      RETURN_IF_ERROR(edge->Open());
      it = edges_.emplace(key, std::move(edge)).first;
    }
    // Frame body: phase length byte, phase, payload.
    if (envelope.phase.size() > 255) return ParameterError("phase too long");
    size_t body = 1 + envelope.phase.size() + envelope.bytes.size();
    std::vector<uint8_t> frame;
    frame.reserve(4 + body);
    for (int shift = 24; shift >= 0; shift -= 8) {
      frame.push_back(static_cast<uint8_t>(body >> shift));
    }
    frame.push_back(static_cast<uint8_t>(envelope.phase.size()));
    frame.insert(frame.end(), envelope.phase.begin(), envelope.phase.end());
    frame.insert(frame.end(), envelope.bytes.begin(), envelope.bytes.end());
    RETURN_IF_ERROR(it->second->Write(frame));
    order_.push_back(key);
    return absl::OkStatus();
  }

  absl::StatusOr<std::optional<Envelope>> Next() override {
    if (order_.empty()) return std::optional<Envelope>();
    auto [from, to] = order_.front();
    order_.pop_front();
    ASSIGN_OR_RETURN(std::vector<uint8_t> body,
                     edges_.at({from, to})->ReadFrame());
    if (body.empty() || body.size() < 1u + body[0]) {
      return absl::InternalError("malformed socket frame");
    }
    Envelope out;
    out.from = from;
    out.to = to;
    out.phase.assign(body.begin() + 1, body.begin() + 1 + body[0]);
    out.bytes.assign(body.begin() + 1 + body[0], body.end());
    return std::optional<Envelope>(std::move(out));
  }

 private:
  std::map<std::pair<Role, Role>, std::unique_ptr<Edge>> edges_;
  std::deque<std::pair<Role, Role>> order_;
};

}  // namespace

std::string_view TransportName(TransportKind kind) {
  return kind == TransportKind::kSocket ? "socket" : "in-process";
}

absl::StatusOr<TransportKind> TransportFromName(std::string_view name) {
  if (name == "in-process" || name == "inprocess") {
    return TransportKind::kInProcess;
  }
  if (name == "socket") return TransportKind::kSocket;
  return ParameterError(std::string("unknown transport ").append(name));
}

std::unique_ptr<Transport> MakeInProcessTransport() {
  return std::make_unique<InProcessTransport>();
}

absl::StatusOr<std::unique_ptr<Transport>> MakeSocketTransport() {
  return std::unique_ptr<Transport>(std::make_unique<SocketTransport>());
}

absl::StatusOr<std::unique_ptr<Transport>> MakeTransport(TransportKind kind) {
  if (kind == TransportKind::kSocket) return MakeSocketTransport();
  return MakeInProcessTransport();
}

}  // namespace dqot
