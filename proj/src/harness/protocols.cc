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

#include "dqot/harness/protocols.h"

#include <algorithm>
#include <memory>
#include <string>

#include "dqot/harness/messages.h"
#include "dqot/harness/party.h"
#include "dqot/harness/wire.h"
#include "dqot/ot/delegated_query.h"
#include "dqot/ot/homomorphic_delegation.h"
#include "dqot/ot/naor_pinkas.h"
#include "dqot/ot/supersonic.h"
#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

std::string Phase(std::string_view p) { return std::string(p); }

absl::Status Unexpected(const Envelope& in) {
  absl::StatusOr<std::pair<Role, MessageType>> header = PeekHeader(in.bytes);
  int type = header.ok() ? static_cast<int>(header->second) : -1;
  return ProtocolViolationError(
      std::string(RoleName(in.to)) + " does not expect message type " +
      std::to_string(type) + " from " + std::string(RoleName(in.from)));
}

absl::StatusOr<MessageType> TypeOf(const Envelope& in) {
  ASSIGN_OR_RETURN(auto header, PeekHeader(in.bytes));
  return header.second;
}

bool IsUnknownQuery(Protocol p) {
  return p == Protocol::kDuq || p == Protocol::kDuqMr;
}

bool IsMultiReceiver(Protocol p) {
  return p == Protocol::kDqMr || p == Protocol::kDuqMr;
}

// Shared state every party of one run sees: the public parameters and the
// receiver's published encryption key.
struct Context {
  const RunConfig* config;
  const RunInputs* inputs;
  std::optional<GroupParams> params;  // absent for the pad-only protocol
  std::optional<AheKeys> ahe;
};

class PartyBase : public Party {
 public:
  PartyBase(Role role, const Context& ctx)
      : role_(role),
        ctx_(ctx),
        rng_(ctx.config->seed, std::string("party/").append(RoleName(role))) {}
  Role role() const override { return role_; }

 protected:
  const GroupParams& params() const { return *ctx_.params; }
  const RunConfig& config() const { return *ctx_.config; }
  const RunInputs& inputs() const { return *ctx_.inputs; }
  const PaillierPublicKey& pk() const { return ctx_.ahe->public_key; }
  const PaillierPrivateKey& sk() const { return ctx_.ahe->private_key; }
  RandomSource& rng() { return rng_; }

 private:
  Role role_;
  const Context& ctx_;
  Drbg rng_;
};

class Receiver : public PartyBase {
 public:
  explicit Receiver(const Context& ctx) : PartyBase(Role::kR, ctx) {}
  const std::optional<BitString>& output() const { return output_; }

 protected:
  void SetOutput(BitString out) { output_ = std::move(out); }

 private:
  std::optional<BitString> output_;
};

// Naor-Pinkas.

class NpReceiver final : public Receiver {
 public:
  using Receiver::Receiver;

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    if (type == MessageType::kParams) {
      ASSIGN_OR_RETURN(GroupParams published,
                       wire::DecodeParams(in.bytes, Role::kS));
      params_ = std::move(published);
      auto [query, secret] = RGenQuery(*params_, inputs().s, rng());
      secret_ = std::move(secret);
      out.Send(Role::kS, Phase(kPhaseRequest),
               wire::EncodeOtQuery(Role::kR, query, *params_));
      return absl::OkStatus();
    }
    if (type == MessageType::kOtResponse && secret_.has_value()) {
      ASSIGN_OR_RETURN(OtResponse res,
                       wire::DecodeOtResponse(in.bytes, Role::kS, *params_));
      SetOutput(RRetrieve(res, *secret_, *params_));
      return absl::OkStatus();
    }
    return Unexpected(in);
  }

 private:
  std::optional<GroupParams> params_;
  std::optional<OtSecret> secret_;
};

class NpSender final : public PartyBase {
 public:
  explicit NpSender(const Context& ctx) : PartyBase(Role::kS, ctx) {}

  absl::Status Start(Outbox& out) override {
    out.Send(Role::kR, Phase(kPhaseSetup),
             wire::EncodeParams(Role::kS, params()));
    return absl::OkStatus();
  }

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(OtQuery query,
                     wire::DecodeOtQuery(in.bytes, Role::kR, params()));
    const auto& [m0, m1] = inputs().table.front();
    ASSIGN_OR_RETURN(OtResponse res, SGenRes(m0, m1, params(), query, rng()));
    out.Send(Role::kR, Phase(kPhaseResponse),
             wire::EncodeOtResponse(Role::kS, res, params()));
    return absl::OkStatus();
  }
};

// Delegated-query family: DQ, DUQ and their multi-receiver forms.

class DelegatedReceiver final : public Receiver {
 public:
  using Receiver::Receiver;

  absl::Status Start(Outbox& out) override {
    Protocol p = config().protocol;
    if (IsUnknownQuery(p)) {
      // R never learns s here; it only supplies the blinding scalars.
      r1_ = RandomNonzeroScalar(rng(), params());
      r2_ = RandomNonzeroScalar(rng(), params());
      out.Send(Role::kP1, Phase(kPhaseRequest),
               wire::EncodeBlindingScalar(Role::kR, *r1_, params()));
      out.Send(Role::kP2, Phase(kPhaseRequest),
               wire::EncodeBlindingScalar(Role::kR, *r2_, params()));
      return absl::OkStatus();
    }
    DqRequest req = RRequest(params(), inputs().s, rng());
    out.Send(Role::kP1, Phase(kPhaseRequest),
             wire::EncodeShareAndBlind(Role::kR, req.to_p1, params()));
    if (p == Protocol::kDqMr) {
      out.Send(Role::kP1, Phase(kPhaseRequest),
               wire::EncodePairIndex(Role::kR, inputs().v));
    }
    out.Send(Role::kP2, Phase(kPhaseRequest),
             wire::EncodeShareAndBlind(Role::kR, req.to_p2, params()));
    request_ = std::move(req);
    return absl::OkStatus();
  }

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    (void)out;
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    Protocol p = config().protocol;
    if (p == Protocol::kDq || p == Protocol::kDqMr) {
      Role from = p == Protocol::kDq ? Role::kS : Role::kP1;
      if (type != MessageType::kOtResponse) return Unexpected(in);
      ASSIGN_OR_RETURN(OtResponse res,
                       wire::DecodeOtResponse(in.bytes, from, params()));
      const DqRequest& req = *request_;
      ASSIGN_OR_RETURN(Scalar x,
                       DqRetrieveExponent(inputs().s, req.to_p1.s, req.to_p2.s,
                                          req.to_p1.r, req.to_p2.r, params()));
      if (res.e0.masked.size() != config().sigma) {
        return ProtocolViolationError("response length differs from sigma");
      }
      SetOutput(DqRetrieve(res, inputs().s, x, params()));
      return absl::OkStatus();
    }
    switch (type) {
      case MessageType::kIndexShare: {
        ASSIGN_OR_RETURN(BitShare s2,
                         wire::DecodeIndexShare(in.bytes, Role::kP2));
        s2_ = s2;
        break;
      }
      case MessageType::kTaggedResponse: {
        if (p != Protocol::kDuq) return Unexpected(in);
        ASSIGN_OR_RETURN(TaggedResponse res, wire::DecodeTaggedResponse(
                                                 in.bytes, Role::kS, params()));
        tagged_ = std::move(res);
        break;
      }
      case MessageType::kVerificationPad: {
        if (p != Protocol::kDuqMr) return Unexpected(in);
        ASSIGN_OR_RETURN(BitString pad,
                         wire::DecodeVerificationPad(in.bytes, Role::kS));
        pad_ = std::move(pad);
        break;
      }
      case MessageType::kEncryptedPair: {
        if (p != Protocol::kDuqMr) return Unexpected(in);
        ASSIGN_OR_RETURN(EncryptedPair pair,
                         wire::DecodeEncryptedPair(in.bytes, Role::kP1, pk()));
        encrypted_ = std::move(pair);
        break;
      }
      default:
        return Unexpected(in);
    }
    return TryFinish();
  }

 private:
  absl::Status TryFinish() {
    if (!s2_.has_value()) return absl::OkStatus();
    if (tagged_.has_value()) {
      if (tagged_->pad.size() + config().sigma !=
          tagged_->pair.e0.masked.size()) {
        return ProtocolViolationError("tagged response has the wrong length");
      }
      ASSIGN_OR_RETURN(BitString m,
                       DuqRetrieve(*tagged_, *r1_, *r2_, *s2_, params()));
      SetOutput(std::move(m));
    } else if (pad_.has_value() && encrypted_.has_value()) {
      ASSIGN_OR_RETURN(BitString m,
                       DuqMrRetrieve(*encrypted_, sk(), *r1_, *r2_, *s2_, *pad_,
                                     config().sigma, params()));
      SetOutput(std::move(m));
    }
    return absl::OkStatus();
  }

  std::optional<DqRequest> request_;
  std::optional<Scalar> r1_;
  std::optional<Scalar> r2_;
  std::optional<BitShare> s2_;
  std::optional<TaggedResponse> tagged_;
  std::optional<BitString> pad_;
  std::optional<EncryptedPair> encrypted_;
};

// Owns the index in the unknown-query variants. Sends, never receives.
class ThirdParty final : public PartyBase {
 public:
  explicit ThirdParty(const Context& ctx) : PartyBase(Role::kT, ctx) {}

  absl::Status Start(Outbox& out) override {
    auto [s1, s2] = DuqDelegate(inputs().s, rng());
    out.Send(Role::kP1, Phase(kPhaseRequest),
             wire::EncodeIndexShare(Role::kT, s1));
    out.Send(Role::kP2, Phase(kPhaseRequest),
             wire::EncodeIndexShare(Role::kT, s2));
    if (config().protocol == Protocol::kDuqMr) {
      ASSIGN_OR_RETURN(
          std::vector<AheCiphertext> w,
          EncryptSelectionVector(inputs().v, static_cast<uint32_t>(config().z),
                                 pk(), rng()));
      out.Send(Role::kP1, Phase(kPhaseRequest),
               wire::EncodeSelectionVector(Role::kT, w, pk()));
    }
    return absl::OkStatus();
  }

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    (void)out;
    return Unexpected(in);
  }
};

// Collects an index share and a blinding scalar, from R alone or from T and
// R depending on the variant.
class ShareCollector {
 public:
  absl::Status Accept(const Envelope& in, MessageType type,
                      const GroupParams& params) {
    switch (type) {
      case MessageType::kShareAndBlind: {
        ASSIGN_OR_RETURN(ServerShare share,
                         wire::DecodeShareAndBlind(in.bytes, Role::kR, params));
        s_ = share.s;
        r_ = std::move(share.r);
        return absl::OkStatus();
      }
      case MessageType::kIndexShare: {
        ASSIGN_OR_RETURN(BitShare s,
                         wire::DecodeIndexShare(in.bytes, Role::kT));
        s_ = s;
        return absl::OkStatus();
      }
      case MessageType::kBlindingScalar: {
        ASSIGN_OR_RETURN(
            Scalar r, wire::DecodeBlindingScalar(in.bytes, Role::kR, params));
        r_ = std::move(r);
        return absl::OkStatus();
      }
      default:
        return Unexpected(in);
    }
  }

  bool ready() const { return s_.has_value() && r_.has_value(); }
  BitShare s() const { return *s_; }
  const Scalar& r() const { return *r_; }

 private:
  std::optional<BitShare> s_;
  std::optional<Scalar> r_;
};

class HelperTwo final : public PartyBase {
 public:
  explicit HelperTwo(const Context& ctx) : PartyBase(Role::kP2, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    if (sent_) return Unexpected(in);
    RETURN_IF_ERROR(share_.Accept(in, type, params()));
    if (!share_.ready()) return absl::OkStatus();
    sent_ = true;
    out.Send(Role::kP1, Phase(kPhaseTransform),
             wire::EncodeDeltaPair(
                 Role::kP2, P2Transform(params(), share_.s(), share_.r()),
                 params()));
    if (IsUnknownQuery(config().protocol)) {
      out.Send(Role::kR, Phase(kPhaseTransform),
               wire::EncodeIndexShare(Role::kP2, share_.s()));
    }
    return absl::OkStatus();
  }

 private:
  ShareCollector share_;
  bool sent_ = false;
};

class HelperOne final : public PartyBase {
 public:
  explicit HelperOne(const Context& ctx) : PartyBase(Role::kP1, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    Protocol p = config().protocol;
    switch (type) {
      case MessageType::kDeltaPair: {
        ASSIGN_OR_RETURN(DeltaPair d,
                         wire::DecodeDeltaPair(in.bytes, Role::kP2, params()));
        delta_ = std::move(d);
        break;
      }
      case MessageType::kPairIndex: {
        if (p != Protocol::kDqMr) return Unexpected(in);
        ASSIGN_OR_RETURN(uint32_t v, wire::DecodePairIndex(in.bytes, Role::kR));
        v_ = v;
        break;
      }
      case MessageType::kSelectionVector: {
        if (p != Protocol::kDuqMr) return Unexpected(in);
        ASSIGN_OR_RETURN(std::vector<AheCiphertext> w,
                         wire::DecodeSelectionVector(in.bytes, Role::kT, pk()));
        w_ = std::move(w);
        break;
      }
      case MessageType::kOtResponseList: {
        if (p != Protocol::kDqMr || !v_.has_value()) return Unexpected(in);
        ASSIGN_OR_RETURN(
            std::vector<OtResponse> list,
            wire::DecodeOtResponseList(in.bytes, Role::kS, params()));
        ASSIGN_OR_RETURN(OtResponse chosen, MrSelect(list, *v_));
        out.Send(Role::kR, Phase(kPhaseFilter),
                 wire::EncodeOtResponse(Role::kP1, chosen, params()));
        return absl::OkStatus();
      }
      case MessageType::kTaggedPairList: {
        if (p != Protocol::kDuqMr || !w_.has_value()) return Unexpected(in);
        ASSIGN_OR_RETURN(
            std::vector<OtResponse> list,
            wire::DecodeTaggedPairList(in.bytes, Role::kS, params()));
        ASSIGN_OR_RETURN(EncryptedPair pair, DuqMrFilter(list, *w_, pk()));
        out.Send(Role::kR, Phase(kPhaseFilter),
                 wire::EncodeEncryptedPair(Role::kP1, pair, pk()));
        return absl::OkStatus();
      }
      default:
        RETURN_IF_ERROR(share_.Accept(in, type, params()));
    }
    if (forwarded_ || !share_.ready() || !delta_.has_value()) {
      return absl::OkStatus();
    }
    forwarded_ = true;
    ASSIGN_OR_RETURN(BetaPair beta,
                     P1Transform(params(), share_.s(), share_.r(), *delta_));
    out.Send(Role::kS, Phase(kPhaseTransform),
             wire::EncodeBetaPair(Role::kP1, beta, params()));
    return absl::OkStatus();
  }

 private:
  ShareCollector share_;
  std::optional<DeltaPair> delta_;
  std::optional<uint32_t> v_;
  std::optional<std::vector<AheCiphertext>> w_;
  bool forwarded_ = false;
};

class DelegatedSender final : public PartyBase {
 public:
  explicit DelegatedSender(const Context& ctx) : PartyBase(Role::kS, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(BetaPair beta,
                     wire::DecodeBetaPair(in.bytes, Role::kP1, params()));
    const auto& table = inputs().table;
    switch (config().protocol) {
      case Protocol::kDq: {
        const auto& [m0, m1] = table.front();
        ASSIGN_OR_RETURN(OtResponse res,
                         DqSGenRes(m0, m1, params(), beta, rng()));
        out.Send(Role::kR, Phase(kPhaseResponse),
                 wire::EncodeOtResponse(Role::kS, res, params()));
        break;
      }
      case Protocol::kDuq: {
        const auto& [m0, m1] = table.front();
        BitString r3 = BitString::Random(rng(), config().lambda);
        ASSIGN_OR_RETURN(TaggedResponse res,
                         DuqSGenRes(m0, m1, params(), beta, r3, rng()));
        out.Send(Role::kR, Phase(kPhaseResponse),
                 wire::EncodeTaggedResponse(Role::kS, res, params()));
        break;
      }
      case Protocol::kDqMr: {
        ASSIGN_OR_RETURN(MessageTable t, MessageTable::Create(table));
        ASSIGN_OR_RETURN(std::vector<OtResponse> list,
                         MrRespond(t, params(), beta, rng()));
        out.Send(Role::kP1, Phase(kPhaseResponse),
                 wire::EncodeOtResponseList(Role::kS, list, params()));
        break;
      }
      case Protocol::kDuqMr: {
        ASSIGN_OR_RETURN(MessageTable t, MessageTable::Create(table));
        BitString r3 = BitString::Random(rng(), config().lambda);
        ASSIGN_OR_RETURN(std::vector<OtResponse> list,
                         DuqMrRespond(t, params(), beta, r3, rng()));
        out.Send(Role::kP1, Phase(kPhaseResponse),
                 wire::EncodeTaggedPairList(Role::kS, list, params()));
        out.Send(Role::kR, Phase(kPhaseResponse),
                 wire::EncodeVerificationPad(Role::kS, r3));
        break;
      }
      default:
        return Unexpected(in);
    }
    return absl::OkStatus();
  }
};

// Thin client.

class ThinReceiver final : public Receiver {
 public:
  using Receiver::Receiver;

  absl::Status Start(Outbox& out) override {
    ASSIGN_OR_RETURN(auto request,
                     ThinRequest(params(), pk(), inputs().v,
                                 static_cast<uint32_t>(config().n), rng()));
    secret_ = request.second;
    out.Send(Role::kS, Phase(kPhaseRequest),
             wire::EncodeThinQuery(Role::kR, request.first, params(), pk()));
    return absl::OkStatus();
  }

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    (void)out;
    ASSIGN_OR_RETURN(EncryptedCiphertext res,
                     wire::DecodeThinResponse(in.bytes, Role::kS, pk()));
    ASSIGN_OR_RETURN(BitString m, ThinRetrieve(res, sk(), *secret_,
                                               config().sigma, params()));
    SetOutput(std::move(m));
    return absl::OkStatus();
  }

 private:
  std::optional<OtNSecret> secret_;
};

class ThinSender final : public PartyBase {
 public:
  explicit ThinSender(const Context& ctx) : PartyBase(Role::kS, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(ThinQuery query,
                     wire::DecodeThinQuery(in.bytes, Role::kR, params(), pk()));
    ASSIGN_OR_RETURN(
        EncryptedCiphertext res,
        ThinRespond(inputs().messages, params(), pk(), query, rng()));
    out.Send(Role::kR, Phase(kPhaseResponse),
             wire::EncodeThinResponse(Role::kS, res, pk()));
    return absl::OkStatus();
  }
};

// Supersonic. Phase labels follow the five numbered steps.

class SupersonicReceiver final : public Receiver {
 public:
  using Receiver::Receiver;

  absl::Status Start(Outbox& out) override {
    ASSIGN_OR_RETURN(supersonic::PadKeys keys,
                     supersonic::Setup(rng(), config().sigma));
    out.Send(Role::kS, "phase1", wire::EncodePadKeys(Role::kR, keys));
    keys_.emplace(std::move(keys));
    auto [q1, q2] = supersonic::GenQuery(inputs().s, rng());
    out.Send(Role::kS, "phase2", wire::EncodeIndexShare(Role::kR, q1));
    out.Send(Role::kHelper, "phase2", wire::EncodeIndexShare(Role::kR, q2));
    return absl::OkStatus();
  }

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    (void)out;
    if (!keys_.has_value()) return Unexpected(in);
    ASSIGN_OR_RETURN(BitString filtered,
                     wire::DecodeFilteredCiphertext(in.bytes, Role::kHelper));
    if (filtered.size() != keys_->sigma()) {
      return ProtocolViolationError("filtered ciphertext has the wrong length");
    }
    SetOutput(supersonic::Retrieve(filtered, std::move(*keys_), inputs().s));
    keys_.reset();
    return absl::OkStatus();
  }

 private:
  std::optional<supersonic::PadKeys> keys_;
};

class SupersonicSender final : public PartyBase {
 public:
  explicit SupersonicSender(const Context& ctx) : PartyBase(Role::kS, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    if (type == MessageType::kPadKeys && !keys_.has_value()) {
      ASSIGN_OR_RETURN(supersonic::PadKeys keys,
                       wire::DecodePadKeys(in.bytes, Role::kR));
      keys_.emplace(std::move(keys));
    } else if (type == MessageType::kIndexShare && !q1_.has_value()) {
      ASSIGN_OR_RETURN(BitShare q1, wire::DecodeIndexShare(in.bytes, Role::kR));
      q1_ = q1;
    } else {
      return Unexpected(in);
    }
    if (!keys_.has_value() || !q1_.has_value()) return absl::OkStatus();
    const auto& [m0, m1] = inputs().table.front();
    ASSIGN_OR_RETURN(supersonic::SwappedPair res,
                     supersonic::GenRes(m0, m1, *keys_, *q1_));
    out.Send(Role::kHelper, "phase3", wire::EncodeSwappedPair(Role::kS, res));
    return absl::OkStatus();
  }

 private:
  std::optional<supersonic::PadKeys> keys_;
  std::optional<BitShare> q1_;
};

class SupersonicHelper final : public PartyBase {
 public:
  explicit SupersonicHelper(const Context& ctx)
      : PartyBase(Role::kHelper, ctx) {}

  absl::Status Receive(const Envelope& in, Outbox& out) override {
    ASSIGN_OR_RETURN(MessageType type, TypeOf(in));
    if (type == MessageType::kIndexShare && !q2_.has_value()) {
      ASSIGN_OR_RETURN(BitShare q2, wire::DecodeIndexShare(in.bytes, Role::kR));
      q2_ = q2;
    } else if (type == MessageType::kSwappedPair && !pair_.has_value()) {
      ASSIGN_OR_RETURN(supersonic::SwappedPair pair,
                       wire::DecodeSwappedPair(in.bytes, Role::kS));
      pair_ = std::move(pair);
    } else {
      return Unexpected(in);
    }
    if (!q2_.has_value() || !pair_.has_value()) return absl::OkStatus();
    out.Send(Role::kR, "phase4",
             wire::EncodeFilteredCiphertext(
                 Role::kHelper, supersonic::OblFilter(*pair_, *q2_)));
    return absl::OkStatus();
  }

 private:
  std::optional<BitShare> q2_;
  std::optional<supersonic::SwappedPair> pair_;
};

absl::Status ValidateInputs(const RunConfig& config, const RunInputs& in) {
  if (config.sigma == 0) return ParameterError("sigma must be at least 1");
  if (config.sigma + config.lambda > kMaxOracleBits) {
    return ParameterError("sigma + lambda exceeds the oracle output limit");
  }
  if (in.s.value > 1) return ParameterError("choice bit must be 0 or 1");
  auto check_len = [&](const BitString& m) -> absl::Status {
    if (m.size() != config.sigma) {
      return ParameterError("message length " + std::to_string(m.size()) +
                            " differs from sigma " +
                            std::to_string(config.sigma));
    }
    return absl::OkStatus();
  };
  Protocol p = config.protocol;
  if (p == Protocol::kThin) {
    if (config.n == 0 || in.messages.size() != config.n) {
      return ParameterError("thin client needs exactly n messages");
    }
    if (in.v >= config.n) return ParameterError("choice index v out of range");
    for (const BitString& m : in.messages) RETURN_IF_ERROR(check_len(m));
    return absl::OkStatus();
  }
  size_t rows = IsMultiReceiver(p) ? config.z : 1;
  if (rows == 0 || in.table.size() != rows) {
    return ParameterError("message table needs exactly " +
                          std::to_string(rows) + " rows");
  }
  if (IsMultiReceiver(p) && in.v >= rows) {
    return ParameterError("row index v out of range");
  }
  if (IsUnknownQuery(p) && config.lambda == 0) {
    return ParameterError("lambda must be at least 1");
  }
  for (const auto& [m0, m1] : in.table) {
    RETURN_IF_ERROR(check_len(m0));
    RETURN_IF_ERROR(check_len(m1));
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view ProtocolName(Protocol protocol) {
  switch (protocol) {
    case Protocol::kNaorPinkas:
      return "np";
    case Protocol::kDq:
      return "dq";
    case Protocol::kDuq:
      return "duq";
    case Protocol::kSupersonic:
      return "supersonic";
    case Protocol::kDqMr:
      return "dq-mr";
    case Protocol::kDuqMr:
      return "duq-mr";
    case Protocol::kThin:
      return "thin";
  }
  return "?";
}

absl::StatusOr<Protocol> ProtocolFromName(std::string_view name) {
  for (Protocol p : kAllProtocols) {
    if (ProtocolName(p) == name) return p;
  }
  if (name == "np-ot") return Protocol::kNaorPinkas;
  if (name == "dq-ot") return Protocol::kDq;
  if (name == "duq-ot") return Protocol::kDuq;
  return ParameterError(std::string("unknown protocol ").append(name));
}

absl::StatusOr<GroupParams> RunParams(const RunConfig& config) {
  if (config.params.has_value()) return *config.params;
  Drbg rng(config.seed, "params");
  return GenParams(config.security_bits, rng);
}

size_t AheModulusBits(const RunConfig& config, const GroupParams& params) {
  size_t payload = config.sigma;
  if (IsUnknownQuery(config.protocol)) payload += config.lambda;
  size_t bits = std::max(params.bits(), payload) + 64;
  return (bits + 15) / 16 * 16;
}

absl::StatusOr<AheKeys> RunAheKeys(const RunConfig& config,
                                   const GroupParams& params) {
  if (config.ahe_keys.has_value()) {
    const mpz_class& n = config.ahe_keys->public_key.n();
    mpz_class payload_bound =
        mpz_class(1) << static_cast<mp_bitcnt_t>(config.sigma + config.lambda);
    if (n <= params.p() || n <= payload_bound) {
      return ParameterError("encryption modulus too small for the payload");
    }
    return *config.ahe_keys;
  }
  Drbg rng(config.seed, "ahe");
  return AheKeyGen(AheModulusBits(config, params), rng);
}

RunInputs RandomInputs(const RunConfig& config, RandomSource& rng) {
  RunInputs in;
  in.s = ChoiceBit{rng.Bit()};
  if (config.protocol == Protocol::kThin) {
    for (size_t i = 0; i < config.n; ++i) {
      in.messages.push_back(BitString::Random(rng, config.sigma));
    }
    in.v = config.n == 0
               ? 0
               : static_cast<uint32_t>(
                     RandomBelow(
                         rng, mpz_class(static_cast<unsigned long>(config.n)))
                         .get_ui());
    return in;
  }
  size_t rows = IsMultiReceiver(config.protocol) ? config.z : 1;
  for (size_t i = 0; i < rows; ++i) {
    BitString m0 = BitString::Random(rng, config.sigma);
    BitString m1 = BitString::Random(rng, config.sigma);
    in.table.emplace_back(std::move(m0), std::move(m1));
  }
  if (IsMultiReceiver(config.protocol) && rows > 0) {
    in.v = static_cast<uint32_t>(
        RandomBelow(rng, mpz_class(static_cast<unsigned long>(rows))).get_ui());
  }
  return in;
}

absl::StatusOr<BitString> ExpectedOutput(const RunConfig& config,
                                         const RunInputs& inputs) {
  RETURN_IF_ERROR(ValidateInputs(config, inputs));
  if (config.protocol == Protocol::kThin) return inputs.messages[inputs.v];
  size_t row = IsMultiReceiver(config.protocol) ? inputs.v : 0;
  const auto& [m0, m1] = inputs.table[row];
  return inputs.s.value ? m1 : m0;
}

absl::StatusOr<RunResult> Run(const RunConfig& config,
                              const RunInputs& inputs) {
  RETURN_IF_ERROR(ValidateInputs(config, inputs));
  Context ctx{&config, &inputs, std::nullopt, std::nullopt};
  if (config.protocol != Protocol::kSupersonic) {
    ASSIGN_OR_RETURN(GroupParams params, RunParams(config));
    ctx.params.emplace(std::move(params));
  }
  if (config.protocol == Protocol::kThin ||
      config.protocol == Protocol::kDuqMr) {
    ASSIGN_OR_RETURN(AheKeys keys, RunAheKeys(config, *ctx.params));
    ctx.ahe.emplace(std::move(keys));
  }

  std::unique_ptr<Receiver> receiver;
  std::vector<std::unique_ptr<Party>> others;
  switch (config.protocol) {
    case Protocol::kNaorPinkas:
      receiver = std::make_unique<NpReceiver>(ctx);
      others.push_back(std::make_unique<NpSender>(ctx));
      break;
    case Protocol::kDq:
    case Protocol::kDqMr:
    case Protocol::kDuq:
    case Protocol::kDuqMr:
      receiver = std::make_unique<DelegatedReceiver>(ctx);
      if (IsUnknownQuery(config.protocol)) {
        others.push_back(std::make_unique<ThirdParty>(ctx));
      }
      others.push_back(std::make_unique<HelperOne>(ctx));
      others.push_back(std::make_unique<HelperTwo>(ctx));
      others.push_back(std::make_unique<DelegatedSender>(ctx));
      break;
    case Protocol::kThin:
      receiver = std::make_unique<ThinReceiver>(ctx);
      others.push_back(std::make_unique<ThinSender>(ctx));
      break;
    case Protocol::kSupersonic:
      receiver = std::make_unique<SupersonicReceiver>(ctx);
      others.push_back(std::make_unique<SupersonicSender>(ctx));
      others.push_back(std::make_unique<SupersonicHelper>(ctx));
      break;
  }
  // T acts before R so that its index shares lead the transcript.
  std::vector<Party*> order;
  for (auto& p : others) {
    if (p->role() == Role::kT) order.push_back(p.get());
  }
  order.push_back(receiver.get());
  for (auto& p : others) {
    if (p->role() != Role::kT) order.push_back(p.get());
  }

  ASSIGN_OR_RETURN(std::unique_ptr<Transport> transport,
                   MakeTransport(config.transport));
  ASSIGN_OR_RETURN(Transcript transcript,
                   RunParties(order, *transport, config.delay));
  if (!receiver->output().has_value()) {
    return RetrievalFailureError("run ended without an output at R");
  }
  return RunResult{*receiver->output(), std::move(transcript)};
}

absl::StatusOr<RunResult> DqRun(const GroupParams& params, ChoiceBit s,
                                const BitString& m0, const BitString& m1,
                                uint64_t seed) {
  RunConfig config;
  config.protocol = Protocol::kDq;
  config.sigma = m0.size();
  config.seed = seed;
  config.params = params;
  RunInputs inputs;
  inputs.s = s;
  inputs.table.emplace_back(m0, m1);
  return Run(config, inputs);
}

}  // namespace dqot
